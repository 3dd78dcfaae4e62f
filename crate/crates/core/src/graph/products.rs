//! Graph products, sums, subdivision and complement.
//!
//! Product vertices are pairs `(u1, u2)` encoded row-major as `u1 * n2 + u2`.

use super::{Edge, Graph};

/// The auxiliary products used to split the Cartesian and lexicographic
/// products into edge-disjoint layers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AuxKind {
    /// `{u1,v1} ∈ E1` and `u2 = v2`.
    One,
    /// `{u1,v1} ∈ E1` and `u2 ≠ v2`.
    Two,
    /// `u1 = v1` and `{u2,v2} ∈ E2`.
    Three,
}

fn pair(n2: usize) -> impl Fn(usize, usize) -> usize {
    move |a, b| a * n2 + b
}

/// Copies of `g2` along every vertex of `g1`.
fn fibre_edges(g1: &Graph, g2: &Graph, out: &mut Vec<Edge>) {
    let p = pair(g2.order());
    for u1 in 0..g1.order() {
        for e in g2.edges() {
            out.push(Edge::new(p(u1, e.lo()), p(u1, e.hi())));
        }
    }
}

/// Edges `{(u1,x),(v1,y)}` for `{u1,v1} ∈ E1`, with `x = y` or `x ≠ y`.
fn base_edges(g1: &Graph, g2: &Graph, equal: bool, out: &mut Vec<Edge>) {
    let n2 = g2.order();
    let p = pair(n2);
    for e in g1.edges() {
        for x in 0..n2 {
            for y in 0..n2 {
                if (x == y) == equal {
                    out.push(Edge::new(p(e.lo(), x), p(e.hi(), y)));
                }
            }
        }
    }
}

pub fn aux_product(g1: &Graph, g2: &Graph, kind: AuxKind) -> Graph {
    let mut edges = Vec::new();
    match kind {
        AuxKind::One => base_edges(g1, g2, true, &mut edges),
        AuxKind::Two => base_edges(g1, g2, false, &mut edges),
        AuxKind::Three => fibre_edges(g1, g2, &mut edges),
    }
    Graph::from_edge_set(g1.order() * g2.order(), edges)
}

pub fn cartesian(g1: &Graph, g2: &Graph) -> Graph {
    let mut edges = Vec::new();
    base_edges(g1, g2, true, &mut edges);
    fibre_edges(g1, g2, &mut edges);
    Graph::from_edge_set(g1.order() * g2.order(), edges)
}

/// `G1[G2]`: adjacent when the first coordinates are adjacent, or equal
/// with adjacent second coordinates.
pub fn lexicographic(g1: &Graph, g2: &Graph) -> Graph {
    let mut edges = Vec::new();
    base_edges(g1, g2, true, &mut edges);
    base_edges(g1, g2, false, &mut edges);
    fibre_edges(g1, g2, &mut edges);
    Graph::from_edge_set(g1.order() * g2.order(), edges)
}

/// Both coordinates adjacent.
pub fn categorical(g1: &Graph, g2: &Graph) -> Graph {
    let p = pair(g2.order());
    let mut edges = Vec::new();
    for e1 in g1.edges() {
        for e2 in g2.edges() {
            edges.push(Edge::new(p(e1.lo(), e2.lo()), p(e1.hi(), e2.hi())));
            edges.push(Edge::new(p(e1.lo(), e2.hi()), p(e1.hi(), e2.lo())));
        }
    }
    Graph::from_edge_set(g1.order() * g2.order(), edges)
}

/// Disjoint union; the vertices of `g2` are shifted by `order(g1)`.
pub fn sum(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let mut edges = g1.edges().to_vec();
    edges.extend(g2.edges().iter().map(|e| e.map(|v| v + n1)));
    Graph::from_edge_set(n1 + g2.order(), edges)
}

/// Inserts a new vertex into every edge. The vertex for the `i`-th edge
/// (in sorted edge order) gets label `n + i`.
pub fn subdivision(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges = Vec::with_capacity(2 * g.size());
    for (i, e) in g.edges().iter().enumerate() {
        edges.push(Edge::new(e.lo(), n + i));
        edges.push(Edge::new(e.hi(), n + i));
    }
    Graph::from_edge_set(n + g.size(), edges)
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                edges.push(Edge::new(u, v));
            }
        }
    }
    Graph::from_edge_set(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_family;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn fam(s: &str) -> Graph {
        make_family(&s.parse().unwrap()).unwrap()
    }

    fn k1() -> Graph {
        Graph::empty(1)
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
                let chosen = pairs
                    .iter()
                    .zip(mask)
                    .filter(|(_, keep)| *keep)
                    .map(|(p, _)| *p);
                Graph::new(n, chosen).unwrap()
            })
        })
    }

    /// Products straight from the adjacency definitions.
    fn by_definition(
        g1: &Graph,
        g2: &Graph,
        adjacent: impl Fn(usize, usize, usize, usize) -> bool,
    ) -> Graph {
        let n2 = g2.order();
        let total = g1.order() * n2;
        let mut edges = Vec::new();
        for a in 0..total {
            for b in a + 1..total {
                if adjacent(a / n2, a % n2, b / n2, b % n2) {
                    edges.push((a, b));
                }
            }
        }
        Graph::new(total, edges).unwrap()
    }

    #[test]
    fn small_product_examples() {
        let k2 = fam("K2");
        let sq = cartesian(&k2, &k2);
        assert_eq!((sq.order(), sq.size()), (4, 4));
        assert!(sq.degrees().iter().all(|&d| d == 2));
        assert_eq!(lexicographic(&k2, &k2), fam("K4"));
        let cat = categorical(&k2, &k2);
        assert_eq!((cat.order(), cat.size()), (4, 2));
        assert!(!cat.has_edge(0, 1) && cat.has_edge(0, 3) && cat.has_edge(1, 2));
        let k3e = fam("K3+e");
        assert_eq!(cartesian(&k3e, &k1()), k3e);
        assert_eq!(lexicographic(&k1(), &k3e), k3e);
        assert_eq!(categorical(&k3e, &k1()).size(), 0);
    }

    #[test]
    fn products_with_triangle_plus_edge() {
        let k3e = fam("K3+e");
        let k2 = fam("K2");
        let c = cartesian(&k3e, &k2);
        assert_eq!((c.order(), c.size()), (8, 12));
        let c = cartesian(&k3e, &fam("P2"));
        assert_eq!((c.order(), c.size()), (12, 20));
        let lex = lexicographic(&fam("P2"), &k3e);
        assert_eq!((lex.order(), lex.size()), (12, 44));
        let mut degs = lex.degrees();
        degs.sort_unstable();
        assert_eq!(&degs[8..], &[9, 10, 10, 11]);
        assert!(degs[..8].iter().all(|&d| d <= 7));
        let cat = categorical(&k3e, &k3e);
        let degs = cat.degrees();
        assert_eq!(degs.iter().filter(|&&d| d == 9).count(), 1);
        assert!(degs.iter().filter(|&&d| d != 9).all(|&d| d <= 6));
    }

    #[test]
    fn sum_subdivision_complement() {
        let s = sum(&fam("K3"), &fam("P3"));
        assert_eq!((s.order(), s.size()), (7, 6));
        assert_eq!(sum(&fam("C5"), &Graph::empty(0)), fam("C5"));
        let sk2 = subdivision(&fam("K2"));
        assert_eq!(sk2, Graph::new(3, [(0, 2), (1, 2)]).unwrap());
        let sc4 = subdivision(&fam("C4"));
        assert_eq!((sc4.order(), sc4.size()), (8, 8));
        assert!(sc4.is_connected() && sc4.degrees().iter().all(|&d| d == 2));
        let sk3 = subdivision(&fam("K3"));
        assert!(sk3.is_connected() && sk3.degrees().iter().all(|&d| d == 2) && sk3.order() == 6);
        assert_eq!(complement(&fam("K5")).size(), 0);
    }

    #[test]
    fn complement_of_disconnected_is_connected_up_to_five_vertices() {
        for n in 1..=5 {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let g = Graph::new(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, p)| *p),
                )
                .unwrap();
                if !g.is_connected() {
                    assert!(complement(&g).is_connected(), "{g:?}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn products_match_definitions(g1 in arb_graph(5), g2 in arb_graph(5)) {
            let (n1, n2) = (g1.order(), g2.order());
            let (m1, m2) = (g1.size(), g2.size());
            let e1 = |a: usize, b: usize| g1.has_edge(a, b);
            let e2 = |a: usize, b: usize| g2.has_edge(a, b);

            let cart = cartesian(&g1, &g2);
            prop_assert_eq!(&cart, &by_definition(&g1, &g2, |u1, u2, v1, v2| (u1 == v1 && e2(u2, v2)) || (u2 == v2 && e1(u1, v1))));
            prop_assert_eq!(cart.size(), m1 * n2 + n1 * m2);

            let lex = lexicographic(&g1, &g2);
            prop_assert_eq!(&lex, &by_definition(&g1, &g2, |u1, u2, v1, v2| e1(u1, v1) || (u1 == v1 && e2(u2, v2))));
            prop_assert_eq!(lex.size(), m1 * n2 * n2 + n1 * m2);

            let cat = categorical(&g1, &g2);
            prop_assert_eq!(&cat, &by_definition(&g1, &g2, |u1, u2, v1, v2| e1(u1, v1) && e2(u2, v2)));
            prop_assert_eq!(cat.size(), 2 * m1 * m2);

            for p in [&cart, &lex, &cat] {
                prop_assert_eq!(p.order(), n1 * n2);
            }
        }

        #[test]
        fn aux_products_partition_edges(g1 in arb_graph(5), g2 in arb_graph(5)) {
            let sets: Vec<HashSet<Edge>> = [AuxKind::One, AuxKind::Two, AuxKind::Three]
                .iter()
                .map(|&k| aux_product(&g1, &g2, k).edges().iter().copied().collect())
                .collect();
            for i in 0..3 {
                for j in i + 1..3 {
                    prop_assert!(sets[i].is_disjoint(&sets[j]));
                }
            }
            let cart: HashSet<Edge> = cartesian(&g1, &g2).edges().iter().copied().collect();
            let lex: HashSet<Edge> = lexicographic(&g1, &g2).edges().iter().copied().collect();
            prop_assert_eq!(&cart, &sets[0].union(&sets[2]).copied().collect());
            let all: HashSet<Edge> = sets.iter().flatten().copied().collect();
            prop_assert_eq!(lex, all);
        }

        #[test]
        fn subdivision_is_bipartite_with_double_size(g in arb_graph(7)) {
            let s = subdivision(&g);
            prop_assert!(s.is_bipartite());
            prop_assert_eq!(s.size(), 2 * g.size());
            prop_assert_eq!(s.order(), g.order() + g.size());
        }

        #[test]
        fn complement_is_an_involution(g in arb_graph(7)) {
            prop_assert_eq!(complement(&complement(&g)), g);
        }
    }
}
