//! Canonical labelling by colour refinement and individualization.
//!
//! The search tree is the usual one: refine, pick the first non-singleton
//! cell, individualize each of its vertices in turn. Every leaf is a discrete
//! ordered partition, i.e. a relabelling, and the certificate of a leaf is
//! the relabelled label matrix. The minimum certificate wins. Two pruning
//! rules keep symmetric inputs cheap: a leaf whose certificate equals the
//! first or the best one yields an automorphism, and the search backjumps to
//! where the two paths diverge; at each node, children in the same orbit of
//! the automorphisms found so far (those fixing the current path) are skipped.

use std::fmt;

use super::refine::{first_nontrivial_cell, individualize, refine, LabeledAdjacency};
use super::VertexPermutation;
use crate::graph::Graph;

/// A graph with vertex colours and edge labels in `1..=3` (`0` is a non-edge).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    colors: Vec<u32>,
    labels: Vec<u8>,
}

impl ColoredGraph {
    pub const MAX_LABEL: u8 = 3;

    pub fn new(n: usize) -> Self {
        ColoredGraph {
            n,
            colors: vec![0; n],
            labels: vec![0; n * n],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut c = Self::new(g.order());
        for e in g.edges() {
            c.set_label(e.lo(), e.hi(), 1);
        }
        c
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn set_label(&mut self, u: usize, v: usize, label: u8) {
        assert!(
            u != v && label <= Self::MAX_LABEL,
            "bad label {label} on {u}-{v}"
        );
        self.labels[u * self.n + v] = label;
        self.labels[v * self.n + u] = label;
    }

    pub fn label(&self, u: usize, v: usize) -> u8 {
        self.labels[u * self.n + v]
    }

    pub fn set_color(&mut self, v: usize, color: u32) {
        self.colors[v] = color;
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    fn adjacency(&self) -> LabeledAdjacency {
        (0..self.n)
            .map(|u| {
                (0..self.n)
                    .filter_map(|v| Some((v, self.label(u, v))).filter(|&(_, l)| l > 0))
                    .collect()
            })
            .collect()
    }

    /// `labeling[v]` is the canonical position of `v`.
    pub fn canonical_labeling(&self) -> VertexPermutation {
        Search::run(self).1
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        Search::run(self).0
    }

    /// Form and labelling from one search.
    pub fn canonize(&self) -> (CanonicalForm, VertexPermutation) {
        Search::run(self)
    }
}

/// An isomorphism invariant that is also complete: equal forms mean
/// isomorphic (coloured, labelled) graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: u32,
    colors: Box<[u32]>,
    /// Upper triangle in canonical order, 2 bits per pair.
    packed: Box<[u64]>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Edge labels of the canonical relabelling, row-major over `i < j`.
    pub fn pair_labels(&self) -> impl Iterator<Item = u8> + '_ {
        let n = self.order as usize;
        (0..n * n.saturating_sub(1) / 2)
            .map(move |k| ((self.packed[k / 32] >> (2 * (k % 32))) & 3) as u8)
    }

    /// The canonical representative as a plain graph (labels ignored).
    pub fn to_graph(&self) -> Graph {
        let n = self.order as usize;
        let mut edges = Vec::new();
        let mut labels = self.pair_labels();
        for i in 0..n {
            for j in i + 1..n {
                if labels.next() != Some(0) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(n, edges).expect("canonical form holds a simple graph")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({}:", self.order)?;
        for l in self.pair_labels() {
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    ColoredGraph::from_graph(g).canonical_form()
}

pub fn canonical_labeling(g: &Graph) -> VertexPermutation {
    ColoredGraph::from_graph(g).canonical_labeling()
}

struct Leaf {
    cert: Vec<u8>,
    path: Vec<usize>,
    /// position -> vertex
    order: Vec<usize>,
}

struct Search<'a> {
    g: &'a ColoredGraph,
    adj: LabeledAdjacency,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn run(g: &'a ColoredGraph) -> (CanonicalForm, VertexPermutation) {
        let mut s = Search {
            g,
            adj: g.adjacency(),
            first: None,
            best: None,
            automorphisms: Vec::new(),
        };
        let mut colors = g.colors.clone();
        refine(&s.adj, &mut colors);
        s.descend(colors, &mut Vec::new());
        let best = s.best.expect("search reaches at least one leaf");
        let mut sorted = g.colors.clone();
        sorted.sort_unstable();
        let mut packed = vec![0u64; best.cert.len().div_ceil(32)];
        for (k, &l) in best.cert.iter().enumerate() {
            packed[k / 32] |= (l as u64) << (2 * (k % 32));
        }
        let mut labeling = vec![0; g.n];
        for (pos, &v) in best.order.iter().enumerate() {
            labeling[v] = pos;
        }
        // the common uncoloured case carries no colour list at all
        let colors: Box<[u32]> = if sorted.iter().all(|&c| c == 0) {
            Box::new([])
        } else {
            sorted.into()
        };
        let form = CanonicalForm {
            order: g.n as u32,
            colors,
            packed: packed.into(),
        };
        (
            form,
            VertexPermutation::new(labeling).expect("leaf order is a bijection"),
        )
    }

    /// Returns `Some(d)` to abandon everything below depth `d`.
    fn descend(&mut self, colors: Vec<u32>, path: &mut Vec<usize>) -> Option<usize> {
        let depth = path.len();
        let Some(cell) = first_nontrivial_cell(&colors) else {
            return self.leaf(&colors, path);
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() && self.same_orbit_as_tried(path, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut child = colors.clone();
            individualize(&mut child, v);
            refine(&self.adj, &mut child);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, colors: &[u32], path: &[usize]) -> Option<usize> {
        let n = self.g.n;
        let mut order = vec![0; n];
        for v in 0..n {
            order[colors[v] as usize] = v;
        }
        let mut cert = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                cert.push(self.g.label(order[i], order[j]));
            }
        }
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.cert == cert {
                // position-wise match: order[i] -> reference.order[i]
                let mut gamma = vec![0; n];
                for i in 0..n {
                    gamma[order[i]] = reference.order[i];
                }
                let d = path
                    .iter()
                    .zip(&reference.path)
                    .take_while(|(a, b)| a == b)
                    .count();
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.automorphisms.push(gamma);
                }
                return Some(d);
            }
        }
        let leaf = Leaf {
            cert,
            path: path.to_vec(),
            order,
        };
        match &self.best {
            Some(b) if b.cert <= leaf.cert => {
                if self.first.is_none() {
                    self.first = Some(leaf);
                }
            }
            _ => {
                if self.first.is_none() {
                    self.first = Some(Leaf {
                        cert: leaf.cert.clone(),
                        path: leaf.path.clone(),
                        order: leaf.order.clone(),
                    });
                }
                self.best = Some(leaf);
            }
        }
        None
    }

    /// Whether `v` is in the orbit of an already explored child under the
    /// automorphisms found so far that fix `path` pointwise.
    fn same_orbit_as_tried(&self, path: &[usize], tried: &[usize], v: usize) -> bool {
        let n = self.g.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if path.iter().all(|&p| gamma[p] == p) {
                for (x, &gx) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gx));
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};
    use crate::morphisms::is_automorphism;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn fam(s: &str) -> Graph {
        make_family(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    fn shuffled(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
        let mut p: Vec<usize> = (0..g.order()).collect();
        p.shuffle(rng);
        g.relabel(&p)
    }

    #[test]
    fn relabelled_graphs_share_forms() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for name in [
            "C5",
            "K3,3",
            "Q3",
            "P6",
            "K3+e",
            "petersen",
            "grid3x4",
            "K6-M",
            "dodecahedron",
            "icosahedron",
        ] {
            let g = match name {
                "petersen" => Graph::new(
                    10,
                    (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]),
                )
                .unwrap(),
                _ => fam(name),
            };
            let f = canonical_form(&g);
            for _ in 0..5 {
                assert_eq!(canonical_form(&shuffled(&g, &mut rng)), f, "{name}");
            }
            let lab = canonical_labeling(&g);
            assert_eq!(
                canonical_form(&g.relabel(lab.images())).to_graph(),
                g.relabel(lab.images())
            );
        }
    }

    #[test]
    fn distinguishes_small_non_isomorphic_graphs() {
        assert_ne!(canonical_form(&fam("K1,3")), canonical_form(&fam("P3")));
        // same degree sequence, different graphs
        let c6 = fam("C6");
        let two_triangles =
            Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_form(&c6), canonical_form(&two_triangles));
    }

    #[test]
    fn five_vertex_census_has_34_classes() {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        let mut classes = HashSet::new();
        for mask in 0u32..1 << 10 {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            classes.insert(canonical_form(&Graph::new(5, edges).unwrap()));
        }
        assert_eq!(classes.len(), 34);
    }

    #[test]
    fn automorphisms_found_during_search_are_genuine() {
        for name in ["K6", "Q3", "K3,4", "C8"] {
            let g = fam(name);
            let c = ColoredGraph::from_graph(&g);
            let mut s = Search {
                g: &c,
                adj: c.adjacency(),
                first: None,
                best: None,
                automorphisms: Vec::new(),
            };
            let mut colors = c.colors.clone();
            refine(&s.adj, &mut colors);
            s.descend(colors, &mut Vec::new());
            assert!(!s.automorphisms.is_empty());
            for a in &s.automorphisms {
                assert!(is_automorphism(&g, &VertexPermutation::new(a.clone()).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn labels_and_colours_matter() {
        let mut a = ColoredGraph::new(3);
        a.set_label(0, 1, 2);
        a.set_label(1, 2, 3);
        let mut b = ColoredGraph::new(3);
        b.set_label(0, 1, 3);
        b.set_label(1, 2, 2);
        assert_eq!(a.canonical_form(), b.canonical_form());
        let mut c = ColoredGraph::new(3);
        c.set_label(0, 1, 2);
        c.set_label(0, 2, 2);
        assert_ne!(a.canonical_form(), c.canonical_form());
        let mut d = a.clone();
        d.set_color(0, 1);
        let mut e = a.clone();
        e.set_color(1, 1);
        assert_ne!(d.canonical_form(), e.canonical_form());
        let mut f = b.clone();
        f.set_color(2, 1);
        assert_eq!(d.canonical_form(), f.canonical_form());
    }
}
