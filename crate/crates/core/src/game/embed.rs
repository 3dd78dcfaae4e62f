//! Backtracking subgraph (not induced) embedding.
//!
//! Isolated vertices of the pattern are ignored: a copy of `F` is a set of
//! host edges forming a graph isomorphic to `F` minus its isolated vertices.

use crate::graph::{Edge, Graph};

/// Pattern vertices in search order, each with its already-placed neighbours.
#[derive(Clone, Debug)]
pub struct Pattern {
    graph: Graph,
    order: Vec<usize>,
}

impl Pattern {
    pub fn new(f: &Graph) -> Self {
        let mut order: Vec<usize> = Vec::new();
        let mut placed = vec![false; f.order()];
        let live = (0..f.order()).filter(|&v| f.degree(v) > 0).count();
        while order.len() < live {
            // most already-placed neighbours, then highest degree, then lowest label
            let next = (0..f.order())
                .filter(|&v| !placed[v] && f.degree(v) > 0)
                .max_by_key(|&v| {
                    let back = f.neighbors(v).iter().filter(|&&w| placed[w]).count();
                    (back, f.degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced live vertex");
            placed[next] = true;
            order.push(next);
        }
        Pattern {
            graph: f.clone(),
            order,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn size(&self) -> usize {
        self.graph.size()
    }
}

/// Host graph given by an edge list over `0..n`.
pub struct Host {
    n: usize,
    matrix: Vec<bool>,
    adj: Vec<Vec<usize>>,
}

impl Host {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut matrix = vec![false; n * n];
        let mut adj = vec![Vec::new(); n];
        for e in edges {
            let (u, v) = (e.lo(), e.hi());
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
            adj[u].push(v);
            adj[v].push(u);
        }
        Host { n, matrix, adj }
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }
}

/// A copy of the pattern in the host, as host edges. With `through`, only
/// copies using that host edge are considered.
pub fn find_copy(pattern: &Pattern, host: &Host, through: Option<Edge>) -> Option<Vec<Edge>> {
    let f = &pattern.graph;
    if f.size() > host.size() {
        return None;
    }
    let mut image = vec![usize::MAX; f.order()];
    let mut used = vec![false; host.n];
    let found = match through {
        None => extend(pattern, host, &mut image, &mut used, 0),
        Some(e) => {
            if !host.adjacent(e.lo(), e.hi()) {
                return None;
            }
            f.edges().iter().any(|pe| {
                [(e.lo(), e.hi()), (e.hi(), e.lo())]
                    .into_iter()
                    .any(|(x, y)| {
                        image[pe.lo()] = x;
                        image[pe.hi()] = y;
                        used[x] = true;
                        used[y] = true;
                        let ok = f.degree(pe.lo()) <= host.adj[x].len()
                            && f.degree(pe.hi()) <= host.adj[y].len()
                            && extend(pattern, host, &mut image, &mut used, 0);
                        if !ok {
                            image[pe.lo()] = usize::MAX;
                            image[pe.hi()] = usize::MAX;
                            used[x] = false;
                            used[y] = false;
                        }
                        ok
                    })
            })
        }
    };
    found.then(|| f.edges().iter().map(|e| e.map(|v| image[v])).collect())
}

fn extend(
    pattern: &Pattern,
    host: &Host,
    image: &mut [usize],
    used: &mut [bool],
    k: usize,
) -> bool {
    let f = &pattern.graph;
    let Some(&p) = pattern.order[k..].iter().find(|&&p| image[p] == usize::MAX) else {
        return true;
    };
    let anchor = f
        .neighbors(p)
        .iter()
        .find(|&&q| image[q] != usize::MAX)
        .map(|&q| image[q]);
    let candidates: Box<dyn Iterator<Item = usize>> = match anchor {
        Some(a) => Box::new(host.adj[a].iter().copied()),
        None => Box::new(0..host.n),
    };
    for x in candidates {
        if used[x] || host.adj[x].len() < f.degree(p) {
            continue;
        }
        if !f
            .neighbors(p)
            .iter()
            .all(|&q| image[q] == usize::MAX || host.adjacent(x, image[q]))
        {
            continue;
        }
        image[p] = x;
        used[x] = true;
        if extend(pattern, host, image, used, k + 1) {
            return true;
        }
        image[p] = usize::MAX;
        used[x] = false;
    }
    false
}
