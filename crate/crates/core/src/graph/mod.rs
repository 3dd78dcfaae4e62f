//! Undirected simple graphs on dense vertex labels `0..order`.
//!
//! Every construction in this crate documents its vertex labeling so that
//! permutations and strategy tables computed against a graph are stable
//! across runs.

mod families;
pub mod graph6;
mod products;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use families::{make_family, FamilySpec, Platonic};
pub use products::{
    aux_product, cartesian, categorical, complement, lexicographic, subdivision, sum, AuxKind,
};

/// Errors raised while constructing or decoding graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {{{0},{1}}} listed twice")]
    DuplicateEdge(usize, usize),
    #[error("edge endpoint {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("graph6 parse error at byte {position}: {reason}")]
    Graph6 { position: usize, reason: String },
    #[error("json graph error: {0}")]
    Json(String),
}

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge(usize, usize);

impl Edge {
    /// Builds the normalized edge `{u, v}`. Panics on `u == v`.
    pub fn new(u: usize, v: usize) -> Self {
        assert_ne!(u, v, "an edge needs two distinct endpoints");
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> [usize; 2] {
        [self.0, self.1]
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// True when the two edges share an endpoint (and are distinct).
    pub fn is_adjacent(self, other: Edge) -> bool {
        self != other && (other.contains(self.0) || other.contains(self.1))
    }

    /// The endpoint that is not `v`, if `v` is an endpoint.
    pub fn other(self, v: usize) -> Option<usize> {
        if self.0 == v {
            Some(self.1)
        } else if self.1 == v {
            Some(self.0)
        } else {
            None
        }
    }

    /// Image under a vertex map.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Edge {
        Edge::new(f(self.0), f(self.1))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

impl Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.0, self.1].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [u, v] = <[usize; 2]>::deserialize(d)?;
        if u == v {
            return Err(serde::de::Error::custom(format!("loop at vertex {u}")));
        }
        Ok(Edge::new(u, v))
    }
}

/// Immutable undirected simple graph.
///
/// Edges are kept sorted lexicographically; the position of an edge in
/// [`Graph::edges`] is its *edge index*, used by the game engine and solvers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<Edge>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    pub fn new(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            list.push(Edge::new(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].lo(), w[0].hi()));
        }
        Ok(Self::from_sorted(order, list))
    }

    /// Builds a graph from edges that may repeat; duplicates are merged.
    pub(crate) fn from_edge_set(order: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        debug_assert!(edges.iter().all(|e| e.hi() < order));
        Self::from_sorted(order, edges)
    }

    fn from_sorted(order: usize, edges: Vec<Edge>) -> Self {
        let mut neighbors = vec![Vec::new(); order];
        for e in &edges {
            neighbors[e.lo()].push(e.hi());
            neighbors[e.hi()].push(e.lo());
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Graph {
            order,
            edges,
            neighbors,
        }
    }

    /// The graph on `order` vertices with no edges.
    pub fn empty(order: usize) -> Self {
        Self::from_sorted(order, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.order && v < self.order && self.neighbors[u].binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.lo(), e.hi())
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.neighbors[v].is_empty()
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &w in &self.neighbors[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.neighbors[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.order > 0 && self.components().len() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.order];
        for s in 0..self.order {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u] == Some(true);
                for &w in &self.neighbors[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            stack.push(w);
                        }
                        Some(sw) if sw == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// The subgraph formed by a set of edges, compacted onto its
    /// non-isolated vertices (labels assigned in increasing original order).
    pub fn edge_subgraph<'a>(&self, edges: impl IntoIterator<Item = &'a Edge>) -> Graph {
        let chosen: Vec<Edge> = edges.into_iter().copied().collect();
        let mut used: Vec<usize> = chosen.iter().flat_map(|e| e.endpoints()).collect();
        used.sort_unstable();
        used.dedup();
        let relabel = |v: usize| used.binary_search(&v).expect("endpoint is used");
        Graph::from_edge_set(used.len(), chosen.iter().map(|e| e.map(relabel)).collect())
    }

    /// Applies a vertex relabeling `v -> image[v]` (which must be a bijection).
    pub fn relabel(&self, image: &[usize]) -> Graph {
        assert_eq!(image.len(), self.order);
        Graph::from_edge_set(
            self.order,
            self.edges.iter().map(|e| e.map(|v| image[v])).collect(),
        )
    }

    /// The graph with one extra vertex adjacent to every existing vertex.
    pub fn with_apex(&self) -> Graph {
        let n = self.order;
        let mut edges = self.edges.clone();
        edges.extend((0..n).map(|v| Edge::new(v, n)));
        Graph::from_edge_set(n + 1, edges)
    }

    /// The graph with vertex `v` deleted; later labels shift down by one.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let shift = |w: usize| if w > v { w - 1 } else { w };
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.contains(v))
            .map(|e| e.map(shift))
            .collect();
        Graph::from_edge_set(self.order - 1, edges)
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Self, GraphError> {
        graph6::decode(text)
    }

    pub fn to_json(&self) -> JsonGraph {
        JsonGraph {
            order: self.order,
            edges: self.edges.iter().map(|e| [e.lo(), e.hi()]).collect(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [", self.order)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}-{}", e.lo(), e.hi())?;
        }
        f.write_str("])")
    }
}

/// `{"order": n, "edges": [[u, v], ...]}` with `u < v`, edges sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonGraph {
    pub order: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<JsonGraph> for Graph {
    type Error = GraphError;

    fn try_from(j: JsonGraph) -> Result<Self, GraphError> {
        Graph::new(j.order, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = JsonGraph::deserialize(d)?;
        Graph::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    pub fn from_json_str(text: &str) -> Result<Self, GraphError> {
        let j: JsonGraph =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        Graph::try_from(j)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("graph json serializes")
    }
}
