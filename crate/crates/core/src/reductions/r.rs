//! `R(G)`: subdivide every edge, then glue a 3-star by a leaf onto every
//! vertex. Original vertices keep labels `0..n`, the subdivision vertex of
//! the `i`-th edge is `n + i`, and the star at `v` is `c, l1, l2` from
//! `n + m + 3v`, with edges `v-c, c-l1, c-l2`.
//!
//! Isolated vertices get a star too. Without it an isolated vertex could
//! stay fixed for free: `K2 + K1` has no fixed-point-free involution, but
//! its reduction with bare isolated vertices has a fixed-edge-free one.

use serde::Serialize;

use crate::budget::{Budget, Exhausted};
use crate::graph::{subdivision, Edge, Graph};
use crate::morphisms::{
    find_fixed_edge_free_involution_within, find_fixed_point_free_involution_within,
    VertexPermutation,
};

pub fn reduce_r(g: &Graph) -> Graph {
    with_stars(g, (0..g.order()).collect())
}

/// The construction with stars on non-isolated vertices only.
pub fn reduce_r_non_isolated(g: &Graph) -> Graph {
    with_stars(g, (0..g.order()).filter(|&v| !g.is_isolated(v)).collect())
}

fn with_stars(g: &Graph, bases: Vec<usize>) -> Graph {
    let s = subdivision(g);
    let first = s.order();
    let mut edges: Vec<Edge> = s.edges().to_vec();
    for (k, &v) in bases.iter().enumerate() {
        let c = first + 3 * k;
        edges.extend([Edge::new(v, c), Edge::new(c, c + 1), Edge::new(c, c + 2)]);
    }
    Graph::from_edge_set(first + 3 * bases.len(), edges)
}

/// The involution of `reduce_r(g)` induced by a fixed-point-free
/// involution `phi` of `g`: subdivision and star vertices follow their
/// edge and base vertex.
pub fn lift_involution(g: &Graph, phi: &VertexPermutation) -> VertexPermutation {
    let n = g.order();
    let m = g.size();
    let mut images: Vec<usize> = (0..n).map(|v| phi.apply(v)).collect();
    for e in g.edges() {
        let i = g
            .edge_index(phi.apply_edge(*e))
            .expect("phi is an automorphism");
        images.push(n + i);
    }
    for v in 0..n {
        let c = n + m + 3 * phi.apply(v);
        images.extend([c, c + 1, c + 2]);
    }
    VertexPermutation::new(images).expect("lift of a permutation")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionCheck {
    pub point_free: Option<VertexPermutation>,
    pub edge_free: Option<VertexPermutation>,
}

impl ReductionCheck {
    pub fn agrees(&self) -> bool {
        self.point_free.is_some() == self.edge_free.is_some()
    }
}

/// Both searches, on `g` and on `reduce_r(g)`.
pub fn reduction_correctness_check(
    g: &Graph,
    budget: &Budget,
) -> Result<ReductionCheck, Exhausted> {
    Ok(ReductionCheck {
        point_free: find_fixed_point_free_involution_within(g, budget)?,
        edge_free: find_fixed_edge_free_involution_within(&reduce_r(g), budget)?,
    })
}
