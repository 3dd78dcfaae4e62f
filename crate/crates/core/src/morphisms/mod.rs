//! Vertex permutations, automorphisms, involution searches, isomorphism and
//! canonical forms.

mod antipodal;
mod canon;
mod involution;
mod iso;
pub(crate) mod refine;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph};

pub use antipodal::antipodal_involution;
pub use canon::{canonical_form, canonical_labeling, CanonicalForm, ColoredGraph};
pub use involution::{
    find_fixed_edge_free_involution, find_fixed_edge_free_involution_within,
    find_fixed_point_free_involution, find_fixed_point_free_involution_within,
};
pub use iso::{find_isomorphism, is_isomorphism};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("permutation has length {found}, graph has order {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("not a bijection on 0..{0}")]
    NotBijection(usize),
    #[error("permutation is not an automorphism")]
    NotAutomorphism,
    #[error("graph is disconnected")]
    Disconnected,
}

/// A bijection on `0..n`, stored as the image array: `p[v]` is the image of `v`.
///
/// Serializes as a plain JSON array of images.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexPermutation(Vec<usize>);

impl VertexPermutation {
    pub fn new(images: Vec<usize>) -> Result<Self, MorphismError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(MorphismError::NotBijection(n));
            }
        }
        Ok(VertexPermutation(images))
    }

    pub fn identity(n: usize) -> Self {
        VertexPermutation((0..n).collect())
    }

    /// `v -> v + k (mod n)`.
    pub fn rotation(n: usize, k: usize) -> Self {
        VertexPermutation((0..n).map(|v| (v + k) % n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// The induced edge map.
    pub fn apply_edge(&self, e: Edge) -> Edge {
        e.map(|v| self.0[v])
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &VertexPermutation) -> VertexPermutation {
        assert_eq!(self.len(), other.len());
        VertexPermutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> VertexPermutation {
        let mut inv = vec![0; self.len()];
        for (v, &img) in self.0.iter().enumerate() {
            inv[img] = v;
        }
        VertexPermutation(inv)
    }

    pub fn is_involution(&self) -> bool {
        self.0.iter().enumerate().all(|(v, &w)| self.0[w] == v)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.0[v] == v).collect()
    }

    /// `(u1, u2) ↦ (self(u1), other(u2))` on the row-major pair labels of
    /// the product constructions.
    pub fn product(&self, other: &VertexPermutation) -> VertexPermutation {
        let n2 = other.len();
        VertexPermutation(
            (0..self.len() * n2)
                .map(|v| self.0[v / n2] * n2 + other.0[v % n2])
                .collect(),
        )
    }

    /// `self` on the first summand, `other` on the second.
    pub fn disjoint_sum(&self, other: &VertexPermutation) -> VertexPermutation {
        let n1 = self.len();
        VertexPermutation(
            self.0
                .iter()
                .copied()
                .chain(other.0.iter().map(|&v| v + n1))
                .collect(),
        )
    }
}

impl<'de> Deserialize<'de> for VertexPermutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        VertexPermutation::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for VertexPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

fn check_len(g: &Graph, p: &VertexPermutation) -> Result<(), MorphismError> {
    if p.len() != g.order() {
        return Err(MorphismError::LengthMismatch {
            expected: g.order(),
            found: p.len(),
        });
    }
    Ok(())
}

/// Whether `p` preserves adjacency in both directions. Since `p` is a
/// bijection on a finite vertex set, mapping every edge onto an edge suffices.
pub fn is_automorphism(g: &Graph, p: &VertexPermutation) -> Result<bool, MorphismError> {
    check_len(g, p)?;
    Ok(g.edges().iter().all(|&e| g.contains_edge(p.apply_edge(e))))
}

/// Fixed elements of an automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionReport {
    pub involutory: bool,
    pub fixed_vertices: Vec<usize>,
    /// Edges `e` with `φ'(e) = e`, including edges whose endpoints are swapped.
    pub fixed_edges: Vec<Edge>,
}

impl InvolutionReport {
    /// Involutory with no fixed edge: the automorphism drives a symmetric strategy.
    pub fn is_fixed_edge_free_involution(&self) -> bool {
        self.involutory && self.fixed_edges.is_empty()
    }

    pub fn is_fixed_point_free_involution(&self) -> bool {
        self.involutory && self.fixed_vertices.is_empty()
    }
}

pub fn classify_involution(
    g: &Graph,
    p: &VertexPermutation,
) -> Result<InvolutionReport, MorphismError> {
    if !is_automorphism(g, p)? {
        return Err(MorphismError::NotAutomorphism);
    }
    Ok(InvolutionReport {
        involutory: p.is_involution(),
        fixed_vertices: p.fixed_points(),
        fixed_edges: g
            .edges()
            .iter()
            .copied()
            .filter(|&e| p.apply_edge(e) == e)
            .collect(),
    })
}
