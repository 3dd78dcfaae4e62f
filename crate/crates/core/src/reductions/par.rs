//! PAR and graph isomorphism.
//!
//! `gi_to_par` turns a GI question `(G0, G1)` into a PAR instance with
//! `G = G0 + G1`, `H = G0 + G0` and `β` swapping the copies. Both inputs are
//! first made connected (complement) and of odd size (an apex joined to every
//! vertex, at most twice), so that any fixed-edge-free involution of `G`
//! swaps the two components. The plan is read off `G0` and applied to both
//! graphs alike, which keeps the transform an isomorphism invariant.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{complement, sum, Graph};
use crate::morphisms::{
    classify_involution, find_isomorphism, is_isomorphism, MorphismError, VertexPermutation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Transform {
    Complement,
    /// A new vertex, labelled last, adjacent to all others.
    Apex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParInstance {
    pub g: Graph,
    pub h: Graph,
    pub beta: VertexPermutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParError {
    #[error("beta: {0}")]
    Beta(#[from] MorphismError),
    #[error("beta is not a fixed-edge-free involution of h")]
    BadBeta,
    #[error("g and h are not isomorphic")]
    NoIsomorphism,
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
}

impl ParInstance {
    pub fn new(g: Graph, h: Graph, beta: VertexPermutation) -> Result<Self, ParError> {
        let report = classify_involution(&h, &beta)?;
        if !report.involutory || !report.fixed_edges.is_empty() {
            return Err(ParError::BadBeta);
        }
        Ok(ParInstance { g, h, beta })
    }
}

/// A PAR instance with the transforms applied to each input graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GiToPar {
    pub instance: ParInstance,
    pub transform_log: Vec<Transform>,
    /// Order of the inputs before the transforms.
    pub input_order: usize,
}

#[derive(Serialize, Deserialize)]
struct GiToParJson {
    g: String,
    h: String,
    beta: VertexPermutation,
    transform_log: Vec<Transform>,
    input_order: usize,
}

impl Serialize for GiToPar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GiToParJson {
            g: self.instance.g.to_graph6(),
            h: self.instance.h.to_graph6(),
            beta: self.instance.beta.clone(),
            transform_log: self.transform_log.clone(),
            input_order: self.input_order,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GiToPar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = GiToParJson::deserialize(d)?;
        let g = Graph::from_graph6(&raw.g).map_err(D::Error::custom)?;
        let h = Graph::from_graph6(&raw.h).map_err(D::Error::custom)?;
        let instance = ParInstance::new(g, h, raw.beta).map_err(D::Error::custom)?;
        Ok(GiToPar {
            instance,
            transform_log: raw.transform_log,
            input_order: raw.input_order,
        })
    }
}

fn plan(g: &Graph) -> Vec<Transform> {
    let mut log = Vec::new();
    let mut current = g.clone();
    if !current.is_connected() {
        log.push(Transform::Complement);
        current = complement(&current);
    }
    while current.size().is_multiple_of(2) {
        log.push(Transform::Apex);
        current = current.with_apex();
    }
    log
}

fn apply(g: &Graph, log: &[Transform]) -> Graph {
    log.iter().fold(g.clone(), |g, t| match t {
        Transform::Complement => complement(&g),
        Transform::Apex => g.with_apex(),
    })
}

pub fn gi_to_par(g0: &Graph, g1: &Graph) -> GiToPar {
    let log = plan(g0);
    let a = apply(g0, &log);
    let b = apply(g1, &log);
    let n = a.order();
    let beta =
        VertexPermutation::new((0..2 * n).map(|v| (v + n) % (2 * n)).collect()).expect("copy swap");
    let instance = ParInstance {
        g: sum(&a, &b),
        h: sum(&a, &a),
        beta,
    };
    GiToPar {
        instance,
        transform_log: log,
        input_order: g0.order(),
    }
}

/// `α = π⁻¹ ∘ β ∘ π` for an isomorphism `π: G → H`.
pub fn par_via_iso(instance: &ParInstance) -> Result<VertexPermutation, ParError> {
    let pi = find_isomorphism(&instance.g, &instance.h).ok_or(ParError::NoIsomorphism)?;
    Ok(pi.inverse().compose(&instance.beta).compose(&pi))
}

/// Reads an isomorphism `G0 → G1` off a fixed-edge-free involution of `G`.
pub fn recover_isomorphism(
    alpha: &VertexPermutation,
    reduction: &GiToPar,
) -> Result<VertexPermutation, ParError> {
    let g = &reduction.instance.g;
    let invalid = |why: &str| ParError::InvalidCertificate(why.to_string());
    let report =
        classify_involution(g, alpha).map_err(|e| ParError::InvalidCertificate(e.to_string()))?;
    if !report.involutory {
        return Err(invalid("not an involution"));
    }
    if !report.fixed_edges.is_empty() {
        return Err(invalid("fixes an edge"));
    }
    let n = g.order() / 2;
    if (0..n).any(|v| alpha.apply(v) < n) {
        return Err(invalid("acts within a component"));
    }
    let component = |offset: usize| {
        let edges = g
            .edges()
            .iter()
            .filter(|e| (e.lo() >= n) == (offset == n))
            .map(|e| (e.lo() - offset, e.hi() - offset));
        Graph::new(n, edges).expect("component of the sum")
    };
    let (mut a, mut b) = (component(0), component(n));
    let mut map: Vec<usize> = (0..n).map(|v| alpha.apply(v) - n).collect();
    // peel apexes, newest first; any universal vertex may stand in for one
    for t in reduction.transform_log.iter().rev() {
        match t {
            Transform::Apex => {
                let apex = map.len() - 1;
                let other = map.iter().position(|&x| x == apex).expect("bijection");
                map.swap(apex, other);
                map.pop();
                a = a.without_vertex(apex);
                b = b.without_vertex(apex);
            }
            Transform::Complement => {
                a = complement(&a);
                b = complement(&b);
            }
        }
    }
    let map =
        VertexPermutation::new(map).map_err(|e| ParError::InvalidCertificate(e.to_string()))?;
    if !is_isomorphism(&a, &b, &map) {
        return Err(invalid("recovered map is not an isomorphism"));
    }
    Ok(map)
}
