//! Small-graph enumeration and AUTO/SYMM classification.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::symm::{decide_symm_with, SymmOptions, SymmOutcome};
use super::SolveError;
use crate::graph::{Edge, Graph};
use crate::morphisms::{
    canonical_form, find_fixed_edge_free_involution, CanonicalForm, VertexPermutation,
};

/// One graph per isomorphism class, in order of size and then graph6.
///
/// Without `connected_only` the classes are those of graphs on exactly
/// `max_order` vertices, i.e. graphs of order at most `max_order` padded
/// with isolated vertices. With it, connected graphs of order at most
/// `max_order` are listed at their own order.
pub fn enumerate_graphs(
    max_order: usize,
    exact_size: Option<usize>,
    connected_only: bool,
) -> Vec<Graph> {
    assert!(max_order <= 8, "enumeration is limited to 8 vertices");
    let n = max_order;
    let top = exact_size.unwrap_or(n * n.saturating_sub(1) / 2);
    let mut level: Vec<Graph> = vec![Graph::empty(n)];
    let mut found: BTreeMap<(usize, String), Graph> = BTreeMap::new();
    for size in 0..=top {
        if exact_size.is_none_or(|s| s == size) {
            for g in &level {
                let kept = if connected_only {
                    without_isolated(g).filter(Graph::is_connected)
                } else {
                    Some(g.clone())
                };
                if let Some(h) = kept {
                    let h = canonical_form(&h).to_graph();
                    found.insert((size, h.to_graph6()), h);
                }
            }
        }
        if size == top {
            break;
        }
        level = extend(&level);
    }
    found.into_values().collect()
}

/// All classes reachable by adding one edge to a member of `level`.
fn extend(level: &[Graph]) -> Vec<Graph> {
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut next = Vec::new();
    for g in level {
        let n = g.order();
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(u, v) {
                    continue;
                }
                let edges = g.edges().iter().map(|e| (e.lo(), e.hi())).chain([(u, v)]);
                let h = Graph::new(n, edges).expect("valid edge");
                let form = canonical_form(&h);
                if seen.insert(form.clone()) {
                    next.push(form.to_graph());
                }
            }
        }
    }
    next
}

/// Drops isolated vertices; `None` leaves nothing but a single vertex for
/// the edgeless graph.
fn without_isolated(g: &Graph) -> Option<Graph> {
    if g.size() == 0 {
        return (g.order() > 0).then(|| Graph::empty(1));
    }
    let mut index = vec![usize::MAX; g.order()];
    let mut k = 0;
    for (v, slot) in index.iter_mut().enumerate() {
        if !g.is_isolated(v) {
            *slot = k;
            k += 1;
        }
    }
    Some(
        Graph::new(k, g.edges().iter().map(|e| (index[e.lo()], index[e.hi()])))
            .expect("relabelled edges"),
    )
}

/// One census line: `{graph6, in_auto, in_symm, witness|line}`. `in_symm`
/// is null when the SYMM search ran out of budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub graph6: String,
    pub in_auto: bool,
    pub in_symm: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<VertexPermutation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<Vec<Edge>>,
}

impl Classification {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

pub fn classify(g: &Graph) -> Classification {
    classify_with(g, &SymmOptions::default())
}

pub fn classify_with(g: &Graph, options: &SymmOptions) -> Classification {
    let witness = find_fixed_edge_free_involution(g);
    let (in_symm, line) = match decide_symm_with(g, options) {
        Ok(r) => (
            Some(r.outcome == SymmOutcome::Member),
            r.breaking_line().map(<[Edge]>::to_vec),
        ),
        Err(SolveError::BudgetExceeded { .. } | SolveError::TooLarge { .. }) => (None, None),
        Err(SolveError::EdgelessForbidden) => unreachable!("no forbidden graph in SYMM"),
    };
    assert!(
        witness.is_none() || in_symm != Some(false),
        "AUTO member {} refuted as SYMM",
        g.to_graph6()
    );
    Classification {
        graph6: g.to_graph6(),
        in_auto: witness.is_some(),
        in_symm,
        witness,
        line,
    }
}
