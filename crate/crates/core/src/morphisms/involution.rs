//! Exhaustive search for involutory automorphisms without fixed edges
//! (AUTO membership) or without fixed vertices.
//!
//! The partial involution is always closed: assigning `v -> w` also assigns
//! `w -> v`. Such a pair is individualized as one shared colour, which every
//! extension of the assignment preserves, so after refinement a vertex can
//! only map inside its own cell.

use super::refine::{individualize, individualize_pair, refine, LabeledAdjacency};
use super::{classify_involution, VertexPermutation};
use crate::budget::{Budget, Exhausted, Meter};
use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Mode {
    EdgeFree,
    PointFree,
}

pub fn find_fixed_edge_free_involution(g: &Graph) -> Option<VertexPermutation> {
    find_fixed_edge_free_involution_within(g, &Budget::unlimited()).expect("unlimited budget")
}

pub fn find_fixed_edge_free_involution_within(
    g: &Graph,
    budget: &Budget,
) -> Result<Option<VertexPermutation>, Exhausted> {
    search(g, Mode::EdgeFree, budget)
}

pub fn find_fixed_point_free_involution(g: &Graph) -> Option<VertexPermutation> {
    find_fixed_point_free_involution_within(g, &Budget::unlimited()).expect("unlimited budget")
}

pub fn find_fixed_point_free_involution_within(
    g: &Graph,
    budget: &Budget,
) -> Result<Option<VertexPermutation>, Exhausted> {
    if g.order() % 2 == 1 {
        return Ok(None);
    }
    search(g, Mode::PointFree, budget)
}

struct Search<'a> {
    g: &'a Graph,
    adj: LabeledAdjacency,
    matrix: Vec<bool>,
    mode: Mode,
    meter: Meter,
}

fn search(g: &Graph, mode: Mode, budget: &Budget) -> Result<Option<VertexPermutation>, Exhausted> {
    let n = g.order();
    let mut matrix = vec![false; n * n];
    for e in g.edges() {
        matrix[e.lo() * n + e.hi()] = true;
        matrix[e.hi() * n + e.lo()] = true;
    }
    let adj = (0..n)
        .map(|v| g.neighbors(v).iter().map(|&w| (w, 1)).collect())
        .collect();
    let mut s = Search {
        g,
        adj,
        matrix,
        mode,
        meter: budget.start(),
    };
    let mut colors = vec![0u32; n];
    refine(&s.adj, &mut colors);
    let mut phi = vec![usize::MAX; n];
    let found = s.extend(colors, &mut phi)?;
    if let Some(p) = &found {
        let report = classify_involution(g, p).expect("search only builds automorphisms");
        debug_assert!(report.involutory);
        debug_assert!(match mode {
            Mode::EdgeFree => report.fixed_edges.is_empty(),
            Mode::PointFree => report.fixed_vertices.is_empty(),
        });
    }
    Ok(found)
}

impl Search<'_> {
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.g.order() + v]
    }

    /// Whether `v -> w` (and `w -> v`) is compatible with the assignment so far.
    fn consistent(&self, phi: &[usize], v: usize, w: usize) -> bool {
        if v == w {
            if self.mode == Mode::PointFree {
                return false;
            }
        } else if self.mode == Mode::EdgeFree && self.adjacent(v, w) {
            return false;
        }
        for (x, &y) in phi.iter().enumerate() {
            if y == usize::MAX {
                continue;
            }
            if self.adjacent(v, x) != self.adjacent(w, y)
                || self.adjacent(w, x) != self.adjacent(v, y)
            {
                return false;
            }
            if self.mode == Mode::EdgeFree && v == w && x == y && self.adjacent(v, x) {
                return false;
            }
        }
        true
    }

    fn extend(
        &mut self,
        colors: Vec<u32>,
        phi: &mut Vec<usize>,
    ) -> Result<Option<VertexPermutation>, Exhausted> {
        self.meter.tick()?;
        let n = self.g.order();
        let mut open = vec![0usize; n];
        for v in (0..n).filter(|&v| phi[v] == usize::MAX) {
            open[colors[v] as usize] += 1;
        }
        // the unassigned vertex with the fewest candidates, lowest label first
        let Some(v) = (0..n)
            .filter(|&v| phi[v] == usize::MAX)
            .min_by_key(|&v| (open[colors[v] as usize], v))
        else {
            return Ok(VertexPermutation::new(phi.clone()).ok());
        };
        let mut candidates: Vec<usize> = (0..n)
            .filter(|&w| w != v && phi[w] == usize::MAX && colors[w] == colors[v])
            .collect();
        candidates.push(v);
        for w in candidates {
            if !self.consistent(phi, v, w) {
                continue;
            }
            phi[v] = w;
            phi[w] = v;
            let mut child = colors.clone();
            if v == w {
                individualize(&mut child, v);
            } else {
                individualize_pair(&mut child, v, w);
            }
            refine(&self.adj, &mut child);
            if let Some(found) = self.extend(child, phi)? {
                return Ok(Some(found));
            }
            phi[v] = usize::MAX;
            phi[w] = usize::MAX;
        }
        Ok(None)
    }
}
