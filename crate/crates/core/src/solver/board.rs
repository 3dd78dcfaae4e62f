//! Positions as pairs of edge bitmasks over a fixed board.

use std::collections::HashMap;
use std::sync::Arc;

use crate::game::{Color, GameState};
use crate::graph::{Edge, Graph};
use crate::morphisms::{CanonicalForm, ColoredGraph, VertexPermutation};

pub(crate) const UNCOLORED: u8 = 1;
pub(crate) const RED: u8 = 2;
pub(crate) const BLUE: u8 = 3;

pub(crate) struct MaskBoard {
    pub graph: Arc<Graph>,
    pub full: u64,
    /// canonical id of the `n`-vertex graph formed by an edge mask
    mask_ids: HashMap<u64, u32>,
    forms: HashMap<CanonicalForm, u32>,
}

impl MaskBoard {
    pub fn new(graph: Arc<Graph>) -> Self {
        let m = graph.size();
        assert!(m <= 64, "mask boards hold at most 64 edges");
        let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        MaskBoard {
            graph,
            full,
            mask_ids: HashMap::new(),
            forms: HashMap::new(),
        }
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.graph.edges()[i]
    }

    pub fn colored(&self, red: u64, blue: u64) -> ColoredGraph {
        let mut c = ColoredGraph::new(self.graph.order());
        for (i, e) in self.graph.edges().iter().enumerate() {
            let label = if red >> i & 1 == 1 {
                RED
            } else if blue >> i & 1 == 1 {
                BLUE
            } else {
                UNCOLORED
            };
            c.set_label(e.lo(), e.hi(), label);
        }
        c
    }

    pub fn canonize(&self, red: u64, blue: u64) -> (CanonicalForm, VertexPermutation) {
        self.colored(red, blue).canonize()
    }

    /// Equal ids exactly when the two edge sets span isomorphic graphs.
    pub fn mask_id(&mut self, mask: u64) -> u32 {
        if let Some(&id) = self.mask_ids.get(&mask) {
            return id;
        }
        let mut c = ColoredGraph::new(self.graph.order());
        for i in bits(mask) {
            let e = self.edge(i);
            c.set_label(e.lo(), e.hi(), 1);
        }
        let next = self.forms.len() as u32;
        let id = *self.forms.entry(c.canonical_form()).or_insert(next);
        self.mask_ids.insert(mask, id);
        id
    }

    pub fn masks_of(state: &GameState) -> (u64, u64) {
        (state.mask_of(Color::Red), state.mask_of(Color::Blue))
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(i)
    })
}
