use std::collections::HashMap;
use std::sync::Arc;

use super::board::MaskBoard;
use crate::game::{GameState, Player, Strategy, StrategyFault};
use crate::graph::{Edge, Graph};
use crate::morphisms::CanonicalForm;

/// A strategy stored up to isomorphism: positions are looked up by their
/// canonical form and the stored move, kept in canonical coordinates, is
/// mapped back through the inverse labelling.
#[derive(Clone)]
pub struct CanonicalTable {
    name: String,
    side: Player,
    board: Arc<Graph>,
    moves: Arc<HashMap<CanonicalForm, Edge>>,
}

impl CanonicalTable {
    pub(crate) fn new(
        name: String,
        side: Player,
        board: Arc<Graph>,
        moves: HashMap<CanonicalForm, Edge>,
    ) -> Self {
        CanonicalTable {
            name,
            side,
            board,
            moves: Arc::new(moves),
        }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn board(&self) -> &Graph {
        &self.board
    }

    /// The stored move for a raw position, if any.
    pub fn lookup(&self, red: u64, blue: u64) -> Option<Edge> {
        let board = MaskBoard::new(Arc::clone(&self.board));
        let (form, labeling) = board.canonize(red, blue);
        let canonical = *self.moves.get(&form)?;
        Some(labeling.inverse().apply_edge(canonical))
    }
}

impl std::fmt::Debug for CanonicalTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CanonicalTable({}, {} for {}, {} entries)",
            self.name,
            self.side,
            self.board.to_graph6(),
            self.len()
        )
    }
}

impl Strategy for CanonicalTable {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn side(&self) -> Player {
        self.side
    }

    fn choose(&self, state: &GameState) -> Result<Edge, StrategyFault> {
        if state.board() != &*self.board {
            return Err(StrategyFault::new(
                self.name(),
                "table belongs to a different board",
            ));
        }
        let (red, blue) = MaskBoard::masks_of(state);
        self.lookup(red, blue)
            .ok_or_else(|| StrategyFault::new(self.name(), format!("no entry for {state:?}")))
    }
}
