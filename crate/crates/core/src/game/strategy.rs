use std::collections::HashMap;

use thiserror::Error;

use super::{GameState, Player};
use crate::graph::{Edge, Graph};
use crate::morphisms::{classify_involution, MorphismError, VertexPermutation};

/// A scripted strategy was consulted in a position outside its contract.
/// Distinct from an illegal move: the game itself is fine, the script is not.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("strategy `{strategy}` fault: {reason}")]
pub struct StrategyFault {
    pub strategy: String,
    pub reason: String,
}

impl StrategyFault {
    pub fn new(strategy: impl Into<String>, reason: impl Into<String>) -> Self {
        StrategyFault {
            strategy: strategy.into(),
            reason: reason.into(),
        }
    }
}

/// A deterministic choice of the next edge for one side.
pub trait Strategy: Send + Sync {
    fn name(&self) -> String;
    fn side(&self) -> Player;
    /// Called only when `state` is in progress with `self.side()` to move.
    fn choose(&self, state: &GameState) -> Result<Edge, StrategyFault>;
}

/// B answers `e` with `φ'(e)` for a fixed-edge-free involution `φ`.
#[derive(Clone, Debug)]
pub struct AutomorphismStrategy {
    phi: VertexPermutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomorphismStrategyError {
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error("permutation is not an involution")]
    NotInvolution,
    #[error("permutation fixes edge {0}")]
    FixedEdge(Edge),
}

pub fn automorphism_strategy(
    board: &Graph,
    phi: VertexPermutation,
) -> Result<AutomorphismStrategy, AutomorphismStrategyError> {
    let report = classify_involution(board, &phi)?;
    if !report.involutory {
        return Err(AutomorphismStrategyError::NotInvolution);
    }
    if let Some(&e) = report.fixed_edges.first() {
        return Err(AutomorphismStrategyError::FixedEdge(e));
    }
    Ok(AutomorphismStrategy { phi })
}

impl AutomorphismStrategy {
    pub fn permutation(&self) -> &VertexPermutation {
        &self.phi
    }
}

impl Strategy for AutomorphismStrategy {
    fn name(&self) -> String {
        "automorphism".into()
    }

    fn side(&self) -> Player {
        Player::B
    }

    fn choose(&self, state: &GameState) -> Result<Edge, StrategyFault> {
        let last = *state
            .history()
            .last()
            .ok_or_else(|| StrategyFault::new(self.name(), "no move to answer"))?;
        let reply = self.phi.apply_edge(last);
        if !state.is_uncolored(reply) {
            return Err(StrategyFault::new(
                self.name(),
                format!("image {reply} of {last} is not free"),
            ));
        }
        Ok(reply)
    }
}

/// A strategy given as an explicit table from `(red mask, blue mask)` to a move,
/// as produced by the solvers' certificates.
#[derive(Clone, Debug)]
pub struct TableStrategy {
    name: String,
    side: Player,
    table: HashMap<(u64, u64), Edge>,
}

impl TableStrategy {
    pub fn new(name: impl Into<String>, side: Player, table: HashMap<(u64, u64), Edge>) -> Self {
        TableStrategy {
            name: name.into(),
            side,
            table,
        }
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

impl Strategy for TableStrategy {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn side(&self) -> Player {
        self.side
    }

    fn choose(&self, state: &GameState) -> Result<Edge, StrategyFault> {
        let key = (
            state.mask_of(super::Color::Red),
            state.mask_of(super::Color::Blue),
        );
        self.table
            .get(&key)
            .copied()
            .ok_or_else(|| StrategyFault::new(self.name(), format!("no entry for {state:?}")))
    }
}
