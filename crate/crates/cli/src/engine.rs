//! Picking the engine strategy for a board, shared by `play` and `serve`.

use std::fmt;
use std::str::FromStr;

use avoid_core::game::{
    automorphism_strategy, kn_p2_defender, kn_symmetry_breaker, product_board, product_breaker,
    ProductBoard,
};
use avoid_core::graph::make_family;
use avoid_core::morphisms::{find_fixed_edge_free_involution, find_isomorphism};
use avoid_core::solver::{optimal_strategy, AvoidOptions};
use avoid_core::{Budget, FamilySpec, Graph, Player, Strategy};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest board the optimal engine accepts.
pub const OPTIMAL_MAX_EDGES: usize = 15;

/// Node budget for one optimal reply.
pub const OPTIMAL_NODES: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EngineKind {
    Optimal,
    Automorphism,
    KnP2,
    Breaker,
}

impl EngineKind {
    pub fn name(self) -> &'static str {
        match self {
            EngineKind::Optimal => "optimal",
            EngineKind::Automorphism => "automorphism",
            EngineKind::KnP2 => "kn-p2",
            EngineKind::Breaker => "breaker",
        }
    }
}

impl fmt::Display for EngineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EngineKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [
            EngineKind::Optimal,
            EngineKind::Automorphism,
            EngineKind::KnP2,
            EngineKind::Breaker,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| format!("unknown engine `{s}` (optimal, automorphism, kn-p2, breaker)"))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("the optimal engine is limited to boards of at most {OPTIMAL_MAX_EDGES} edges; this one has {0}")]
    Oversized(usize),
    #[error("the {engine} engine plays {plays}, not {requested}")]
    WrongSide {
        engine: EngineKind,
        plays: Player,
        requested: Player,
    },
    #[error("the {0} engine does not apply: {1}")]
    NotApplicable(EngineKind, String),
}

fn complete_order(g: &Graph) -> Option<usize> {
    let n = g.order();
    (g.size() == n * n.saturating_sub(1) / 2).then_some(n)
}

fn need_side(engine: EngineKind, plays: Player, side: Player) -> Result<(), EngineError> {
    if plays == side {
        Ok(())
    } else {
        Err(EngineError::WrongSide {
            engine,
            plays,
            requested: side,
        })
    }
}

/// The strategy the engine plays as `side` on `(board, forbidden)`.
pub fn build_engine(
    kind: EngineKind,
    board: &Graph,
    forbidden: Option<&Graph>,
    side: Player,
) -> Result<Box<dyn Strategy>, EngineError> {
    let na = |why: &str| EngineError::NotApplicable(kind, why.into());
    match kind {
        EngineKind::Optimal => {
            if board.size() > OPTIMAL_MAX_EDGES {
                return Err(EngineError::Oversized(board.size()));
            }
            if forbidden.is_none() {
                return Err(na("it needs a forbidden graph"));
            }
            let options = AvoidOptions {
                budget: Budget::nodes(OPTIMAL_NODES),
            };
            Ok(Box::new(optimal_strategy(side, options)))
        }
        EngineKind::Automorphism => {
            need_side(kind, Player::B, side)?;
            let phi = find_fixed_edge_free_involution(board)
                .ok_or_else(|| na("the board has no fixed-edge-free involutory automorphism"))?;
            Ok(Box::new(
                automorphism_strategy(board, phi).expect("search returns a valid witness"),
            ))
        }
        EngineKind::KnP2 => {
            need_side(kind, Player::B, side)?;
            let n = complete_order(board)
                .filter(|&n| n >= 3)
                .ok_or_else(|| na("the board must be K_n, n >= 3"))?;
            let p2 = make_family(&FamilySpec::Path(2)).expect("fixed family");
            if !forbidden.is_some_and(|f| find_isomorphism(f, &p2).is_some()) {
                return Err(na("the forbidden graph must be P2"));
            }
            Ok(Box::new(kn_p2_defender(n)))
        }
        EngineKind::Breaker => {
            need_side(kind, Player::A, side)?;
            if let Some(n) = complete_order(board).filter(|&n| n >= 4) {
                return Ok(Box::new(kn_symmetry_breaker(n)));
            }
            ProductBoard::ALL
                .into_iter()
                .find(|&b| product_board(b) == *board)
                .map(|b| Box::new(product_breaker(b)) as Box<dyn Strategy>)
                .ok_or_else(|| {
                    na("the board must be K_n (n >= 4) or one of the three product boards")
                })
        }
    }
}
