//! Solving the avoidance game `(G, F)` by negamax over canonical positions.
//!
//! Values are from the mover's point of view: the opponent loses (+1) beats
//! a draw (0) beats losing (-1). Completing one's own copy of `F` is a legal
//! move that loses on the spot.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::board::{bits, MaskBoard};
use super::table::CanonicalTable;
use super::{SolveError, Stats};
use crate::budget::{Budget, Exhausted, Meter};
use crate::game::embed::{find_copy, Host, Pattern};
use crate::game::{Color, GameState, Player, Status, Strategy, StrategyFault};
use crate::graph::{Edge, Graph};
use crate::morphisms::CanonicalForm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AvoidOutcome {
    ALoses,
    BLoses,
    Drawn,
}

impl AvoidOutcome {
    pub fn lost_by(player: Player) -> AvoidOutcome {
        match player {
            Player::A => AvoidOutcome::ALoses,
            Player::B => AvoidOutcome::BLoses,
        }
    }

    pub fn status(self) -> Status {
        match self {
            AvoidOutcome::ALoses => Status::ALost,
            AvoidOutcome::BLoses => Status::BLost,
            AvoidOutcome::Drawn => Status::Drawn,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AvoidResult {
    pub outcome: AvoidOutcome,
    /// Optimal moves for both sides, keyed by canonical position. Either
    /// side's view of it is a strategy achieving the outcome.
    pub strategy: OptimalPlay,
    pub stats: Stats,
}

/// An optimal-move table for both players.
#[derive(Clone, Debug)]
pub struct OptimalPlay {
    board: Arc<Graph>,
    moves: HashMap<CanonicalForm, Edge>,
}

impl OptimalPlay {
    pub fn for_side(&self, side: Player) -> CanonicalTable {
        let name = format!("optimal-{side}");
        CanonicalTable::new(name, side, Arc::clone(&self.board), self.moves.clone())
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct AvoidOptions {
    pub budget: Budget,
}

impl Default for AvoidOptions {
    fn default() -> Self {
        AvoidOptions {
            budget: Budget::nodes(super::DEFAULT_NODE_BUDGET),
        }
    }
}

pub fn solve_avoidance(g: &Graph, f: &Graph) -> Result<AvoidResult, SolveError> {
    solve_avoidance_with(g, f, &AvoidOptions::default())
}

pub fn solve_avoidance_with(
    g: &Graph,
    f: &Graph,
    options: &AvoidOptions,
) -> Result<AvoidResult, SolveError> {
    if f.size() == 0 {
        return Err(SolveError::EdgelessForbidden);
    }
    if g.size() > 64 {
        return Err(SolveError::TooLarge { edges: g.size() });
    }
    let board = Arc::new(g.clone());
    let mut s = AvoidSearch {
        board: MaskBoard::new(Arc::clone(&board)),
        pattern: Pattern::new(f),
        memo: HashMap::new(),
        moves: HashMap::new(),
        meter: options.budget.start(),
        memo_hits: 0,
    };
    let value = s
        .value(0, 0)
        .map_err(|Exhausted| SolveError::BudgetExceeded { stats: s.stats() })?;
    let outcome = match value {
        1 => AvoidOutcome::BLoses,
        -1 => AvoidOutcome::ALoses,
        _ => AvoidOutcome::Drawn,
    };
    let stats = s.stats();
    Ok(AvoidResult {
        outcome,
        strategy: OptimalPlay {
            board,
            moves: s.moves,
        },
        stats,
    })
}

/// The optimal move from a position in progress, with the outcome it
/// secures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OptimalMove {
    pub edge: Edge,
    pub outcome: AvoidOutcome,
}

pub fn optimal_move(state: &GameState, options: &AvoidOptions) -> Result<OptimalMove, SolveError> {
    let f = state.forbidden().ok_or(SolveError::EdgelessForbidden)?;
    let g = state.board();
    if g.size() > 64 {
        return Err(SolveError::TooLarge { edges: g.size() });
    }
    assert!(!state.is_over(), "no move in a finished game");
    let mut s = AvoidSearch {
        board: MaskBoard::new(state.board_arc()),
        pattern: Pattern::new(f),
        memo: HashMap::new(),
        moves: HashMap::new(),
        meter: options.budget.start(),
        memo_hits: 0,
    };
    let (red, blue) = (state.mask_of(Color::Red), state.mask_of(Color::Blue));
    let value = s
        .value(red, blue)
        .map_err(|Exhausted| SolveError::BudgetExceeded { stats: s.stats() })?;
    let (form, labeling) = s.board.canonize(red, blue);
    let edge = labeling.inverse().apply_edge(s.moves[&form]);
    let mover = state.to_move();
    let outcome = match value {
        1 => AvoidOutcome::lost_by(mover.other()),
        -1 => AvoidOutcome::lost_by(mover),
        _ => AvoidOutcome::Drawn,
    };
    Ok(OptimalMove { edge, outcome })
}

/// Solves each position afresh; meant for boards of a few dozen positions'
/// worth of search, as the service uses it.
#[derive(Clone, Debug)]
pub struct OptimalStrategy {
    side: Player,
    options: AvoidOptions,
}

pub fn optimal_strategy(side: Player, options: AvoidOptions) -> OptimalStrategy {
    OptimalStrategy { side, options }
}

impl Strategy for OptimalStrategy {
    fn name(&self) -> String {
        format!("optimal-{}", self.side)
    }

    fn side(&self) -> Player {
        self.side
    }

    fn choose(&self, state: &GameState) -> Result<Edge, StrategyFault> {
        optimal_move(state, &self.options)
            .map(|m| m.edge)
            .map_err(|e| StrategyFault::new(self.name(), e.to_string()))
    }
}

struct AvoidSearch {
    board: MaskBoard,
    pattern: Pattern,
    memo: HashMap<CanonicalForm, i8>,
    moves: HashMap<CanonicalForm, Edge>,
    meter: Meter,
    memo_hits: u64,
}

impl AvoidSearch {
    fn stats(&self) -> Stats {
        Stats {
            positions: self.meter.nodes(),
            memo_hits: self.memo_hits,
            elapsed: self.meter.elapsed(),
        }
    }

    /// Whether adding edge `i` to `mine` completes a copy of `F`.
    fn completes(&self, mine: u64, i: usize) -> bool {
        let host = Host::new(
            self.board.graph.order(),
            bits(mine | 1 << i).map(|j| self.board.edge(j)),
        );
        find_copy(&self.pattern, &host, Some(self.board.edge(i))).is_some()
    }

    /// Value for the player to move; `mine` is the mover's colour.
    fn value(&mut self, red: u64, blue: u64) -> Result<i8, Exhausted> {
        let (form, labeling) = self.board.canonize(red, blue);
        if let Some(&v) = self.memo.get(&form) {
            self.memo_hits += 1;
            return Ok(v);
        }
        self.meter.tick()?;
        let red_to_move = red.count_ones() == blue.count_ones();
        let (mine, theirs) = if red_to_move {
            (red, blue)
        } else {
            (blue, red)
        };
        let free = self.board.full & !(red | blue);
        let mut best = i8::MIN;
        let mut best_move = None;
        for i in bits(free) {
            let v = if self.completes(mine, i) {
                -1
            } else if free == 1 << i {
                0
            } else {
                let next = mine | 1 << i;
                let (r, b) = if red_to_move {
                    (next, theirs)
                } else {
                    (theirs, next)
                };
                -self.value(r, b)?
            };
            if v > best {
                best = v;
                best_move = Some(i);
                if v == 1 {
                    break;
                }
            }
        }
        let i = best_move.expect("positions with a free edge have a move");
        self.moves
            .insert(form.clone(), labeling.apply_edge(self.board.edge(i)));
        self.memo.insert(form, best);
        Ok(best)
    }
}
