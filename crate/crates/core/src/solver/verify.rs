//! Playing a strategy against exhaustive or random adversaries and checking
//! a property on every line.

use std::collections::HashSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use super::board::MaskBoard;
use super::Stats;
use crate::budget::{Budget, Exhausted, Meter};
use crate::game::{GameError, GameState, Player, Status, Strategy, Transcript};
use crate::graph::{Edge, Graph};
use crate::morphisms::CanonicalForm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Adversary {
    /// Every reply at every adversary turn. With `prune`, one reply per
    /// orbit of the position's automorphism group; sound only for
    /// strategies that commute with automorphisms of the position.
    Exhaustive { prune: bool },
    /// Uniformly random replies.
    Random { count: usize, seed: u64 },
    /// Random replies that keep red ≅ blue whenever one exists: the
    /// meaningful random opponent for a symmetry breaker.
    MirrorRandom { count: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Property {
    /// The subject's side never loses.
    NeverLoses,
    /// red ≅ blue after each B move up to round ⌊m/2⌋, for as long as A
    /// has not lost.
    SymmetricAfterBMoves,
    /// After some completed round `i ≤ r`, red ≇ blue (or B has lost).
    SymmetryBrokenBy(usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub reason: String,
    pub transcript: Transcript,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub strategy: String,
    pub side: Player,
    pub adversary: Adversary,
    pub property: Property,
    /// Lines played to their end.
    pub games: u64,
    pub violation_count: u64,
    /// The first few violations, with transcripts.
    pub violations: Vec<Violation>,
    pub stats: Stats,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub budget: Budget,
    pub keep_violations: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: Budget::nodes(super::DEFAULT_NODE_BUDGET),
            keep_violations: 16,
        }
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("strategy `{strategy}` plays {actual}, not {requested}")]
    SideMismatch {
        strategy: String,
        requested: Player,
        actual: Player,
    },
    #[error("pruned exhaustive search needs a board of at most 64 edges")]
    TooLarge,
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("budget exceeded after {games} games")]
    BudgetExceeded { games: u64, stats: Stats },
}

pub fn verify_strategy(
    g: &Graph,
    f: Option<&Graph>,
    subject: &dyn Strategy,
    side: Player,
    adversary: Adversary,
    property: Property,
    options: &VerifyOptions,
) -> Result<VerifyReport, VerifyError> {
    if subject.side() != side {
        return Err(VerifyError::SideMismatch {
            strategy: subject.name(),
            requested: side,
            actual: subject.side(),
        });
    }
    let pruning = matches!(adversary, Adversary::Exhaustive { prune: true });
    if pruning && g.size() > 64 {
        return Err(VerifyError::TooLarge);
    }
    let board = Arc::new(g.clone());
    let start = GameState::new(Arc::clone(&board), f.map(|f| Arc::new(f.clone())))?;
    let mut v = Verifier {
        subject,
        side,
        property,
        half: g.size() / 2,
        masks: pruning.then(|| MaskBoard::new(board)),
        meter: options.budget.start(),
        keep: options.keep_violations,
        games: 0,
        violation_count: 0,
        violations: Vec::new(),
    };
    let run = match adversary {
        Adversary::Exhaustive { .. } => v.exhaustive(start),
        Adversary::Random { count, seed } => v.random(start, count, seed, false),
        Adversary::MirrorRandom { count, seed } => v.random(start, count, seed, true),
    };
    let stats = Stats {
        positions: v.meter.nodes(),
        memo_hits: 0,
        elapsed: v.meter.elapsed(),
    };
    if run.is_err() {
        return Err(VerifyError::BudgetExceeded {
            games: v.games,
            stats,
        });
    }
    Ok(VerifyReport {
        strategy: subject.name(),
        side,
        adversary,
        property,
        games: v.games,
        violation_count: v.violation_count,
        violations: v.violations,
        stats,
    })
}

enum Verdict {
    Continue,
    Done,
    Violated(String),
}

struct Verifier<'a> {
    subject: &'a dyn Strategy,
    side: Player,
    property: Property,
    half: usize,
    masks: Option<MaskBoard>,
    meter: Meter,
    keep: usize,
    games: u64,
    violation_count: u64,
    violations: Vec<Violation>,
}

impl Verifier<'_> {
    fn judge(&self, state: &GameState) -> Verdict {
        let after_b = !state.history().is_empty() && state.history().len().is_multiple_of(2);
        let status = state.status();
        match self.property {
            Property::NeverLoses => {
                if status == Status::lost_by(self.side) {
                    Verdict::Violated(format!("{} lost", self.side))
                } else if state.is_over() {
                    Verdict::Done
                } else {
                    Verdict::Continue
                }
            }
            Property::SymmetricAfterBMoves => {
                if status == Status::ALost {
                    Verdict::Done
                } else if after_b && state.rounds() <= self.half && !state.red_blue_isomorphic() {
                    Verdict::Violated(format!(
                        "red and blue differ after round {}",
                        state.rounds()
                    ))
                } else if state.is_over() || (after_b && state.rounds() >= self.half) {
                    Verdict::Done
                } else {
                    Verdict::Continue
                }
            }
            Property::SymmetryBrokenBy(limit) => {
                if status == Status::BLost || (after_b && !state.red_blue_isomorphic()) {
                    Verdict::Done
                } else if after_b && state.rounds() >= limit {
                    Verdict::Violated(format!(
                        "red and blue still isomorphic after round {}",
                        state.rounds()
                    ))
                } else if state.is_over() {
                    Verdict::Violated(format!("game ended {status:?} with symmetry intact"))
                } else {
                    Verdict::Continue
                }
            }
        }
    }

    fn violate(&mut self, state: &GameState, reason: String) {
        self.violation_count += 1;
        if self.violations.len() < self.keep {
            self.violations.push(Violation {
                reason,
                transcript: state.transcript(),
            });
        }
    }

    /// Judges `state`; when play continues and the subject is to move,
    /// applies its choice. Returns the state awaiting an adversary move.
    fn advance(&mut self, mut state: GameState) -> Option<GameState> {
        loop {
            match self.judge(&state) {
                Verdict::Done => {
                    self.games += 1;
                    return None;
                }
                Verdict::Violated(reason) => {
                    self.games += 1;
                    self.violate(&state, reason);
                    return None;
                }
                Verdict::Continue => {}
            }
            if state.to_move() != self.side {
                return Some(state);
            }
            let choice = match self.subject.choose(&state) {
                Ok(e) => e,
                Err(fault) => {
                    self.games += 1;
                    self.violate(&state, fault.to_string());
                    return None;
                }
            };
            state = match state.apply_move(choice) {
                Ok(next) => next,
                Err(err) => {
                    self.games += 1;
                    self.violate(&state, format!("illegal move {choice}: {err}"));
                    return None;
                }
            };
        }
    }

    fn exhaustive(&mut self, state: GameState) -> Result<(), Exhausted> {
        self.meter.tick()?;
        let Some(state) = self.advance(state) else {
            return Ok(());
        };
        for e in self.adversary_moves(&state) {
            let next = state.apply_move(e).expect("free edge");
            self.exhaustive(next)?;
        }
        Ok(())
    }

    /// Free edges, one per orbit when pruning.
    fn adversary_moves(&mut self, state: &GameState) -> Vec<Edge> {
        let free = state.uncolored_edges();
        let Some(masks) = &self.masks else {
            return free;
        };
        let (red, blue) = MaskBoard::masks_of(state);
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        free.into_iter()
            .filter(|e| {
                let mut c = masks.colored(red, blue);
                c.set_color(e.lo(), 1);
                c.set_color(e.hi(), 1);
                seen.insert(c.canonical_form())
            })
            .collect()
    }

    fn random(
        &mut self,
        start: GameState,
        count: usize,
        seed: u64,
        mirror: bool,
    ) -> Result<(), Exhausted> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..count {
            let mut state = start.clone();
            loop {
                self.meter.tick()?;
                let Some(s) = self.advance(state) else { break };
                let free = s.uncolored_edges();
                let pick = if mirror && s.to_move() == Player::B {
                    let keeping: Vec<Edge> = free
                        .iter()
                        .copied()
                        .filter(|&e| s.apply_move(e).is_ok_and(|t| t.red_blue_isomorphic()))
                        .collect();
                    keeping
                        .choose(&mut rng)
                        .or_else(|| free.choose(&mut rng))
                        .copied()
                } else {
                    free.choose(&mut rng).copied()
                };
                state = s
                    .apply_move(pick.expect("a game in progress has a free edge"))
                    .expect("free edge");
            }
        }
        Ok(())
    }
}
