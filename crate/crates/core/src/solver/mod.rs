//! Exhaustive searches over game positions.

mod avoid;
mod board;
mod census;
mod symm;
mod table;
mod verify;

use std::time::Duration;

use serde::Serialize;

pub use avoid::{
    optimal_move, optimal_strategy, solve_avoidance, solve_avoidance_with, AvoidOptions,
    AvoidOutcome, AvoidResult, OptimalMove, OptimalPlay, OptimalStrategy,
};
pub use census::{classify, classify_with, enumerate_graphs, Classification};
pub use symm::{
    decide_symm, decide_symm_with, SymmCertificate, SymmOptions, SymmOutcome, SymmResult,
};
pub use table::CanonicalTable;
pub use verify::{
    verify_strategy, Adversary, Property, VerifyError, VerifyOptions, VerifyReport, Violation,
};

pub(crate) use symm::SymmSearch;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub positions: u64,
    pub memo_hits: u64,
    #[serde(serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

#[derive(Debug, thiserror::Error)]
pub enum SolveError {
    #[error("budget exceeded after {} positions", stats.positions)]
    BudgetExceeded { stats: Stats },
    #[error("board has {edges} edges; at most 64 are supported")]
    TooLarge { edges: usize },
    #[error("forbidden graph has no edges")]
    EdgelessForbidden,
}
