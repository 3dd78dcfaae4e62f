//! Deciding whether B has a symmetric strategy on a graph.
//!
//! B wins a line when red ≅ blue after each of rounds `1..=⌊m/2⌋`. A
//! position after B's move is a B win iff every A move leaves B a reply that
//! restores the isomorphism and is itself a B win. Both kinds of position
//! are memoized on the canonical form of the 3-labelled board (uncoloured,
//! red, blue); red and blue are never swapped since the players differ.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::board::{bits, MaskBoard};
use super::table::CanonicalTable;
use super::{SolveError, Stats};
use crate::budget::{Budget, Exhausted, Meter};
use crate::game::{new_game, Player, Strategy};
use crate::graph::{Edge, Graph};
use crate::morphisms::CanonicalForm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SymmOutcome {
    Member,
    NonMember,
}

#[derive(Clone, Debug)]
pub enum SymmCertificate {
    /// B's replies, answering every A move.
    Symmetric { strategy: CanonicalTable },
    /// A's moves, plus one principal line: A follows the table, B always
    /// takes its first isomorphism-preserving reply, and the line ends with
    /// an A move that no B reply can match.
    Breaking {
        strategy: CanonicalTable,
        line: Vec<Edge>,
    },
}

#[derive(Clone, Debug)]
pub struct SymmResult {
    pub outcome: SymmOutcome,
    pub certificate: SymmCertificate,
    pub stats: Stats,
}

impl SymmResult {
    pub fn breaking_line(&self) -> Option<&[Edge]> {
        match &self.certificate {
            SymmCertificate::Breaking { line, .. } => Some(line),
            SymmCertificate::Symmetric { .. } => None,
        }
    }

    pub fn strategy(&self) -> &CanonicalTable {
        match &self.certificate {
            SymmCertificate::Symmetric { strategy }
            | SymmCertificate::Breaking { strategy, .. } => strategy,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SymmOptions {
    pub budget: Budget,
    /// Memoize positions on canonical forms. Off only for cross-checking;
    /// without the memo no certificate tables are kept.
    pub memo: bool,
}

impl Default for SymmOptions {
    fn default() -> Self {
        SymmOptions {
            budget: Budget::nodes(super::DEFAULT_NODE_BUDGET),
            memo: true,
        }
    }
}

pub fn decide_symm(g: &Graph) -> Result<SymmResult, SolveError> {
    decide_symm_with(g, &SymmOptions::default())
}

pub fn decide_symm_with(g: &Graph, options: &SymmOptions) -> Result<SymmResult, SolveError> {
    if g.size() > 64 {
        return Err(SolveError::TooLarge { edges: g.size() });
    }
    let board = Arc::new(g.clone());
    let mut s = SymmSearch::new(
        Arc::clone(&board),
        g.size() / 2,
        options.memo,
        &options.budget,
    );
    let member = s
        .after_b(0, 0, 0)
        .map_err(|Exhausted| SolveError::BudgetExceeded { stats: s.stats() })?;
    let stats = s.stats();
    let certificate = if member {
        SymmCertificate::Symmetric {
            strategy: CanonicalTable::new("symm-table".into(), Player::B, board, s.b_moves),
        }
    } else {
        let strategy = CanonicalTable::new(
            "symm-breaker".into(),
            Player::A,
            Arc::clone(&board),
            s.a_moves,
        );
        let line = if options.memo {
            principal_line(&board, &strategy)
        } else {
            Vec::new()
        };
        SymmCertificate::Breaking { strategy, line }
    };
    let outcome = if member {
        SymmOutcome::Member
    } else {
        SymmOutcome::NonMember
    };
    Ok(SymmResult {
        outcome,
        certificate,
        stats,
    })
}

/// A plays the table; B plays its lowest isomorphism-preserving reply.
fn principal_line(board: &Arc<Graph>, strategy: &CanonicalTable) -> Vec<Edge> {
    let mut state = new_game((**board).clone(), None).expect("no forbidden graph");
    loop {
        let a = strategy
            .choose(&state)
            .expect("breaking table covers the principal line");
        state = state.apply_move(a).expect("table moves are legal");
        let reply = state
            .uncolored_edges()
            .into_iter()
            .find(|&f| state.apply_move(f).is_ok_and(|s| s.red_blue_isomorphic()));
        match reply {
            Some(f) => state = state.apply_move(f).expect("free edge"),
            None => return state.history().to_vec(),
        }
    }
}

/// Also drives the bounded forced-break search used by scripted breakers:
/// with `rounds` below `⌊m/2⌋`, B wins by surviving until then.
pub(crate) struct SymmSearch {
    board: MaskBoard,
    rounds: usize,
    memo: Option<HashMap<CanonicalForm, bool>>,
    meter: Meter,
    memo_hits: u64,
    pub(crate) a_moves: HashMap<CanonicalForm, Edge>,
    pub(crate) b_moves: HashMap<CanonicalForm, Edge>,
}

impl SymmSearch {
    pub(crate) fn new(board: Arc<Graph>, rounds: usize, memo: bool, budget: &Budget) -> Self {
        SymmSearch {
            board: MaskBoard::new(board),
            rounds,
            memo: memo.then(HashMap::new),
            meter: budget.start(),
            memo_hits: 0,
            a_moves: HashMap::new(),
            b_moves: HashMap::new(),
        }
    }

    pub(crate) fn stats(&self) -> Stats {
        Stats {
            positions: self.meter.nodes(),
            memo_hits: self.memo_hits,
            elapsed: self.meter.elapsed(),
        }
    }

    fn lookup(
        &mut self,
        red: u64,
        blue: u64,
    ) -> (
        Option<bool>,
        Option<(CanonicalForm, crate::VertexPermutation)>,
    ) {
        if self.memo.is_none() {
            return (None, None);
        }
        let (form, labeling) = self.board.canonize(red, blue);
        let hit = self.memo.as_ref().and_then(|m| m.get(&form).copied());
        if hit.is_some() {
            self.memo_hits += 1;
        }
        (hit, Some((form, labeling)))
    }

    fn store(
        &mut self,
        key: Option<(CanonicalForm, crate::VertexPermutation)>,
        value: bool,
        mv: Option<Edge>,
        a: bool,
    ) {
        let (Some(memo), Some((form, labeling))) = (self.memo.as_mut(), key) else {
            return;
        };
        if let Some(e) = mv {
            let canonical = labeling.apply_edge(e);
            if a {
                self.a_moves.insert(form.clone(), canonical);
            } else {
                self.b_moves.insert(form.clone(), canonical);
            }
        }
        memo.insert(form, value);
    }

    /// After B's move in round `round` (red ≅ blue holds): can B keep it up?
    pub(crate) fn after_b(&mut self, red: u64, blue: u64, round: usize) -> Result<bool, Exhausted> {
        if round >= self.rounds {
            return Ok(true);
        }
        let (hit, key) = self.lookup(red, blue);
        if let Some(v) = hit {
            return Ok(v);
        }
        self.meter.tick()?;
        let free = self.board.full & !(red | blue);
        for i in bits(free) {
            if !self.after_a(red | 1 << i, blue, round + 1)? {
                let e = self.board.edge(i);
                self.store(key, false, Some(e), true);
                return Ok(false);
            }
        }
        self.store(key, true, None, true);
        Ok(true)
    }

    /// After A's move in round `round`: does B have a reply that matches?
    fn after_a(&mut self, red: u64, blue: u64, round: usize) -> Result<bool, Exhausted> {
        let (hit, key) = self.lookup(red, blue);
        if let Some(v) = hit {
            return Ok(v);
        }
        self.meter.tick()?;
        let target = self.board.mask_id(red);
        let free = self.board.full & !(red | blue);
        for i in bits(free) {
            let next = blue | 1 << i;
            if self.board.mask_id(next) == target && self.after_b(red, next, round)? {
                let e = self.board.edge(i);
                self.store(key, true, Some(e), false);
                return Ok(true);
            }
        }
        self.store(key, false, None, false);
        Ok(false)
    }

    /// The A move winning from a symmetric position, if the search finds one.
    pub(crate) fn winning_a_move(
        &mut self,
        red: u64,
        blue: u64,
        round: usize,
    ) -> Result<Option<Edge>, Exhausted> {
        if round >= self.rounds {
            return Ok(None);
        }
        let free = self.board.full & !(red | blue);
        for i in bits(free) {
            if !self.after_a(red | 1 << i, blue, round + 1)? {
                return Ok(Some(self.board.edge(i)));
            }
        }
        Ok(None)
    }
}
