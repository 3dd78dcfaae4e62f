//! Symmetry breakers for the three product graphs outside SYMM.
//!
//! Boards use the pair labelling `(u1, u2) ↦ u1·n2 + u2` with `K3+e` on
//! edges 01, 02, 12, 03 and `P2` the path 0-1-2. Each breaker follows the
//! scripted case analysis; where a script runs out (B blocks a star, or a
//! line the sketch does not cover) it falls back to a bounded search for a
//! move after which no sequence of B replies keeps red ≅ blue.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::strategy::{Strategy, StrategyFault};
use super::{Color, GameState, Player};
use crate::budget::Budget;
use crate::graph::{cartesian, categorical, lexicographic, make_family, Edge, FamilySpec, Graph};
use crate::solver::SymmSearch;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ProductBoard {
    /// `(K3+e) × P2`, 12 vertices and 20 edges.
    CartesianK3eP2,
    /// `P2[K3+e]`, 12 vertices and 44 edges.
    LexiP2K3e,
    /// `(K3+e) · (K3+e)`, 16 vertices and 32 edges.
    CategoricalK3eK3e,
}

impl ProductBoard {
    pub const ALL: [ProductBoard; 3] = [
        ProductBoard::CartesianK3eP2,
        ProductBoard::LexiP2K3e,
        ProductBoard::CategoricalK3eK3e,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductBoard::CartesianK3eP2 => "cartesianK3eP2",
            ProductBoard::LexiP2K3e => "lexiP2K3e",
            ProductBoard::CategoricalK3eK3e => "categoricalK3eK3e",
        }
    }
}

impl fmt::Display for ProductBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductBoard {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ProductBoard::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown product board `{s}`"))
    }
}

pub fn product_board(which: ProductBoard) -> Graph {
    let k3e = make_family(&FamilySpec::TrianglePlusEdge).expect("fixed family");
    let p2 = make_family(&FamilySpec::Path(2)).expect("fixed family");
    match which {
        ProductBoard::CartesianK3eP2 => cartesian(&k3e, &p2),
        ProductBoard::LexiP2K3e => lexicographic(&p2, &k3e),
        ProductBoard::CategoricalK3eK3e => categorical(&k3e, &k3e),
    }
}

/// Node budget for one fallback search.
const FALLBACK_NODES: u64 = 5_000_000;

#[derive(Clone, Debug)]
pub struct ProductBreaker {
    which: ProductBoard,
    board: Arc<Graph>,
}

pub fn product_breaker(which: ProductBoard) -> ProductBreaker {
    ProductBreaker {
        which,
        board: Arc::new(product_board(which)),
    }
}

impl ProductBreaker {
    pub fn which(&self) -> ProductBoard {
        self.which
    }

    fn scripted(&self, state: &GameState) -> Option<Edge> {
        match self.which {
            ProductBoard::CartesianK3eP2 => cartesian_script(state),
            ProductBoard::LexiP2K3e => lexi_script(state),
            // the unique vertex of degree 9
            ProductBoard::CategoricalK3eK3e => star_move(state, 0),
        }
    }

    fn fallback(&self, state: &GameState) -> Result<Edge, StrategyFault> {
        let red = state.mask_of(Color::Red);
        let blue = state.mask_of(Color::Blue);
        let round = state.rounds();
        let half = self.board.size() / 2;
        for limit in round + 1..=half {
            let mut search = SymmSearch::new(
                Arc::clone(&self.board),
                limit,
                true,
                &Budget::nodes(FALLBACK_NODES),
            );
            match search.winning_a_move(red, blue, round) {
                Ok(Some(e)) => return Ok(e),
                Ok(None) => continue,
                Err(_) => break,
            }
        }
        Err(StrategyFault::new(
            self.name(),
            format!("no forced break found from {state:?}"),
        ))
    }
}

impl Strategy for ProductBreaker {
    fn name(&self) -> String {
        format!("product-breaker({})", self.which)
    }

    fn side(&self) -> Player {
        Player::A
    }

    fn choose(&self, state: &GameState) -> Result<Edge, StrategyFault> {
        if state.board() != &*self.board {
            return Err(StrategyFault::new(
                self.name(),
                "board is not the product graph",
            ));
        }
        match self.scripted(state) {
            Some(e) if state.is_uncolored(e) => Ok(e),
            _ => self.fallback(state),
        }
    }
}

/// The smallest free edge at `c`.
fn star_move(state: &GameState, c: usize) -> Option<Edge> {
    state
        .board()
        .neighbors(c)
        .iter()
        .map(|&x| Edge::new(c, x))
        .filter(|&e| state.is_uncolored(e))
        .min()
}

/// `v = (0,1)`, `v1 = (1,1)`, `v2 = (2,1)`.
fn cartesian_script(state: &GameState) -> Option<Edge> {
    const V: usize = 1;
    const V1: usize = 4;
    const V2: usize = 7;
    let h = state.history();
    if h.is_empty() {
        return Some(Edge::new(V, V1));
    }
    let reply = h[1];
    if !reply.contains(V) {
        return star_move(state, V);
    }
    if reply != Edge::new(V, V2) {
        return match h.len() {
            2 => Some(Edge::new(V, V2)),
            4 => Some(Edge::new(V1, V2)),
            _ => None,
        };
    }
    // B took v-v2: a red 4-star at v, then a pendant edge at each leaf,
    // which B cannot copy at its own leaf v.
    let red = state.red_edges();
    let star: Vec<usize> = red.iter().filter_map(|e| e.other(V)).collect();
    if star.len() < 4 {
        return star_move(state, V);
    }
    let used = |x: usize| x == V || red.iter().any(|e| e.contains(x));
    star.iter()
        .filter(|&&leaf| red.iter().filter(|e| e.contains(leaf)).count() == 1)
        .flat_map(|&leaf| {
            state
                .board()
                .neighbors(leaf)
                .iter()
                .map(move |&x| (leaf, x))
        })
        .filter(|&(_, x)| !used(x))
        .map(|(leaf, x)| Edge::new(leaf, x))
        .find(|&e| state.is_uncolored(e))
}

/// `u4 = (0,3)`, `v1..v4 = (1,0)..(1,3)`.
fn lexi_script(state: &GameState) -> Option<Edge> {
    const U4: usize = 3;
    const V1: usize = 4;
    const V2: usize = 5;
    const V3: usize = 6;
    let h = state.history();
    if h.is_empty() {
        return Some(Edge::new(V1, V2));
    }
    if h[1] != Edge::new(V1, V3) {
        return if h.len() == 2 {
            Some(Edge::new(V1, V3))
        } else {
            star_move(state, V1)
        };
    }
    if h.len() == 2 {
        return Some(Edge::new(V1, U4));
    }
    let second = h[3];
    if second.contains(V1) {
        return star_move(state, V1);
    }
    if second == Edge::new(V3, V2) || second == Edge::new(V3, U4) {
        return (h.len() == 4).then(|| Edge::new(U4, V2));
    }
    if h.len() == 4 {
        return Some(Edge::new(V2, V3));
    }
    if h[5].contains(V2) {
        return (h.len() == 6).then(|| Edge::new(U4, V3));
    }
    star_move(state, V2)
}
