//! Avoidance games: player A colours red, player B colours blue, and whoever
//! first completes a monochromatic copy of the forbidden graph `F` loses.
//! Without `F` the game is the pure symmetry game played for SYMM.

pub mod embed;
mod kn;
mod product;
mod strategy;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError};
use crate::morphisms::find_isomorphism;
use embed::{find_copy, Host, Pattern};

pub use kn::{kn_p2_defender, kn_symmetry_breaker, KnP2Defender, KnSymmetryBreaker};
pub use product::{product_board, product_breaker, ProductBoard, ProductBreaker};
pub use strategy::{
    automorphism_strategy, AutomorphismStrategy, Strategy, StrategyFault, TableStrategy,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    A,
    B,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::A => Player::B,
            Player::B => Player::A,
        }
    }

    pub fn color(self) -> Color {
        match self {
            Player::A => Color::Red,
            Player::B => Color::Blue,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::A => "A",
            Player::B => "B",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    InProgress,
    ALost,
    BLost,
    Drawn,
}

impl Status {
    pub fn lost_by(player: Player) -> Status {
        match player {
            Player::A => Status::ALost,
            Player::B => Status::BLost,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("the forbidden graph has no edge")]
    EdgelessForbidden,
    #[error("game is already over ({0:?})")]
    GameOver(Status),
    #[error("{0} is not an edge of the board")]
    NotAnEdge(Edge),
    #[error("edge {0} is already coloured")]
    AlreadyColored(Edge),
    #[error("vertex {vertex} out of range for a board of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("a loop {{{0},{0}}} is not an edge")]
    Loop(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An immutable game position. [`GameState::apply_move`] returns a new state.
#[derive(Clone)]
pub struct GameState {
    board: Arc<Graph>,
    forbidden: Option<Arc<Pattern>>,
    colors: Vec<Option<Color>>,
    history: Vec<Edge>,
    status: Status,
}

pub fn new_game(board: Graph, forbidden: Option<Graph>) -> Result<GameState, GameError> {
    GameState::new(Arc::new(board), forbidden.map(Arc::new))
}

impl GameState {
    pub fn new(board: Arc<Graph>, forbidden: Option<Arc<Graph>>) -> Result<GameState, GameError> {
        if forbidden.as_ref().is_some_and(|f| f.size() == 0) {
            return Err(GameError::EdgelessForbidden);
        }
        let status = if board.size() == 0 {
            Status::Drawn
        } else {
            Status::InProgress
        };
        Ok(GameState {
            colors: vec![None; board.size()],
            board,
            forbidden: forbidden.map(|f| Arc::new(Pattern::new(&f))),
            history: Vec::new(),
            status,
        })
    }

    pub fn board(&self) -> &Graph {
        &self.board
    }

    pub fn board_arc(&self) -> Arc<Graph> {
        Arc::clone(&self.board)
    }

    pub fn forbidden(&self) -> Option<&Graph> {
        self.forbidden.as_deref().map(Pattern::graph)
    }

    pub fn history(&self) -> &[Edge] {
        &self.history
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_over(&self) -> bool {
        self.status != Status::InProgress
    }

    pub fn to_move(&self) -> Player {
        if self.history.len().is_multiple_of(2) {
            Player::A
        } else {
            Player::B
        }
    }

    /// Completed rounds (pairs of moves).
    pub fn rounds(&self) -> usize {
        self.history.len() / 2
    }

    pub fn color_of(&self, e: Edge) -> Option<Color> {
        self.board.edge_index(e).and_then(|i| self.colors[i])
    }

    pub fn is_uncolored(&self, e: Edge) -> bool {
        self.board
            .edge_index(e)
            .is_some_and(|i| self.colors[i].is_none())
    }

    pub fn edges_of(&self, color: Color) -> Vec<Edge> {
        self.board
            .edges()
            .iter()
            .zip(&self.colors)
            .filter(|(_, c)| **c == Some(color))
            .map(|(e, _)| *e)
            .collect()
    }

    pub fn red_edges(&self) -> Vec<Edge> {
        self.edges_of(Color::Red)
    }

    pub fn blue_edges(&self) -> Vec<Edge> {
        self.edges_of(Color::Blue)
    }

    pub fn uncolored_edges(&self) -> Vec<Edge> {
        self.board
            .edges()
            .iter()
            .zip(&self.colors)
            .filter(|(_, c)| c.is_none())
            .map(|(e, _)| *e)
            .collect()
    }

    /// Bit `i` set when board edge `i` has the colour. Boards of up to 64 edges.
    pub fn mask_of(&self, color: Color) -> u64 {
        assert!(
            self.board.size() <= 64,
            "edge masks cover boards of up to 64 edges"
        );
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == Some(color))
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    /// Colours `edge` for the player to move.
    pub fn apply_move(&self, edge: Edge) -> Result<GameState, GameError> {
        if self.is_over() {
            return Err(GameError::GameOver(self.status));
        }
        let i = self
            .board
            .edge_index(edge)
            .ok_or(GameError::NotAnEdge(edge))?;
        if self.colors[i].is_some() {
            return Err(GameError::AlreadyColored(edge));
        }
        let mover = self.to_move();
        let mut next = self.clone();
        next.colors[i] = Some(mover.color());
        next.history.push(edge);
        next.status = if next.copy_through(mover.color(), Some(edge)).is_some() {
            Status::lost_by(mover)
        } else if next.history.len() == self.board.size() {
            Status::Drawn
        } else {
            Status::InProgress
        };
        Ok(next)
    }

    /// Parses `[u, v]` against the board, for callers holding raw pairs.
    pub fn edge(&self, u: usize, v: usize) -> Result<Edge, GameError> {
        let order = self.board.order();
        for vertex in [u, v] {
            if vertex >= order {
                return Err(GameError::VertexOutOfRange { vertex, order });
            }
        }
        if u == v {
            return Err(GameError::Loop(u));
        }
        Ok(Edge::new(u, v))
    }

    fn copy_through(&self, color: Color, through: Option<Edge>) -> Option<Vec<Edge>> {
        let pattern = self.forbidden.as_deref()?;
        let host = Host::new(self.board.order(), self.edges_of(color));
        find_copy(pattern, &host, through)
    }

    /// Whether the edges of `color` contain a copy of `F` (false without `F`).
    pub fn contains_mono_copy(&self, color: Color) -> bool {
        self.copy_through(color, None).is_some()
    }

    /// A monochromatic copy of `F` in `color`, as board edges.
    pub fn mono_copy(&self, color: Color) -> Option<Vec<Edge>> {
        self.copy_through(color, None)
    }

    /// Red and blue edge-subgraphs isomorphic (on their non-isolated vertices).
    pub fn red_blue_isomorphic(&self) -> bool {
        let red = self.red_edges();
        let blue = self.blue_edges();
        red.len() == blue.len()
            && find_isomorphism(
                &self.board.edge_subgraph(&red),
                &self.board.edge_subgraph(&blue),
            )
            .is_some()
    }

    pub fn transcript(&self) -> Transcript {
        Transcript {
            graph: self.board.to_graph6(),
            forbidden: self.forbidden().map(Graph::to_graph6),
            moves: self.history.clone(),
            status: self.status,
        }
    }
}

impl fmt::Debug for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GameState({:?}, moves=[", self.status)?;
        for (i, e) in self.history.iter().enumerate() {
            let who = if i % 2 == 0 { 'a' } else { 'b' };
            write!(f, "{}{who}{e}", if i > 0 { " " } else { "" })?;
        }
        write!(f, "])")
    }
}

/// The JSON interchange form of a played game.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub graph: String,
    pub forbidden: Option<String>,
    pub moves: Vec<Edge>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("move {index} ({edge}) rejected: {source}")]
    Move {
        index: usize,
        edge: Edge,
        source: GameError,
    },
    #[error("transcript claims {claimed:?}, replay ends {actual:?}")]
    StatusMismatch { claimed: Status, actual: Status },
}

impl Transcript {
    /// Replays the moves from scratch and checks the recorded status.
    pub fn replay(&self) -> Result<GameState, ReplayError> {
        let board = Graph::from_graph6(&self.graph).map_err(GameError::from)?;
        let forbidden = self
            .forbidden
            .as_deref()
            .map(Graph::from_graph6)
            .transpose()
            .map_err(GameError::from)?;
        let mut state = new_game(board, forbidden)?;
        for (index, &edge) in self.moves.iter().enumerate() {
            state = state.apply_move(edge).map_err(|source| ReplayError::Move {
                index,
                edge,
                source,
            })?;
        }
        if state.status() != self.status {
            return Err(ReplayError::StatusMismatch {
                claimed: self.status,
                actual: state.status(),
            });
        }
        Ok(state)
    }
}
