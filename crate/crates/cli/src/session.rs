//! One human-versus-engine game.

use std::time::{SystemTime, UNIX_EPOCH};

use avoid_core::game::{Color, GameError, StrategyFault};
use avoid_core::graph::JsonGraph;
use avoid_core::{new_game, Edge, GameState, Graph, Player, Status, Strategy, Transcript};
use serde::Serialize;
use thiserror::Error;

use crate::engine::{build_engine, EngineError, EngineKind};

#[derive(Debug, Error)]
pub enum SessionError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("illegal move: {0}")]
    Illegal(GameError),
    #[error("it is the engine's turn")]
    NotYourTurn,
    #[error(transparent)]
    Fault(#[from] StrategyFault),
}

pub struct Session {
    pub id: String,
    pub created: u64,
    state: GameState,
    human: Player,
    kind: EngineKind,
    engine: Box<dyn Strategy>,
}

/// The client's full view of a game.
#[derive(Clone, Debug, Serialize)]
pub struct StateView {
    pub id: String,
    pub board: JsonGraph,
    pub graph6: String,
    pub forbidden: Option<JsonGraph>,
    /// One entry per board edge, in `board.edges` order.
    pub colors: Vec<Option<&'static str>>,
    pub moves: Vec<Edge>,
    pub last_move: Option<Edge>,
    pub to_move: Option<Player>,
    pub status: Status,
    pub human_side: Player,
    pub engine_side: Player,
    pub engine: EngineKind,
    pub red_blue_isomorphic: bool,
    /// The loser's monochromatic copy of the forbidden graph.
    pub losing_copy: Option<Vec<Edge>>,
    pub transcript: Transcript,
    pub created: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct MoveReply {
    pub human_move: Edge,
    pub engine_move: Option<Edge>,
    pub status: Status,
    pub red_blue_isomorphic: bool,
    pub state: StateView,
}

fn color_name(c: Color) -> &'static str {
    match c {
        Color::Red => "red",
        Color::Blue => "blue",
    }
}

impl Session {
    /// Sets up the game and, when the engine plays A, its opening move.
    pub fn new(
        id: String,
        board: Graph,
        forbidden: Option<Graph>,
        human: Player,
        kind: EngineKind,
    ) -> Result<Session, SessionError> {
        let engine = build_engine(kind, &board, forbidden.as_ref(), human.other())?;
        let state = new_game(board, forbidden).map_err(SessionError::Illegal)?;
        let created = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        let mut s = Session {
            id,
            created,
            state,
            human,
            kind,
            engine,
        };
        s.engine_turn()?;
        Ok(s)
    }

    pub fn state(&self) -> &GameState {
        &self.state
    }

    fn engine_turn(&mut self) -> Result<Option<Edge>, SessionError> {
        if self.state.is_over() || self.state.to_move() == self.human {
            return Ok(None);
        }
        let e = self.engine.choose(&self.state)?;
        self.state = self.state.apply_move(e).map_err(|err| {
            StrategyFault::new(self.engine.name(), format!("illegal reply {e}: {err}"))
        })?;
        Ok(Some(e))
    }

    pub fn human_move(&mut self, u: usize, v: usize) -> Result<MoveReply, SessionError> {
        if let Status::InProgress = self.state.status() {
            if self.state.to_move() != self.human {
                return Err(SessionError::NotYourTurn);
            }
        }
        let edge = self.state.edge(u, v).map_err(SessionError::Illegal)?;
        self.state = self.state.apply_move(edge).map_err(SessionError::Illegal)?;
        let engine_move = self.engine_turn()?;
        let state = self.view();
        Ok(MoveReply {
            human_move: edge,
            engine_move,
            status: state.status,
            red_blue_isomorphic: state.red_blue_isomorphic,
            state,
        })
    }

    pub fn view(&self) -> StateView {
        let s = &self.state;
        let board = s.board();
        let status = s.status();
        let losing_copy = match status {
            Status::ALost => s.mono_copy(Color::Red),
            Status::BLost => s.mono_copy(Color::Blue),
            _ => None,
        };
        StateView {
            id: self.id.clone(),
            board: board.to_json(),
            graph6: board.to_graph6(),
            forbidden: s.forbidden().map(Graph::to_json),
            colors: board
                .edges()
                .iter()
                .map(|&e| s.color_of(e).map(color_name))
                .collect(),
            moves: s.history().to_vec(),
            last_move: s.history().last().copied(),
            to_move: (!s.is_over()).then(|| s.to_move()),
            status,
            human_side: self.human,
            engine_side: self.human.other(),
            engine: self.kind,
            red_blue_isomorphic: s.red_blue_isomorphic(),
            losing_copy,
            transcript: s.transcript(),
            created: self.created,
        }
    }
}
