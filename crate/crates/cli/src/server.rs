//! The JSON game service.

use std::net::SocketAddr;
use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use avoid_core::game::{product_board, ProductBoard};
use avoid_core::graph::make_family;
use avoid_core::{FamilySpec, Graph, Player};
use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use lru::LruCache;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::engine::{EngineError, EngineKind};
use crate::input::{parse_family, parse_graph6, InputError};
use crate::session::{Session, SessionError};

pub const DEFAULT_SESSIONS: usize = 256;

type Shared = Arc<tokio::sync::Mutex<Session>>;

#[derive(Clone)]
pub struct AppState {
    sessions: Arc<Mutex<LruCache<String, Shared>>>,
    next_id: Arc<AtomicU64>,
}

impl AppState {
    pub fn new(capacity: usize) -> Self {
        let cap = NonZeroUsize::new(capacity.max(1)).expect("positive");
        AppState {
            sessions: Arc::new(Mutex::new(LruCache::new(cap))),
            next_id: Arc::new(AtomicU64::new(1)),
        }
    }

    fn get(&self, id: &str) -> Option<Shared> {
        self.sessions.lock().expect("session map").get(id).cloned()
    }
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/api/families", get(families))
        .route("/api/games", post(create))
        .route("/api/games/{id}", get(show).delete(remove))
        .route("/api/games/{id}/moves", post(play_move))
        .with_state(state)
}

pub async fn serve(addr: SocketAddr, capacity: usize) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    log::info!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(AppState::new(capacity)))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}

struct ApiError(StatusCode, String);

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(json!({ "error": self.1 }))).into_response()
    }
}

impl From<JsonRejection> for ApiError {
    fn from(r: JsonRejection) -> Self {
        ApiError(StatusCode::BAD_REQUEST, r.body_text())
    }
}

impl From<InputError> for ApiError {
    fn from(e: InputError) -> Self {
        ApiError(StatusCode::BAD_REQUEST, e.to_string())
    }
}

impl From<SessionError> for ApiError {
    fn from(e: SessionError) -> Self {
        let code = match &e {
            SessionError::Engine(EngineError::Oversized(_) | EngineError::NotApplicable(..)) => {
                StatusCode::UNPROCESSABLE_ENTITY
            }
            SessionError::Engine(EngineError::WrongSide { .. }) => StatusCode::UNPROCESSABLE_ENTITY,
            SessionError::Illegal(_) | SessionError::NotYourTurn => StatusCode::CONFLICT,
            SessionError::Fault(_) => StatusCode::INTERNAL_SERVER_ERROR,
        };
        ApiError(code, e.to_string())
    }
}

fn not_found(id: &str) -> ApiError {
    ApiError(StatusCode::NOT_FOUND, format!("no game `{id}`"))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphRef {
    family: Option<String>,
    graph6: Option<String>,
}

impl GraphRef {
    fn resolve(&self) -> Result<Graph, ApiError> {
        match (&self.family, &self.graph6) {
            (Some(f), None) => Ok(parse_family(f)?),
            (None, Some(g)) => Ok(parse_graph6(g)?),
            _ => Err(ApiError(
                StatusCode::BAD_REQUEST,
                "give exactly one of `family` and `graph6`".into(),
            )),
        }
    }
}

#[derive(Debug, Deserialize)]
struct CreateGame {
    graph: GraphRef,
    #[serde(default)]
    forbidden: Option<GraphRef>,
    human_side: Player,
    engine: EngineKind,
}

#[derive(Debug, Deserialize)]
struct MoveRequest {
    edge: [usize; 2],
}

#[derive(Serialize)]
struct FamilyEntry {
    name: String,
    order: usize,
    size: usize,
    graph6: String,
}

const CATALOG: &[&str] = &[
    "K3",
    "K4",
    "K5",
    "K6",
    "P2",
    "P3",
    "P5",
    "P7",
    "C4",
    "C5",
    "C6",
    "C8",
    "K2,2",
    "K2,3",
    "K3,3",
    "K3,3-e",
    "K6-M",
    "star3",
    "star5",
    "Q3",
    "grid3x3",
    "octahedron",
    "cube",
    "K3+e",
];

async fn families() -> Json<Vec<FamilyEntry>> {
    let entry = |name: String, g: Graph| FamilyEntry {
        name,
        order: g.order(),
        size: g.size(),
        graph6: g.to_graph6(),
    };
    let mut out: Vec<FamilyEntry> = CATALOG
        .iter()
        .map(|&n| {
            entry(
                n.to_string(),
                parse_family(n).expect("catalog entries parse"),
            )
        })
        .collect();
    out.extend(
        FamilySpec::fig1_catalog()
            .map(|spec| entry(spec.to_string(), make_family(&spec).expect("catalog"))),
    );
    out.extend(
        ProductBoard::ALL
            .into_iter()
            .map(|b| entry(b.name().to_string(), product_board(b))),
    );
    Json(out)
}

async fn create(
    State(app): State<AppState>,
    body: Result<Json<CreateGame>, JsonRejection>,
) -> Result<(StatusCode, Json<serde_json::Value>), ApiError> {
    let Json(req) = body?;
    let board = req.graph.resolve()?;
    let forbidden = req.forbidden.as_ref().map(GraphRef::resolve).transpose()?;
    let id = format!("g{}", app.next_id.fetch_add(1, Ordering::Relaxed));
    let session = tokio::task::spawn_blocking(move || {
        Session::new(id, board, forbidden, req.human_side, req.engine)
    })
    .await
    .map_err(|e| ApiError(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))??;
    let view = session.view();
    let id = session.id.clone();
    app.sessions
        .lock()
        .expect("session map")
        .put(id.clone(), Arc::new(tokio::sync::Mutex::new(session)));
    Ok((
        StatusCode::CREATED,
        Json(json!({ "id": id, "state": view })),
    ))
}

async fn show(State(app): State<AppState>, Path(id): Path<String>) -> Result<Response, ApiError> {
    let session = app.get(&id).ok_or_else(|| not_found(&id))?;
    let view = session.lock().await.view();
    Ok(Json(view).into_response())
}

async fn remove(
    State(app): State<AppState>,
    Path(id): Path<String>,
) -> Result<StatusCode, ApiError> {
    app.sessions
        .lock()
        .expect("session map")
        .pop(&id)
        .ok_or_else(|| not_found(&id))?;
    Ok(StatusCode::NO_CONTENT)
}

async fn play_move(
    State(app): State<AppState>,
    Path(id): Path<String>,
    body: Result<Json<MoveRequest>, JsonRejection>,
) -> Result<Response, ApiError> {
    let session = app.get(&id).ok_or_else(|| not_found(&id))?;
    let Json(MoveRequest { edge: [u, v] }) = body?;
    // moves of one session run one at a time
    let mut guard = session.lock_owned().await;
    let reply = tokio::task::spawn_blocking(move || guard.human_move(u, v))
        .await
        .map_err(|e| ApiError(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))??;
    Ok(Json(reply).into_response())
}
