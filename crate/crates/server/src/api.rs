//! HTTP handlers.

use std::sync::Arc;

use arbor::{canonical_key, MemoTable, Prob, StoppingDist, Tree, ValueBundle};
use axum::extract::rejection::{JsonRejection, QueryRejection};
use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use tower_http::cors::{AllowOrigin, CorsLayer};

use crate::config::Config;
use crate::error::ApiError;
use crate::session::{BotKind, HumanRole, Session, SessionSummary, SessionView, TreeView};
use crate::store::SessionStore;

#[derive(Clone)]
pub struct AppState {
    pub store: Arc<SessionStore>,
    pub memo: Arc<MemoTable>,
    pub config: Arc<Config>,
}

impl AppState {
    /// Builds the state, replaying persisted sessions if a directory is set.
    pub fn new(config: Config) -> Result<Self, ApiError> {
        let memo = Arc::new(MemoTable::new());
        let store = match &config.persist_dir {
            Some(dir) => SessionStore::persistent(dir, &memo)?,
            None => SessionStore::in_memory(),
        };
        Ok(AppState {
            store: Arc::new(store),
            memo,
            config: Arc::new(config),
        })
    }
}

#[derive(Debug, Deserialize)]
pub struct CreateRequest {
    pub tree: String,
    #[serde(default)]
    pub human_role: HumanRole,
    #[serde(default)]
    pub bot_kind: BotKind,
    pub seed: Option<u64>,
}

#[derive(Debug, Deserialize)]
pub struct GuessRequest {
    pub vertex: usize,
}

#[derive(Debug, Deserialize)]
pub struct AnalyzeQuery {
    pub tree: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct StoppingView {
    /// `distribution[t - 1] = P(tau = t)`.
    pub distribution: Vec<Prob>,
    pub odd_mass: Prob,
    pub expected: Prob,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct AnalyzeResponse {
    pub tree: TreeView,
    pub canonical_key: String,
    #[serde(flatten)]
    pub values: ValueBundle,
    pub stopping: StoppingView,
}

pub fn router(state: AppState) -> Router {
    let cors = cors_layer(&state.config.cors_origins);
    let app = Router::new()
        .route("/api/games", post(create_game).get(list_games))
        .route("/api/games/{id}", get(get_game).delete(delete_game))
        .route("/api/games/{id}/guess", post(guess))
        .route("/api/analyze", get(analyze))
        .with_state(state);
    match cors {
        Some(layer) => app.layer(layer),
        None => app,
    }
}

fn cors_layer(origins: &[String]) -> Option<CorsLayer> {
    if origins.is_empty() {
        return None;
    }
    let values = origins.iter().filter_map(|o| o.parse().ok()).collect::<Vec<_>>();
    Some(
        CorsLayer::new()
            .allow_origin(AllowOrigin::list(values))
            .allow_methods([
                axum::http::Method::GET,
                axum::http::Method::POST,
                axum::http::Method::DELETE,
            ])
            .allow_headers([axum::http::header::CONTENT_TYPE]),
    )
}

async fn blocking<T: Send + 'static>(f: impl FnOnce() -> Result<T, ApiError> + Send + 'static) -> Result<T, ApiError> {
    tokio::task::spawn_blocking(f)
        .await
        .map_err(|e| ApiError::Storage(format!("worker failed: {e}")))?
}

fn check_cap(tree: &Tree, cap: usize) -> Result<(), ApiError> {
    if tree.order() > cap {
        return Err(ApiError::TooLarge {
            order: tree.order(),
            cap,
        });
    }
    Ok(())
}

fn new_id(store: &SessionStore) -> String {
    loop {
        let id = format!("{:016x}", rand::random::<u64>());
        if !store.contains(&id) {
            return id;
        }
    }
}

async fn create_game(
    State(state): State<AppState>,
    body: Result<Json<CreateRequest>, JsonRejection>,
) -> Result<(StatusCode, Json<SessionView>), ApiError> {
    let Json(req) = body.map_err(|e| ApiError::BadRequest(e.body_text()))?;
    let view = blocking(move || {
        let tree = Tree::parse_spec(&req.tree)?;
        check_cap(&tree, state.config.analysis_cap)?;
        let seed = req.seed.unwrap_or_else(rand::random);
        let session = Session::create(new_id(&state.store), &req.tree, req.human_role, req.bot_kind, seed, &state.memo)?;
        let view = session.view();
        state.store.insert(session)?;
        Ok(view)
    })
    .await?;
    Ok((StatusCode::CREATED, Json(view)))
}

async fn guess(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Result<Json<GuessRequest>, JsonRejection>,
) -> Result<Json<SessionView>, ApiError> {
    let Json(req) = body.map_err(|e| ApiError::BadRequest(e.body_text()))?;
    let view = blocking(move || {
        state.store.update(&id, |s| {
            s.guess(req.vertex, &state.memo)?;
            Ok(s.view())
        })
    })
    .await?;
    Ok(Json(view))
}

async fn get_game(State(state): State<AppState>, Path(id): Path<String>) -> Result<Json<SessionView>, ApiError> {
    let handle = state.store.get(&id)?;
    let view = handle.lock().expect("session lock").view();
    Ok(Json(view))
}

async fn list_games(State(state): State<AppState>) -> Json<Vec<SessionSummary>> {
    Json(
        state
            .store
            .all()
            .iter()
            .map(|s| s.lock().expect("session lock").summary())
            .collect(),
    )
}

async fn delete_game(State(state): State<AppState>, Path(id): Path<String>) -> Result<StatusCode, ApiError> {
    state.store.remove(&id)?;
    Ok(StatusCode::NO_CONTENT)
}

async fn analyze(
    State(state): State<AppState>,
    query: Result<Query<AnalyzeQuery>, QueryRejection>,
) -> Result<Json<AnalyzeResponse>, ApiError> {
    let Query(q) = query.map_err(|e| ApiError::BadRequest(e.body_text()))?;
    let response = blocking(move || {
        let tree = Tree::parse_spec(&q.tree)?;
        check_cap(&tree, state.config.analysis_cap)?;
        Ok(analyze_tree(&tree, &state.memo))
    })
    .await?;
    Ok(Json(response))
}

pub fn analyze_tree(tree: &Tree, memo: &MemoTable) -> AnalyzeResponse {
    let stopping = StoppingDist::compute(memo, tree);
    AnalyzeResponse {
        tree: TreeView::from(tree),
        canonical_key: canonical_key(tree).to_string(),
        values: memo.bundle(tree),
        stopping: StoppingView {
            odd_mass: stopping.odd_mass(),
            expected: stopping.expectation(),
            distribution: stopping.probs,
        },
    }
}
