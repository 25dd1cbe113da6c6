//! HTTP API over the session store.

use std::sync::Arc;

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::json::{report_json, seed_to_json, torus_to_json, CartanInput};
use crate::ops::{build_seed, run_check, step_json, Check, CheckParams, InputError};
use crate::session::{Session, Store};

#[derive(Debug)]
pub enum ApiError {
    BadRequest(InputError),
    NotFound(String),
    Failed(Value),
    Internal(String),
}

impl From<InputError> for ApiError {
    fn from(e: InputError) -> Self {
        ApiError::BadRequest(e)
    }
}

impl From<qck_core::Error> for ApiError {
    fn from(e: qck_core::Error) -> Self {
        ApiError::BadRequest(e.into())
    }
}

impl From<std::io::Error> for ApiError {
    fn from(e: std::io::Error) -> Self {
        ApiError::Internal(e.to_string())
    }
}

impl From<JsonRejection> for ApiError {
    fn from(e: JsonRejection) -> Self {
        ApiError::BadRequest(InputError::new("InvalidJson", e.body_text()))
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        match self {
            ApiError::BadRequest(e) => (StatusCode::BAD_REQUEST, Json(json!({"error": e.code, "message": e.message}))).into_response(),
            ApiError::NotFound(id) => {
                (StatusCode::NOT_FOUND, Json(json!({"error": "NotFound", "message": format!("no session {}", id)}))).into_response()
            }
            ApiError::Failed(report) => (StatusCode::UNPROCESSABLE_ENTITY, Json(report)).into_response(),
            ApiError::Internal(m) => (StatusCode::INTERNAL_SERVER_ERROR, Json(json!({"error": "Internal", "message": m}))).into_response(),
        }
    }
}

type ApiResult = Result<Json<Value>, ApiError>;
type AppState = Arc<Store>;

pub fn router(store: Arc<Store>) -> Router {
    Router::new()
        .route("/api/seeds", post(create_seed))
        .route("/api/seeds/{id}", get(get_seed))
        .route("/api/seeds/{id}/mutate", post(mutate))
        .route("/api/seeds/{id}/undo", post(undo))
        .route("/api/seeds/{id}/variables", get(variables))
        .route("/api/verify", post(verify))
        .with_state(store)
}

#[derive(Deserialize)]
struct CreateSeed {
    cartan: CartanInput,
    word: Vec<usize>,
}

async fn create_seed(State(store): State<AppState>, body: Result<Json<CreateSeed>, JsonRejection>) -> ApiResult {
    let Json(body) = body?;
    let data = build_seed(&body.cartan, &body.word)?;
    let session = store.create(data)?;
    Ok(Json(json!({"id": session.id, "seed": seed_to_json(&session.current())})))
}

fn open(store: &Store, id: &str) -> Result<Session, ApiError> {
    let file = store.load(id)?.ok_or_else(|| ApiError::NotFound(id.to_string()))?;
    Ok(Session::from_file(&file)?)
}

fn describe(s: &Session) -> Value {
    json!({
        "id": s.id,
        "seed": seed_to_json(&s.current()),
        "history": s.state.history().iter().map(|h| h.k + 1).collect::<Vec<_>>(),
    })
}

async fn get_seed(State(store): State<AppState>, Path(id): Path<String>) -> ApiResult {
    Ok(Json(describe(&open(&store, &id)?)))
}

#[derive(Deserialize)]
struct MutateBody {
    k: usize,
    #[serde(default)]
    dry_run: bool,
}

async fn mutate(State(store): State<AppState>, Path(id): Path<String>, body: Result<Json<MutateBody>, JsonRejection>) -> ApiResult {
    let Json(body) = body?;
    let lock = store.lock(&id);
    let _guard = lock.lock().await;
    let mut session = open(&store, &id)?;
    let k = body
        .k
        .checked_sub(1)
        .filter(|&k| k < session.state.seed().size())
        .ok_or_else(|| InputError::new("UnknownIndex", format!("k = {} out of range 1..={}", body.k, session.state.seed().size())))?;
    let cartan = session.data.cartan.clone();
    let step = session.state.mutate(&cartan, k)?;
    if !body.dry_run {
        store.save(&session)?;
    }
    let step = step_json(&step);
    Ok(Json(json!({
        "seed": seed_to_json(&session.current()),
        "exchanged_variable": step.exchanged_variable,
        "m_k": step.m_k,
        "m_k_prime": step.m_k_prime,
        "dry_run": body.dry_run,
    })))
}

async fn undo(State(store): State<AppState>, Path(id): Path<String>) -> ApiResult {
    let lock = store.lock(&id);
    let _guard = lock.lock().await;
    let mut session = open(&store, &id)?;
    let k = session.state.undo()?;
    store.save(&session)?;
    let mut out = describe(&session);
    out["undone"] = json!(k + 1);
    Ok(Json(out))
}

async fn variables(State(store): State<AppState>, Path(id): Path<String>) -> ApiResult {
    let session = open(&store, &id)?;
    let vars: Vec<_> = session.state.variables().iter().map(torus_to_json).collect();
    Ok(Json(json!({"id": id, "variables": vars})))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VerifyBody {
    check: Check,
    #[serde(default)]
    params: CheckParams,
}

async fn verify(body: Result<Json<VerifyBody>, JsonRejection>) -> ApiResult {
    let Json(body) = body?;
    let report = tokio::task::spawn_blocking(move || run_check(body.check, &body.params))
        .await
        .map_err(|e| ApiError::Internal(e.to_string()))??;
    let out = report_json(&report);
    if report.pass {
        Ok(Json(out))
    } else {
        Err(ApiError::Failed(out))
    }
}

/// Serves the API on `0.0.0.0:port` until the process is stopped.
pub async fn serve(store: Arc<Store>, port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("0.0.0.0", port)).await?;
    eprintln!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(store)).await
}
