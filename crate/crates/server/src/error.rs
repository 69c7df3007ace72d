use arbor::TreeError;
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ApiError {
    #[error("no session with id {0:?}")]
    UnknownSession(String),
    #[error("it is not the human's turn")]
    NotYourTurn,
    #[error("vertex {0} is not a candidate")]
    NotACandidate(usize),
    #[error("the game is over")]
    SessionFinished,
    #[error("tree has {order} vertices; analysis is capped at {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("{0}")]
    BadRequest(String),
    #[error("stored session {0:?} does not replay to its recorded history")]
    ReplayMismatch(String),
    #[error("storage: {0}")]
    Storage(String),
}

/// JSON error body: a stable machine-readable code plus a message.
#[derive(Debug, Serialize, Deserialize)]
pub struct ErrorBody {
    pub error: String,
    pub message: String,
}

impl ApiError {
    pub fn code(&self) -> &'static str {
        match self {
            ApiError::UnknownSession(_) => "unknown_session",
            ApiError::NotYourTurn => "not_your_turn",
            ApiError::NotACandidate(_) => "not_a_candidate",
            ApiError::SessionFinished => "session_finished",
            ApiError::TooLarge { .. } => "too_large",
            ApiError::Tree(_) => "invalid_tree",
            ApiError::BadRequest(_) => "bad_request",
            ApiError::ReplayMismatch(_) => "replay_mismatch",
            ApiError::Storage(_) => "storage",
        }
    }

    pub fn status(&self) -> StatusCode {
        match self {
            ApiError::UnknownSession(_) => StatusCode::NOT_FOUND,
            ApiError::NotYourTurn | ApiError::SessionFinished => StatusCode::CONFLICT,
            ApiError::NotACandidate(_) => StatusCode::UNPROCESSABLE_ENTITY,
            ApiError::TooLarge { .. } => StatusCode::PAYLOAD_TOO_LARGE,
            ApiError::Tree(_) | ApiError::BadRequest(_) => StatusCode::BAD_REQUEST,
            ApiError::ReplayMismatch(_) | ApiError::Storage(_) => StatusCode::INTERNAL_SERVER_ERROR,
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = ErrorBody {
            error: self.code().to_string(),
            message: self.to_string(),
        };
        (self.status(), Json(body)).into_response()
    }
}
