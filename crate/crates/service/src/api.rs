//! HTTP API. Every body is JSON, errors included.

use std::sync::Arc;

use axum::extract::multipart::Multipart;
use axum::extract::rejection::JsonRejection;
use axum::extract::{DefaultBodyLimit, Path, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use cvmatch_core::ingest::IngestError;
use cvmatch_core::matching::{JobDescription, MatchError, WeightProfile};
use serde::{Deserialize, Serialize};

use crate::service::{Service, ServiceError};
use crate::store::StoreError;

/// Largest accepted upload.
pub const MAX_UPLOAD_BYTES: usize = 16 * 1024 * 1024;
/// Multipart field holding the resume.
pub const FILE_FIELD: &str = "file";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApiError {
    /// Stable machine-readable code.
    pub error: String,
    pub message: String,
}

pub struct ApiFailure {
    status: StatusCode,
    body: ApiError,
}

impl ApiFailure {
    fn new(status: StatusCode, code: &str, message: impl Into<String>) -> Self {
        Self { status, body: ApiError { error: code.into(), message: message.into() } }
    }

    fn bad_request(message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, "invalid_request", message)
    }
}

impl From<ServiceError> for ApiFailure {
    fn from(e: ServiceError) -> Self {
        let message = e.to_string();
        let (status, code) = match &e {
            ServiceError::NotFound { .. } => (StatusCode::NOT_FOUND, "not_found"),
            ServiceError::InvalidRequest(_) => (StatusCode::BAD_REQUEST, "invalid_request"),
            ServiceError::Ingest { source: IngestError::EmptyDocument { .. }, .. } => {
                (StatusCode::UNPROCESSABLE_ENTITY, "empty_document")
            }
            ServiceError::Ingest { .. } => (StatusCode::UNPROCESSABLE_ENTITY, "malformed_document"),
            ServiceError::Match(MatchError::InvalidWeights(_)) => (StatusCode::BAD_REQUEST, "invalid_weights"),
            ServiceError::Match(MatchError::InvalidJob { .. }) => (StatusCode::BAD_REQUEST, "invalid_job"),
            ServiceError::Store(StoreError::AlreadyExists { .. }) => (StatusCode::CONFLICT, "conflict"),
            ServiceError::Store(StoreError::InvalidId(_)) => (StatusCode::BAD_REQUEST, "invalid_request"),
            ServiceError::Match(_) | ServiceError::Store(_) | ServiceError::Lexicon(_) => {
                tracing::error!(error = %e, "request failed");
                (StatusCode::INTERNAL_SERVER_ERROR, "internal")
            }
        };
        Self::new(status, code, message)
    }
}

impl IntoResponse for ApiFailure {
    fn into_response(self) -> Response {
        (self.status, Json(self.body)).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiFailure>;

/// Scoring and parsing are CPU-bound and the embedding client blocks, so
/// both run off the async workers.
async fn blocking<T: Send + 'static>(f: impl FnOnce() -> Result<T, ServiceError> + Send + 'static) -> ApiResult<T> {
    match tokio::task::spawn_blocking(f).await {
        Ok(result) => result.map(Json).map_err(ApiFailure::from),
        Err(e) => Err(ApiFailure::new(StatusCode::INTERNAL_SERVER_ERROR, "internal", e.to_string())),
    }
}

pub fn router(service: Arc<Service>) -> Router {
    Router::new()
        .route("/health", get(health))
        .route("/resumes", post(upload_resume))
        .route("/resumes/{id}", get(get_resume))
        .route("/jobs", post(create_job))
        .route("/jobs/{id}", get(get_job))
        .route("/jobs/{id}/ranking", get(get_ranking))
        .route("/jobs/{job_id}/candidates/{candidate_id}/explanation", get(get_explanation))
        .fallback(|| async { ApiFailure::new(StatusCode::NOT_FOUND, "not_found", "no such route") })
        .layer(DefaultBodyLimit::max(MAX_UPLOAD_BYTES))
        .with_state(service)
}

async fn health(State(service): State<Arc<Service>>) -> Json<crate::service::Health> {
    Json(service.health())
}

async fn upload_resume(
    State(service): State<Arc<Service>>,
    mut multipart: Multipart,
) -> Result<(StatusCode, Json<crate::records::CandidateRecord>), ApiFailure> {
    let mut upload = None;
    while let Some(field) = multipart.next_field().await.map_err(|e| ApiFailure::bad_request(e.body_text()))? {
        if field.name() != Some(FILE_FIELD) {
            continue;
        }
        let filename = field.file_name().unwrap_or("upload").to_string();
        let bytes = field.bytes().await.map_err(|e| ApiFailure::bad_request(e.body_text()))?;
        upload = Some((filename, bytes.to_vec()));
        break;
    }
    let (filename, bytes) =
        upload.ok_or_else(|| ApiFailure::bad_request(format!("multipart field `{FILE_FIELD}` is required")))?;
    let Json(record) = blocking(move || service.ingest_resume(&filename, bytes)).await?;
    Ok((StatusCode::CREATED, Json(record)))
}

async fn get_resume(
    State(service): State<Arc<Service>>,
    Path(id): Path<String>,
) -> ApiResult<crate::records::CandidateRecord> {
    Ok(Json(service.candidate(&id)?))
}

async fn create_job(
    State(service): State<Arc<Service>>,
    body: Result<Json<JobDescription>, JsonRejection>,
) -> Result<(StatusCode, Json<crate::records::JobRecord>), ApiFailure> {
    let Json(job) = body.map_err(|e| ApiFailure::bad_request(e.body_text()))?;
    Ok((StatusCode::CREATED, Json(service.create_job(job)?)))
}

async fn get_job(State(service): State<Arc<Service>>, Path(id): Path<String>) -> ApiResult<crate::records::JobRecord> {
    Ok(Json(service.job(&id)?))
}

/// Query values stay strings so parse failures get JSON error bodies.
#[derive(Debug, Default, Deserialize)]
pub struct RankingQuery {
    pub k: Option<String>,
    pub weights: Option<String>,
}

fn parse_weights(raw: Option<&str>) -> Result<Option<WeightProfile>, ApiFailure> {
    raw.map(|w| WeightProfile::parse_relative(w).map_err(|e| ServiceError::from(e).into())).transpose()
}

async fn get_ranking(
    State(service): State<Arc<Service>>,
    Path(id): Path<String>,
    Query(query): Query<RankingQuery>,
) -> ApiResult<crate::service::RankingReport> {
    let k = query
        .k
        .as_deref()
        .map(|k| {
            k.parse::<usize>().map_err(|_| ApiFailure::bad_request(format!("k must be a positive integer, got `{k}`")))
        })
        .transpose()?;
    let weights = parse_weights(query.weights.as_deref())?;
    blocking(move || service.ranking(&id, weights, k)).await
}

#[derive(Debug, Default, Deserialize)]
pub struct ExplanationQuery {
    pub weights: Option<String>,
}

async fn get_explanation(
    State(service): State<Arc<Service>>,
    Path((job_id, candidate_id)): Path<(String, String)>,
    Query(query): Query<ExplanationQuery>,
) -> ApiResult<cvmatch_core::matching::Explanation> {
    let weights = parse_weights(query.weights.as_deref())?;
    blocking(move || service.explanation(&job_id, &candidate_id, weights)).await
}
