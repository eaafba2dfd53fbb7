//! HTTP facade over the IG Script pipeline.
//!
//! * `POST /v1/parse` takes a JSON [`ParseRequest`] and answers with the
//!   rendered output, or `400` with a positioned error.
//! * `GET /v1/health` answers `{"status":"ok","version":...}`.
//!
//! Handlers hold no state besides the [`Config`] read at startup, so the
//! response to a request depends on nothing but the request.

use axum::body::Bytes;
use axum::extract::DefaultBodyLimit;
use axum::http::{HeaderValue, Method, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use igscript::pipeline::{render, Output, OutputFormat, OutputOptions};
use igscript::{Error, Issue, Level};
use serde::{Deserialize, Serialize};
use serde_json::json;
use tower_http::cors::{AllowOrigin, CorsLayer};

pub const DEFAULT_MAX_BODY_BYTES: usize = 1024 * 1024;

#[derive(Debug, Clone)]
pub struct Config {
    pub max_body_bytes: usize,
    /// Origin allowed for cross-origin requests; `*` allows any, `None` none.
    pub allowed_origin: Option<String>,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_body_bytes: DEFAULT_MAX_BODY_BYTES, allowed_origin: None }
    }
}

impl Config {
    /// Reads `MAX_BODY_BYTES` and `ALLOWED_ORIGIN`.
    pub fn from_env() -> Result<Self, String> {
        let mut config = Config::default();
        if let Ok(v) = std::env::var("MAX_BODY_BYTES") {
            config.max_body_bytes = v.trim().parse().map_err(|_| format!("MAX_BODY_BYTES is not a number: {v}"))?;
        }
        config.allowed_origin = std::env::var("ALLOWED_ORIGIN").ok().filter(|v| !v.trim().is_empty());
        Ok(config)
    }
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ParseRequest {
    #[serde(default)]
    pub raw_statement: Option<String>,
    pub coded_statement: String,
    #[serde(default = "default_output")]
    pub output: String,
    #[serde(default = "default_id")]
    pub stmt_id: String,
    #[serde(default = "default_level")]
    pub level: String,
    #[serde(default = "yes")]
    pub include_headers: bool,
    #[serde(default)]
    pub include_annotations: bool,
    #[serde(default = "yes")]
    pub include_properties: bool,
    #[serde(default)]
    pub conditions_first: bool,
}

fn default_output() -> String {
    "csv".into()
}
fn default_id() -> String {
    "1".into()
}
fn default_level() -> String {
    "logico".into()
}
fn yes() -> bool {
    true
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct ParseResponse {
    #[serde(skip_serializing_if = "Option::is_none")]
    raw_statement: Option<String>,
    output: Output,
    atom_count: usize,
    degree_of_variability: u64,
    warnings: Vec<String>,
}

#[derive(Debug, Serialize)]
struct ErrorBody {
    kind: String,
    message: String,
    /// Byte offset into `codedStatement`; absent when the problem is not
    /// located in the statement.
    position: Option<usize>,
    length: Option<usize>,
}

struct ApiError {
    status: StatusCode,
    error: ErrorBody,
    issues: Vec<Issue>,
}

impl ApiError {
    fn unlocated(status: StatusCode, kind: &str, message: impl Into<String>) -> Self {
        ApiError {
            status,
            error: ErrorBody { kind: kind.into(), message: message.into(), position: None, length: None },
            issues: Vec::new(),
        }
    }

    fn schema(message: impl Into<String>) -> Self {
        Self::unlocated(StatusCode::BAD_REQUEST, "SchemaViolation", message)
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => {
                let first = p.report.first_error().cloned().expect("failed reports hold an error");
                ApiError {
                    status: StatusCode::BAD_REQUEST,
                    error: ErrorBody {
                        kind: first.kind.to_string(),
                        message: first.message.clone(),
                        position: Some(first.position),
                        length: Some(first.length),
                    },
                    issues: p.report.issues,
                }
            }
            Error::ExpansionLimit { .. } => Self::unlocated(StatusCode::BAD_REQUEST, "ExpansionLimit", e.to_string()),
            Error::InvalidId(_) => Self::schema(e.to_string()),
            Error::UnknownLevel(_) | Error::UnknownSymbol(_) => Self::schema(e.to_string()),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(json!({ "error": self.error, "issues": self.issues }))).into_response()
    }
}

/// Builds the router for `config`.
pub fn app(config: &Config) -> Router {
    let mut router = Router::new()
        .route("/v1/parse", post(parse))
        .route("/v1/health", get(health))
        .layer(DefaultBodyLimit::max(config.max_body_bytes));
    if let Some(origin) = &config.allowed_origin {
        let allow = if origin == "*" {
            AllowOrigin::any()
        } else {
            match HeaderValue::from_str(origin) {
                Ok(v) => AllowOrigin::exact(v),
                Err(_) => return router,
            }
        };
        router = router.layer(
            CorsLayer::new()
                .allow_origin(allow)
                .allow_methods([Method::GET, Method::POST])
                .allow_headers([axum::http::header::CONTENT_TYPE]),
        );
    }
    router
}

async fn health() -> Json<serde_json::Value> {
    Json(json!({ "status": "ok", "version": env!("CARGO_PKG_VERSION") }))
}

async fn parse(body: Bytes) -> Result<Json<serde_json::Value>, ApiError> {
    let request: ParseRequest = serde_json::from_slice(&body).map_err(|e| ApiError::schema(e.to_string()))?;
    let options = options(&request)?;
    let rendered = render(&request.coded_statement, &options)?;
    let response = ParseResponse {
        raw_statement: request.raw_statement,
        output: rendered.output,
        atom_count: rendered.atom_count,
        degree_of_variability: rendered.degree_of_variability,
        warnings: rendered.warnings,
    };
    Ok(Json(serde_json::to_value(response).expect("response serializes")))
}

fn options(request: &ParseRequest) -> Result<OutputOptions, ApiError> {
    let format: OutputFormat = request.output.parse().map_err(ApiError::schema)?;
    let level: Level = request.level.parse().map_err(|e: Error| ApiError::schema(e.to_string()))?;
    Ok(OutputOptions {
        format,
        stmt_id: request.stmt_id.clone(),
        level,
        include_headers: request.include_headers,
        include_annotations: request.include_annotations,
        include_properties: request.include_properties,
        conditions_first: request.conditions_first,
        ..OutputOptions::default()
    })
}
