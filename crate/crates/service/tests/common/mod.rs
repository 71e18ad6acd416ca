#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use cvmatch_core::extract::YearMonth;
use cvmatch_service::{router, Config, Service};
use http_body_util::BodyExt;
use jsonschema::{Resource, Validator};
use serde_json::Value;
use tower::ServiceExt;

pub const SCHEMA_BASE: &str = "https://cvmatch.dev/schemas/";
pub const SCHEMAS: [&str; 8] = [
    "resume_profile.schema.json",
    "candidate_record.schema.json",
    "job_description.schema.json",
    "job_record.schema.json",
    "ranking.schema.json",
    "explanation.schema.json",
    "health.schema.json",
    "error.schema.json",
];

pub fn schema_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

pub fn load_schema(name: &str) -> Value {
    let text = std::fs::read_to_string(schema_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    serde_json::from_str(&text).unwrap()
}

/// Validator for one published schema, with the others registered so
/// cross-file references resolve offline.
pub fn validator(name: &str) -> Validator {
    let mut options = jsonschema::options();
    for other in SCHEMAS {
        options = options
            .with_resource(format!("{SCHEMA_BASE}{other}"), Resource::from_contents(load_schema(other)).unwrap());
    }
    options.build(&load_schema(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Every violation, for readable failures.
pub fn violations(name: &str, instance: &Value) -> Vec<String> {
    validator(name).iter_errors(instance).map(|e| format!("{} at {}", e, e.instance_path)).collect()
}

pub fn assert_valid(name: &str, instance: &Value) {
    let errors = violations(name, instance);
    assert!(errors.is_empty(), "{name}: {errors:#?}\n{instance:#}");
}

pub fn corpus_clock() -> YearMonth {
    let manifest = cvmatch_corpus::load_manifest(&cvmatch_corpus::fixture_dir()).unwrap();
    let (y, m) = manifest.clock.split_once('-').unwrap();
    YearMonth::new(y.parse().unwrap(), m.parse().unwrap()).unwrap()
}

/// In-memory service pinned to the corpus reference date.
pub fn test_service() -> Arc<Service> {
    Arc::new(Service::in_memory(Config { reference_date: Some(corpus_clock()), ..Config::default() }))
}

pub fn fixture(path: &str) -> Vec<u8> {
    std::fs::read(cvmatch_corpus::fixture_dir().join(path)).unwrap()
}

pub const BOUNDARY: &str = "cvmatch-test-boundary";

pub fn multipart(field: &str, filename: &str, bytes: &[u8]) -> Vec<u8> {
    let mut body = format!(
        "--{BOUNDARY}\r\nContent-Disposition: form-data; name=\"{field}\"; filename=\"{filename}\"\r\n\
         Content-Type: application/octet-stream\r\n\r\n"
    )
    .into_bytes();
    body.extend_from_slice(bytes);
    body.extend_from_slice(format!("\r\n--{BOUNDARY}--\r\n").as_bytes());
    body
}

pub struct Client {
    pub service: Arc<Service>,
}

impl Client {
    pub fn new(service: Arc<Service>) -> Self {
        Self { service }
    }

    pub async fn send(&self, request: Request<Body>) -> (StatusCode, Value) {
        let response = router(self.service.clone()).oneshot(request).await.unwrap();
        let status = response.status();
        let bytes = response.into_body().collect().await.unwrap().to_bytes();
        let value = serde_json::from_slice(&bytes)
            .unwrap_or_else(|e| panic!("non-JSON body ({status}): {e}: {}", String::from_utf8_lossy(&bytes)));
        (status, value)
    }

    pub async fn get(&self, uri: &str) -> (StatusCode, Value) {
        self.send(Request::get(uri).body(Body::empty()).unwrap()).await
    }

    pub async fn post_json(&self, uri: &str, body: &Value) -> (StatusCode, Value) {
        let request = Request::post(uri)
            .header("content-type", "application/json")
            .body(Body::from(serde_json::to_vec(body).unwrap()))
            .unwrap();
        self.send(request).await
    }

    pub async fn upload(&self, filename: &str, bytes: &[u8]) -> (StatusCode, Value) {
        self.upload_field("file", filename, bytes).await
    }

    pub async fn upload_field(&self, field: &str, filename: &str, bytes: &[u8]) -> (StatusCode, Value) {
        let request = Request::post("/resumes")
            .header("content-type", format!("multipart/form-data; boundary={BOUNDARY}"))
            .body(Body::from(multipart(field, filename, bytes)))
            .unwrap();
        self.send(request).await
    }
}
