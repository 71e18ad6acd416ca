mod common;

use std::collections::BTreeSet;

use axum::http::StatusCode;
use common::{assert_valid, fixture, test_service, Client};
use serde_json::{json, Value};

fn scenario(id: &str) -> (Value, Vec<(String, String)>) {
    let dir = cvmatch_corpus::fixture_dir();
    let manifest = cvmatch_corpus::load_scenarios(&dir).unwrap();
    let s = manifest.scenarios.into_iter().find(|s| s.id == id).unwrap();
    let job = serde_json::from_slice(&fixture(&s.job_file)).unwrap();
    (job, s.candidates)
}

async fn upload_scenario(client: &Client, id: &str, count: usize) -> (Value, Vec<String>) {
    let (job, candidates) = scenario(id);
    let mut ids = Vec::new();
    for (name, file) in candidates.iter().take(count) {
        let (status, record) = client.upload(&format!("{name}.txt"), &fixture(file)).await;
        assert_eq!(status, StatusCode::CREATED, "{record}");
        ids.push(record["candidate_id"].as_str().unwrap().to_string());
    }
    let (status, created) = client.post_json("/jobs", &job).await;
    assert_eq!(status, StatusCode::CREATED, "{created}");
    (job, ids)
}

#[tokio::test]
async fn health_matches_schema() {
    let client = Client::new(test_service());
    let (status, body) = client.get("/health").await;
    assert_eq!(status, StatusCode::OK);
    assert_valid("health.schema.json", &body);
    assert_eq!(body["provider_id"], "trigram-fnv1a-256");
    assert_eq!(body["store"], "memory");
}

#[tokio::test]
async fn pdf_upload_stores_gold_profile() {
    let client = Client::new(test_service());
    let dir = cvmatch_corpus::fixture_dir();
    let manifest = cvmatch_corpus::load_manifest(&dir).unwrap();
    let gold = manifest.resumes.iter().find(|r| r.file.ends_with(".pdf")).unwrap();
    let filename = gold.file.rsplit('/').next().unwrap();

    let (status, record) = client.upload(filename, &fixture(&gold.file)).await;
    assert_eq!(status, StatusCode::CREATED, "{record}");
    assert_valid("candidate_record.schema.json", &record);
    assert_eq!(record["source_filename"], filename);
    assert_eq!(record["pipeline_version"], cvmatch_service::PIPELINE_VERSION);

    let profile = &record["profile"];
    assert_eq!(profile["name"]["value"], gold.name.as_str());
    assert_eq!(profile["contact"]["emails"], json!(gold.emails));
    assert_eq!(profile["contact"]["phones"], json!(gold.phones));
    assert_eq!(profile["education"], gold.education);
    assert_eq!(profile["experience_months"], gold.experience_months);
    assert_eq!(profile["languages"], json!(gold.languages));
    let skills: BTreeSet<&str> =
        profile["skills"].as_array().unwrap().iter().map(|s| s["id"].as_str().unwrap()).collect();
    assert_eq!(skills, gold.skills.iter().map(String::as_str).collect());

    let id = record["candidate_id"].as_str().unwrap();
    let (status, fetched) = client.get(&format!("/resumes/{id}")).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(fetched, record);
}

#[tokio::test]
async fn reingesting_gives_new_id_same_profile() {
    let client = Client::new(test_service());
    let bytes = fixture("resumes/r01.txt");
    let (_, first) = client.upload("r01.txt", &bytes).await;
    let (_, second) = client.upload("r01.txt", &bytes).await;
    assert_ne!(first["candidate_id"], second["candidate_id"]);
    assert_eq!(first["profile"], second["profile"]);
}

#[tokio::test]
async fn bad_uploads_are_json_errors() {
    let client = Client::new(test_service());
    for (field, name, bytes, status, code) in [
        ("file", "empty.txt", &b"   \n\n"[..], StatusCode::UNPROCESSABLE_ENTITY, "empty_document"),
        ("file", "broken.pdf", &b"%PDF-1.4\n1 0 obj <<"[..], StatusCode::UNPROCESSABLE_ENTITY, "malformed_document"),
        ("resume", "r.txt", &b"Amine Benali"[..], StatusCode::BAD_REQUEST, "invalid_request"),
    ] {
        let (got, body) = client.upload_field(field, name, bytes).await;
        assert_eq!(got, status, "{name}: {body}");
        assert_valid("error.schema.json", &body);
        assert_eq!(body["error"], code);
        if field == "file" {
            assert!(body["message"].as_str().unwrap().contains(name), "{body}");
        }
    }
}

#[tokio::test]
async fn jobs_are_validated_and_unique() {
    let client = Client::new(test_service());
    let (job, _) = scenario("s01");
    let (status, record) = client.post_json("/jobs", &job).await;
    assert_eq!(status, StatusCode::CREATED);
    assert_valid("job_record.schema.json", &record);
    assert_valid("job_description.schema.json", &job);
    assert_eq!(record["job"], job);

    let (status, fetched) = client.get("/jobs/s01").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(fetched, record);

    let (status, body) = client.post_json("/jobs", &job).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_valid("error.schema.json", &body);

    for (bad, code) in [
        (json!({"id": "j2", "required_skills": []}), "invalid_job"),
        (json!({"id": "j3", "required_skills": ["Python"], "location": "  "}), "invalid_job"),
        (json!({"id": "../j4", "required_skills": ["Python"]}), "invalid_request"),
        (json!({"id": "j5"}), "invalid_request"),
        (json!({"id": "j6", "required_skills": ["Python"], "required_education": 9}), "invalid_request"),
    ] {
        let (status, body) = client.post_json("/jobs", &bad).await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{bad}: {body}");
        assert_valid("error.schema.json", &body);
        assert_eq!(body["error"], code, "{bad}");
    }
}

#[tokio::test]
async fn ranking_truncates_after_sorting() {
    let client = Client::new(test_service());
    upload_scenario(&client, "s02", 10).await;
    let (status, full) = client.get("/jobs/s02/ranking").await;
    assert_eq!(status, StatusCode::OK);
    assert_valid("ranking.schema.json", &full);
    assert_eq!(full["candidate_count"], 10);
    assert_eq!(full["entries"].as_array().unwrap().len(), 10);

    let (status, top) = client.get("/jobs/s02/ranking?k=3").await;
    assert_eq!(status, StatusCode::OK);
    assert_valid("ranking.schema.json", &top);
    assert_eq!(top["candidate_count"], 10);
    assert_eq!(top["entries"].as_array().unwrap()[..], full["entries"].as_array().unwrap()[..3]);

    let totals: Vec<f64> = full["entries"].as_array().unwrap().iter().map(|e| e["total"].as_f64().unwrap()).collect();
    assert!(totals.windows(2).all(|w| w[0] >= w[1]));
}

#[tokio::test]
async fn ranking_order_ignores_weight_scale() {
    let client = Client::new(test_service());
    upload_scenario(&client, "s03", 12).await;
    let order = |v: &Value| -> Vec<String> {
        v["entries"].as_array().unwrap().iter().map(|e| e["candidate_id"].as_str().unwrap().to_string()).collect()
    };
    let (_, unit) = client.get("/jobs/s03/ranking?weights=0.4,0.3,0.2,0.1").await;
    let (_, scaled) = client.get("/jobs/s03/ranking?weights=4,3,2,1").await;
    let (_, tiny) = client.get("/jobs/s03/ranking?weights=0.004,0.003,0.002,0.001").await;
    assert_valid("ranking.schema.json", &scaled);
    assert_eq!(order(&unit), order(&scaled));
    assert_eq!(order(&unit), order(&tiny));
    let (_, default) = client.get("/jobs/s03/ranking").await;
    let w = &default["weights"];
    assert!((w["skills"].as_f64().unwrap() - 0.5).abs() < 1e-12);
}

#[tokio::test]
async fn ranking_errors() {
    let client = Client::new(test_service());
    upload_scenario(&client, "s01", 2).await;
    for (uri, status, code) in [
        ("/jobs/nope/ranking", StatusCode::NOT_FOUND, "not_found"),
        ("/jobs/s01/ranking?weights=1,2,3", StatusCode::BAD_REQUEST, "invalid_weights"),
        ("/jobs/s01/ranking?weights=0,0,0,0", StatusCode::BAD_REQUEST, "invalid_weights"),
        ("/jobs/s01/ranking?weights=-1,1,1,1", StatusCode::BAD_REQUEST, "invalid_weights"),
        ("/jobs/s01/ranking?k=0", StatusCode::BAD_REQUEST, "invalid_request"),
        ("/jobs/s01/ranking?k=three", StatusCode::BAD_REQUEST, "invalid_request"),
        ("/resumes/00000000-0000-4000-8000-000000000000", StatusCode::NOT_FOUND, "not_found"),
        ("/resumes/..", StatusCode::NOT_FOUND, "not_found"),
        ("/jobs/s01/candidates/missing/explanation", StatusCode::NOT_FOUND, "not_found"),
        ("/no/such/route", StatusCode::NOT_FOUND, "not_found"),
    ] {
        let (got, body) = client.get(uri).await;
        assert_eq!(got, status, "{uri}: {body}");
        assert_valid("error.schema.json", &body);
        assert_eq!(body["error"], code, "{uri}");
    }
}

#[tokio::test]
async fn explanation_agrees_with_ranking() {
    let client = Client::new(test_service());
    let (job, ids) = upload_scenario(&client, "s04", 6).await;
    let (_, ranking) = client.get("/jobs/s04/ranking?weights=6,2,1,1").await;
    for entry in ranking["entries"].as_array().unwrap() {
        let cid = entry["candidate_id"].as_str().unwrap();
        assert!(ids.iter().any(|i| i == cid));
        let (status, ex) = client.get(&format!("/jobs/s04/candidates/{cid}/explanation?weights=6,2,1,1")).await;
        assert_eq!(status, StatusCode::OK, "{ex}");
        assert_valid("explanation.schema.json", &ex);
        assert_eq!(ex["contributions"], entry["breakdown"]);
        assert!((ex["total"].as_f64().unwrap() - entry["total"].as_f64().unwrap()).abs() < 1e-9);

        let matched: BTreeSet<&str> =
            ex["matched"].as_array().unwrap().iter().map(|p| p["jd_skill"].as_str().unwrap()).collect();
        let unmatched: BTreeSet<&str> =
            ex["unmatched_jd_skills"].as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect();
        let required: BTreeSet<&str> =
            job["required_skills"].as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect();
        assert!(matched.is_disjoint(&unmatched));
        assert_eq!(&matched | &unmatched, required);
    }
}
