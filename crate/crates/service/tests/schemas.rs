mod common;

use common::{assert_valid, fixture, load_schema, validator, violations, SCHEMAS, SCHEMA_BASE};
use cvmatch_core::matching::JobDescription;
use serde_json::{json, Value};

#[test]
fn every_schema_compiles_with_matching_id() {
    for name in SCHEMAS {
        validator(name);
        assert_eq!(load_schema(name)["$id"], format!("{SCHEMA_BASE}{name}"));
    }
}

fn record() -> Value {
    let service = common::test_service();
    serde_json::to_value(service.ingest_resume("r01.txt", fixture("resumes/r01.txt")).unwrap()).unwrap()
}

#[test]
fn candidate_schema_rejects_drift() {
    let good = record();
    assert_valid("candidate_record.schema.json", &good);
    type Mutation = (&'static str, fn(&mut Value));
    let mutations: [Mutation; 7] = [
        ("extra top-level field", |v| v["score"] = json!(1)),
        ("missing profile field", |v| drop(v["profile"].as_object_mut().unwrap().remove("languages"))),
        ("education out of range", |v| v["profile"]["education"] = json!(5)),
        ("non-v4 id", |v| v["candidate_id"] = json!("r01")),
        ("phone with letters", |v| v["profile"]["contact"]["phones"] = json!(["06 61 AB"])),
        (
            "month 13",
            |v| v["profile"]["experience"] = json!([{"start": {"year": 2020, "month": 13}, "end": {"year": 2021, "month": 1}, "start_month_known": true, "end_month_known": true, "ongoing": false}]),
        ),
        ("span of three", |v| v["profile"]["skills"][0]["span"] = json!([1, 2, 3])),
    ];
    for (what, mutate) in mutations {
        let mut bad = good.clone();
        mutate(&mut bad);
        assert!(!violations("candidate_record.schema.json", &bad).is_empty(), "{what} accepted");
    }
}

#[test]
fn job_schema_agrees_with_deserializer() {
    let dir = cvmatch_corpus::fixture_dir();
    for scenario in cvmatch_corpus::load_scenarios(&dir).unwrap().scenarios {
        let job: Value = serde_json::from_slice(&fixture(&scenario.job_file)).unwrap();
        assert_valid("job_description.schema.json", &job);
        let parsed: JobDescription = serde_json::from_value(job.clone()).unwrap();
        parsed.validate().unwrap();
    }
    for bad in [
        json!({"id": "x", "required_skills": []}),
        json!({"id": "x", "required_skills": [" "]}),
        json!({"id": "x", "required_skills": ["Go"], "required_education": 5}),
        json!({"id": ".x", "required_skills": ["Go"]}),
        json!({"required_skills": ["Go"]}),
    ] {
        assert!(!violations("job_description.schema.json", &bad).is_empty(), "{bad}");
    }
}
