mod common;

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::sync::Arc;
use std::thread;

use chrono::{TimeZone, Utc};
use cvmatch_core::extract::ResumeProfile;
use cvmatch_core::matching::JobDescription;
use cvmatch_service::{
    CandidateRecord, DirStore, JobRecord, MemoryStore, Record, Store, StoreError, StoreExt, PIPELINE_VERSION,
};
use proptest::prelude::*;

fn profile(source: &str) -> ResumeProfile {
    let service = cvmatch_service::Service::in_memory(Default::default());
    service
        .parse(source, format!("Amine Benali\namine@mail.dz\nCompétences\nPython, Docker\n{source}").into_bytes())
        .unwrap()
}

fn candidate(id: &str, source: &str) -> CandidateRecord {
    CandidateRecord {
        candidate_id: id.into(),
        profile: profile(source),
        source_filename: source.into(),
        ingested_at: Utc.with_ymd_and_hms(2025, 6, 1, 12, 0, 0).unwrap(),
        pipeline_version: PIPELINE_VERSION.into(),
    }
}

fn job(id: &str, skills: &[&str]) -> JobRecord {
    JobRecord {
        job_id: id.into(),
        job: JobDescription {
            id: id.into(),
            title: "Backend".into(),
            required_skills: skills.iter().map(|s| s.to_string()).collect(),
            min_experience_months: 24,
            required_education: Default::default(),
            location: Some("Alger".into()),
            language: None,
        },
        created_at: Utc.with_ymd_and_hms(2025, 6, 2, 8, 30, 0).unwrap(),
    }
}

fn contract(store: &dyn Store) {
    let a = candidate("b-2", "a.txt");
    let b = candidate("a-1", "b.txt");
    store.insert(&a).unwrap();
    store.insert(&b).unwrap();
    assert_eq!(store.get::<CandidateRecord>("b-2").unwrap(), Some(a.clone()));
    assert!(matches!(store.insert(&a), Err(StoreError::AlreadyExists { .. })));

    let ids: Vec<String> = store.list::<CandidateRecord>().unwrap().into_iter().map(|r| r.candidate_id).collect();
    assert_eq!(ids, ["a-1", "b-2"]);

    let mut updated = a.clone();
    updated.source_filename = "renamed.txt".into();
    store.put(&updated).unwrap();
    assert_eq!(store.get::<CandidateRecord>("b-2").unwrap(), Some(updated));

    // Collections are separate namespaces.
    assert_eq!(store.get::<JobRecord>("b-2").unwrap(), None);
    store.insert(&job("b-2", &["Rust"])).unwrap();
    assert_eq!(store.list::<JobRecord>().unwrap().len(), 1);

    assert_eq!(store.get::<CandidateRecord>("../b-2").unwrap(), None);
    assert!(matches!(store.insert(&candidate("../x", "x.txt")), Err(StoreError::InvalidId(_))));
}

#[test]
fn memory_store_contract() {
    contract(&MemoryStore::new());
}

#[test]
fn directory_store_contract() {
    let dir = tempfile::tempdir().unwrap();
    contract(&DirStore::open(dir.path()).unwrap());
}

#[test]
fn directory_round_trip_across_reopen() {
    let dir = tempfile::tempdir().unwrap();
    let c = candidate("8d1c2f7e-6b0a-4c55-9d6e-2f6f3c1b9a10", "r13.pdf");
    let j = job("backend", &["Python", "Docker"]);
    {
        let store = DirStore::open(dir.path()).unwrap();
        store.insert(&c).unwrap();
        store.insert(&j).unwrap();
    }
    let store = DirStore::open(dir.path()).unwrap();
    assert_eq!(store.get::<CandidateRecord>(&c.candidate_id).unwrap(), Some(c.clone()));
    assert_eq!(store.get::<JobRecord>("backend").unwrap(), Some(j));
    assert_eq!(store.list::<CandidateRecord>().unwrap(), vec![c.clone()]);

    // Records are plain JSON documents that satisfy the published schema.
    let path = store.record_path("candidates", &c.candidate_id);
    let on_disk: serde_json::Value = serde_json::from_slice(&fs::read(path).unwrap()).unwrap();
    common::assert_valid("candidate_record.schema.json", &on_disk);
}

#[test]
fn crash_between_write_and_rename_keeps_previous_version() {
    let dir = tempfile::tempdir().unwrap();
    let v1 = job("j1", &["Python"]);
    let v2 = job("j1", &["Python", "Kubernetes"]);
    DirStore::open(dir.path()).unwrap().put(&v1).unwrap();

    let crashing = DirStore::open(dir.path()).unwrap().with_write_hook(|_| Err(io::Error::other("simulated crash")));
    let err = crashing.put(&v2).unwrap_err();
    assert!(err.to_string().contains("simulated crash"), "{err}");
    drop(crashing);

    let jobs_dir = dir.path().join(JobRecord::COLLECTION);
    let names: Vec<String> =
        fs::read_dir(&jobs_dir).unwrap().map(|e| e.unwrap().file_name().to_string_lossy().into_owned()).collect();
    assert_eq!(names.len(), 2, "expected the record plus one orphaned temporary file: {names:?}");
    let tmp = names.iter().find(|n| n.ends_with(".tmp")).unwrap();
    // The orphan holds the complete new version; only the rename was lost.
    let orphan: JobRecord = serde_json::from_slice(&fs::read(jobs_dir.join(tmp)).unwrap()).unwrap();
    assert_eq!(orphan, v2);

    let reopened = DirStore::open(dir.path()).unwrap();
    assert_eq!(reopened.get::<JobRecord>("j1").unwrap(), Some(v1.clone()));
    assert_eq!(reopened.list::<JobRecord>().unwrap(), vec![v1]);

    reopened.put(&v2).unwrap();
    assert_eq!(DirStore::open(dir.path()).unwrap().get::<JobRecord>("j1").unwrap(), Some(v2));
}

#[test]
fn crash_on_first_write_leaves_no_record() {
    let dir = tempfile::tempdir().unwrap();
    let store = DirStore::open(dir.path()).unwrap().with_write_hook(|_| Err(io::Error::other("crash")));
    assert!(store.insert(&job("fresh", &["Go"])).is_err());
    let reopened = DirStore::open(dir.path()).unwrap();
    assert_eq!(reopened.get::<JobRecord>("fresh").unwrap(), None);
    assert!(reopened.list::<JobRecord>().unwrap().is_empty());
    reopened.insert(&job("fresh", &["Go"])).unwrap();
}

#[test]
fn concurrent_writers_never_tear_a_record() {
    let dir = tempfile::tempdir().unwrap();
    let store = Arc::new(DirStore::open(dir.path()).unwrap());
    let versions: Vec<JobRecord> = (0..8).map(|i| job("shared", &[format!("Skill{i}").as_str(); 40])).collect();
    let handles: Vec<_> = versions
        .iter()
        .cloned()
        .map(|v| {
            let store = store.clone();
            thread::spawn(move || {
                for _ in 0..10 {
                    store.put(&v).unwrap();
                    let seen = store.get::<JobRecord>("shared").unwrap().unwrap();
                    assert!(seen.job.required_skills.len() == 40);
                }
            })
        })
        .collect();
    for h in handles {
        h.join().unwrap();
    }
    let last = store.get::<JobRecord>("shared").unwrap().unwrap();
    assert!(versions.contains(&last));
    let leftovers = fs::read_dir(dir.path().join("jobs")).unwrap().count();
    assert_eq!(leftovers, 1);
}

#[derive(Debug, Clone)]
enum Op {
    Insert(u8, u8),
    Put(u8, u8),
}

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![(0..6u8, 0..4u8).prop_map(|(i, v)| Op::Insert(i, v)), (0..6u8, 0..4u8).prop_map(|(i, v)| Op::Put(i, v))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Both stores behave like a sorted map under any write sequence, and
    /// the directory store still does after reopening.
    #[test]
    fn stores_agree_with_a_map(ops in prop::collection::vec(op(), 0..24)) {
        let dir = tempfile::tempdir().unwrap();
        let disk = DirStore::open(dir.path()).unwrap();
        let memory = MemoryStore::new();
        let mut model: BTreeMap<String, JobRecord> = BTreeMap::new();
        for op in ops {
            let (id, version, create_only) = match op {
                Op::Insert(i, v) => (i, v, true),
                Op::Put(i, v) => (i, v, false),
            };
            let id = format!("job-{id}");
            let record = job(&id, &[&format!("S{version}")]);
            let expect_conflict = create_only && model.contains_key(&id);
            for store in [&disk as &dyn Store, &memory] {
                let result = if create_only { store.insert(&record) } else { store.put(&record) };
                prop_assert_eq!(result.is_err(), expect_conflict);
            }
            if !expect_conflict {
                model.insert(id, record);
            }
        }
        let expected: Vec<JobRecord> = model.into_values().collect();
        prop_assert_eq!(&memory.list::<JobRecord>().unwrap(), &expected);
        prop_assert_eq!(&disk.list::<JobRecord>().unwrap(), &expected);
        prop_assert_eq!(&DirStore::open(dir.path()).unwrap().list::<JobRecord>().unwrap(), &expected);
    }
}
