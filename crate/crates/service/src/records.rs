use chrono::{DateTime, Utc};
use cvmatch_core::extract::ResumeProfile;
use cvmatch_core::matching::JobDescription;
use serde::{Deserialize, Serialize};

/// Stamped into every candidate record so extraction changes are
/// detectable.
pub const PIPELINE_VERSION: &str = concat!("cvmatch/", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateRecord {
    /// UUID v4, assigned at ingestion.
    pub candidate_id: String,
    pub profile: ResumeProfile,
    pub source_filename: String,
    pub ingested_at: DateTime<Utc>,
    pub pipeline_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JobRecord {
    pub job_id: String,
    pub job: JobDescription,
    pub created_at: DateTime<Utc>,
}

/// Record kinds that live in a [`crate::store::Store`].
pub trait Record: Serialize + for<'de> Deserialize<'de> + Clone + Send + Sync + 'static {
    const COLLECTION: &'static str;
    fn id(&self) -> &str;
}

impl Record for CandidateRecord {
    const COLLECTION: &'static str = "candidates";
    fn id(&self) -> &str {
        &self.candidate_id
    }
}

impl Record for JobRecord {
    const COLLECTION: &'static str = "jobs";
    fn id(&self) -> &str {
        &self.job_id
    }
}
