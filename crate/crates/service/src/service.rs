use std::path::Path;
use std::sync::Arc;

use chrono::{Datelike, Utc};
use cvmatch_core::embed::{CachingProvider, EmbeddingProvider, HttpEmbeddingProvider, TrigramProvider};
use cvmatch_core::extract::{parse_resume, LexiconError, Resources, ResumeProfile, YearMonth};
use cvmatch_core::ingest::{IngestError, SourceDocument};
use cvmatch_core::matching::{
    explain, quantize, CriterionScore, Explanation, JobDescription, MatchError, MatchResult, Matcher, SkillPair,
    WeightProfile,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;
use uuid::Uuid;

use crate::config::Config;
use crate::records::{CandidateRecord, JobRecord, PIPELINE_VERSION};
use crate::store::{check_id, DirStore, MemoryStore, Store, StoreError, StoreExt};

#[derive(Debug, Error)]
pub enum ServiceError {
    #[error("`{filename}`: {source}")]
    Ingest {
        filename: String,
        #[source]
        source: IngestError,
    },
    #[error("{kind} `{id}` not found")]
    NotFound { kind: &'static str, id: String },
    #[error("invalid request: {0}")]
    InvalidRequest(String),
    #[error(transparent)]
    Match(#[from] MatchError),
    #[error(transparent)]
    Store(#[from] StoreError),
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
}

/// One row of a ranking, with the full score breakdown.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedCandidate {
    /// 1-based.
    pub rank: usize,
    pub candidate_id: String,
    /// Rounded to the ranking precision.
    pub total: f64,
    pub breakdown: Vec<CriterionScore>,
    pub skill_pairs: Vec<SkillPair>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankingReport {
    pub job_id: String,
    pub weights: WeightProfile,
    pub provider_id: String,
    /// Candidates scored before truncation to `k`.
    pub candidate_count: usize,
    pub entries: Vec<RankedCandidate>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Health {
    pub status: String,
    pub version: String,
    pub pipeline_version: String,
    pub provider_id: String,
    pub store: String,
}

/// The whole pipeline behind one handle. Lexicons, matcher and
/// configuration are fixed once built; only the store changes.
pub struct Service {
    config: Config,
    resources: Arc<Resources>,
    matcher: Matcher,
    store: Arc<dyn Store>,
}

impl Service {
    pub fn new(
        config: Config,
        resources: Resources,
        provider: Arc<dyn EmbeddingProvider>,
        store: Arc<dyn Store>,
    ) -> Self {
        let resources = Arc::new(resources);
        let matcher = Matcher::new(provider).with_lexicon(Arc::new(resources.skills.clone()));
        Self { config, resources, matcher, store }
    }

    /// Built-in provider, bundled lexicons, in-memory store.
    pub fn in_memory(config: Config) -> Self {
        Self::new(config, Resources::bundled(), Arc::new(TrigramProvider), Arc::new(MemoryStore::new()))
    }

    /// Everything as configured: lexicon files, external embeddings when an
    /// endpoint is set, directory store when a path is set.
    pub fn from_config(config: Config) -> Result<Self, ServiceError> {
        let resources = Resources::load(&config.lexicons)?;
        let provider: Arc<dyn EmbeddingProvider> = match &config.embedding {
            Some(http) => Arc::new(CachingProvider::new(HttpEmbeddingProvider::new(http.clone()))),
            None => Arc::new(TrigramProvider),
        };
        let store: Arc<dyn Store> = match &config.store {
            Some(root) => Arc::new(DirStore::open(root)?),
            None => Arc::new(MemoryStore::new()),
        };
        Ok(Self::new(config, resources, provider, store))
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn store(&self) -> &dyn Store {
        self.store.as_ref()
    }

    /// Month that "present" resolves to.
    pub fn today(&self) -> YearMonth {
        self.config.reference_date.unwrap_or_else(|| {
            let now = Utc::now();
            YearMonth::new(now.year(), now.month()).expect("chrono months are 1..=12")
        })
    }

    pub fn parse(&self, filename: &str, bytes: Vec<u8>) -> Result<ResumeProfile, ServiceError> {
        let ingest_err = |source| ServiceError::Ingest { filename: filename.to_string(), source };
        let source = SourceDocument::detect(filename, bytes).map_err(ingest_err)?;
        parse_resume(&source, &self.resources, self.today()).map_err(ingest_err)
    }

    pub fn parse_path(&self, path: &Path) -> Result<ResumeProfile, ServiceError> {
        let shown = path.display().to_string();
        let bytes = std::fs::read(path).map_err(|source| ServiceError::Ingest {
            filename: shown.clone(),
            source: IngestError::Io { path: shown.clone(), source },
        })?;
        self.parse(&file_name(path), bytes)
    }

    /// Parses and stores a resume under a fresh candidate id.
    pub fn ingest_resume(&self, filename: &str, bytes: Vec<u8>) -> Result<CandidateRecord, ServiceError> {
        let profile = self.parse(filename, bytes)?;
        let record = CandidateRecord {
            candidate_id: Uuid::new_v4().to_string(),
            profile,
            source_filename: filename.to_string(),
            ingested_at: Utc::now(),
            pipeline_version: PIPELINE_VERSION.to_string(),
        };
        self.store.insert(&record)?;
        tracing::info!(candidate_id = %record.candidate_id, filename, "resume ingested");
        Ok(record)
    }

    pub fn candidate(&self, id: &str) -> Result<CandidateRecord, ServiceError> {
        self.store.get(id)?.ok_or_else(|| ServiceError::NotFound { kind: "candidate", id: id.into() })
    }

    pub fn create_job(&self, job: JobDescription) -> Result<JobRecord, ServiceError> {
        job.validate()?;
        check_id(&job.id).map_err(|e| ServiceError::InvalidRequest(e.to_string()))?;
        let record = JobRecord { job_id: job.id.clone(), job, created_at: Utc::now() };
        self.store.insert(&record)?;
        tracing::info!(job_id = %record.job_id, "job created");
        Ok(record)
    }

    pub fn job(&self, id: &str) -> Result<JobRecord, ServiceError> {
        self.store.get(id)?.ok_or_else(|| ServiceError::NotFound { kind: "job", id: id.into() })
    }

    /// Ranks arbitrary profiles; `k` truncates after sorting.
    pub fn rank_profiles(
        &self,
        job: &JobDescription,
        candidates: &[(&str, &ResumeProfile)],
        weights: Option<WeightProfile>,
        k: Option<usize>,
    ) -> Result<RankingReport, ServiceError> {
        if k == Some(0) {
            return Err(ServiceError::InvalidRequest("k must be at least 1".into()));
        }
        let weights = weights.unwrap_or(self.config.weights);
        let results = self.matcher.rank_results(candidates, job, &weights)?;
        let provider_id =
            results.first().map_or_else(|| self.matcher.provider_id().to_string(), |r| r.provider_id.clone());
        Ok(RankingReport {
            job_id: job.id.clone(),
            weights,
            provider_id,
            candidate_count: results.len(),
            entries: results.into_iter().take(k.unwrap_or(usize::MAX)).enumerate().map(ranked).collect(),
        })
    }

    /// Scores every stored candidate against a stored job, on demand.
    pub fn ranking(
        &self,
        job_id: &str,
        weights: Option<WeightProfile>,
        k: Option<usize>,
    ) -> Result<RankingReport, ServiceError> {
        let job = self.job(job_id)?.job;
        let candidates: Vec<CandidateRecord> = self.store.list()?;
        let pairs: Vec<(&str, &ResumeProfile)> =
            candidates.iter().map(|c| (c.candidate_id.as_str(), &c.profile)).collect();
        self.rank_profiles(&job, &pairs, weights, k)
    }

    pub fn explanation(
        &self,
        job_id: &str,
        candidate_id: &str,
        weights: Option<WeightProfile>,
    ) -> Result<Explanation, ServiceError> {
        let job = self.job(job_id)?.job;
        let candidate = self.candidate(candidate_id)?;
        let weights = weights.unwrap_or(self.config.weights);
        let result = self.matcher.match_profile(candidate_id, &candidate.profile, &job, &weights)?;
        Ok(explain(&result, &job, &candidate.profile)?)
    }

    pub fn health(&self) -> Health {
        Health {
            status: "ok".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            pipeline_version: PIPELINE_VERSION.into(),
            provider_id: self.matcher.provider_id().into(),
            store: self.store.kind().into(),
        }
    }
}

fn ranked((i, r): (usize, MatchResult)) -> RankedCandidate {
    RankedCandidate {
        rank: i + 1,
        total: quantize(r.total),
        candidate_id: r.candidate_id,
        breakdown: r.breakdown,
        skill_pairs: r.skill_pairs,
    }
}

pub fn file_name(path: &Path) -> String {
    path.file_name().map_or_else(|| path.to_string_lossy().into_owned(), |n| n.to_string_lossy().into_owned())
}
