//! Persistence, HTTP API and command-line front end for the resume parsing
//! and matching pipeline in `cvmatch-core`.

pub mod api;
pub mod config;
pub mod records;
pub mod service;
pub mod store;

pub use api::{router, ApiError};
pub use config::{Config, ConfigError};
pub use records::{CandidateRecord, JobRecord, Record, PIPELINE_VERSION};
pub use service::{Health, RankedCandidate, RankingReport, Service, ServiceError};
pub use store::{write_atomic, write_atomic_with, DirStore, MemoryStore, Store, StoreError, StoreExt};
