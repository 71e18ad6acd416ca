//! Resume parsing and explainable candidate/job matching.

pub mod embed;
pub mod extract;
pub mod fuzzy;
pub mod ingest;
pub mod matching;
