//! Weighted scoring of resume profiles against job descriptions, ranking,
//! and per-criterion explanations.

mod explain;
mod job;
mod matcher;
mod score;
mod weights;

pub use explain::{explain, EducationNote, ExperienceNote, Explanation, LocationNote, MATCHED_THRESHOLD};
pub use job::JobDescription;
pub use matcher::{
    assemble, quantize, ranking, sort_results, MatchResult, Matcher, RankEntry, Ranking, RANK_PRECISION,
};
pub use score::{
    education_score, embed_all, experience_score, location_matches, location_score, skill_score, Criterion,
    CriterionScore, SkillPair, LOCATION_THRESHOLD,
};
pub use weights::{WeightProfile, WEIGHT_SUM_TOLERANCE};

use thiserror::Error;

use crate::embed::EmbedError;

#[derive(Debug, Error)]
pub enum MatchError {
    #[error("invalid job `{id}`: {reason}")]
    InvalidJob { id: String, reason: String },
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("inconsistent inputs: {0}")]
    InconsistentInputs(String),
    #[error(transparent)]
    Embed(#[from] EmbedError),
}
