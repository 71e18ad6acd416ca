use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::embed::{cosine, EmbedError, EmbeddingProvider, EmbeddingVector};
use crate::extract::EducationLevel;
use crate::fuzzy::{fold, similarity};

/// Fuzzy threshold for an address to match the job location.
pub const LOCATION_THRESHOLD: f64 = 0.9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Criterion {
    Skills,
    Experience,
    Education,
    Location,
}

impl Criterion {
    pub const ALL: [Criterion; 4] = [Self::Skills, Self::Experience, Self::Education, Self::Location];
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionScore {
    pub criterion: Criterion,
    pub raw: f64,
    pub weight: f64,
    pub contribution: f64,
}

impl CriterionScore {
    pub fn new(criterion: Criterion, raw: f64, weight: f64) -> Self {
        Self { criterion, raw, weight, contribution: raw * weight }
    }
}

/// A job skill and its closest resume skill.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkillPair {
    pub jd_skill: String,
    pub resume_skill: Option<String>,
    pub similarity: f64,
}

pub fn experience_score(candidate_months: u32, required_months: u32) -> f64 {
    if required_months == 0 {
        return 1.0;
    }
    (f64::from(candidate_months) / f64::from(required_months)).min(1.0)
}

pub fn education_score(candidate: EducationLevel, required: EducationLevel) -> f64 {
    if required == EducationLevel::None || candidate >= required {
        return 1.0;
    }
    f64::from(candidate.ordinal()) / f64::from(required.ordinal())
}

/// Whether one folded address contains or closely spells the folded job
/// location, either as a whole or through a run of its words.
fn address_matches(address: &str, location: &str) -> bool {
    if location.is_empty() {
        return false;
    }
    if address.contains(location) || similarity(address, location) >= LOCATION_THRESHOLD {
        return true;
    }
    let words: Vec<&str> = address.split(|c: char| !c.is_alphanumeric()).filter(|w| !w.is_empty()).collect();
    let n = location.split_whitespace().count().max(1);
    words.windows(n.min(words.len().max(1))).any(|w| similarity(&w.join(" "), location) >= LOCATION_THRESHOLD)
}

pub fn location_matches(addresses: &[String], location: Option<&str>) -> bool {
    let Some(location) = location else { return true };
    let location = fold(location);
    addresses.iter().any(|a| address_matches(&fold(a), &location))
}

pub fn location_score(addresses: &[String], location: Option<&str>) -> f64 {
    if location_matches(addresses, location) {
        1.0
    } else {
        0.0
    }
}

/// Vectors for every distinct text, embedded in one batch.
pub fn embed_all<'a>(
    texts: impl IntoIterator<Item = &'a str>,
    provider: &dyn EmbeddingProvider,
) -> Result<HashMap<String, EmbeddingVector>, EmbedError> {
    let mut unique: Vec<String> = texts.into_iter().map(str::to_string).collect();
    unique.sort();
    unique.dedup();
    if unique.is_empty() {
        return Ok(HashMap::new());
    }
    let vectors = provider.embed_batch(&unique)?;
    Ok(unique.into_iter().zip(vectors).collect())
}

/// Mean over job skills of the best clamped cosine against any resume
/// skill. `vectors` must hold every string involved, keyed by the text
/// that was embedded; `jd_keys[i]` is the text embedded for `jd_skills[i]`.
pub(crate) fn skill_score_with(
    resume_skills: &[String],
    jd_skills: &[String],
    jd_keys: &[String],
    vectors: &HashMap<String, EmbeddingVector>,
) -> Result<(f64, Vec<SkillPair>), EmbedError> {
    let mut sorted: Vec<&String> = resume_skills.iter().collect();
    sorted.sort();
    sorted.dedup();
    let mut pairs = Vec::with_capacity(jd_skills.len());
    for (jd, key) in jd_skills.iter().zip(jd_keys) {
        let mut best: Option<(&String, f64)> = None;
        for r in &sorted {
            let sim = cosine(&vectors[key], &vectors[r.as_str()])?.max(0.0);
            // Sorted order keeps the lexicographically smallest on ties.
            if best.is_none_or(|(_, b)| sim > b) {
                best = Some((r, sim));
            }
        }
        pairs.push(SkillPair {
            jd_skill: jd.clone(),
            resume_skill: best.map(|(r, _)| r.clone()),
            similarity: best.map_or(0.0, |(_, s)| s),
        });
    }
    let score = if pairs.is_empty() {
        0.0
    } else {
        (pairs.iter().map(|p| p.similarity).sum::<f64>() / pairs.len() as f64).clamp(0.0, 1.0)
    };
    Ok((score, pairs))
}

/// Skill score of resume skills against job skills, embedding each string
/// individually with `provider`.
pub fn skill_score(
    resume_skills: &[String],
    jd_skills: &[String],
    provider: &dyn EmbeddingProvider,
) -> Result<(f64, Vec<SkillPair>), EmbedError> {
    let vectors = embed_all(resume_skills.iter().chain(jd_skills).map(String::as_str), provider)?;
    skill_score_with(resume_skills, jd_skills, jd_skills, &vectors)
}
