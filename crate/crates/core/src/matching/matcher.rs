use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::score::{
    education_score, embed_all, experience_score, location_score, skill_score_with, Criterion, CriterionScore,
    SkillPair,
};
use super::{JobDescription, MatchError, WeightProfile};
use crate::embed::{EmbedError, EmbeddingProvider, EmbeddingVector, TrigramProvider};
use crate::extract::{ResumeProfile, SkillLexicon};
use crate::fuzzy::fold;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchResult {
    pub candidate_id: String,
    pub job_id: String,
    pub total: f64,
    /// One entry per criterion, in [`Criterion::ALL`] order.
    pub breakdown: Vec<CriterionScore>,
    /// Provider that produced the skill vectors.
    pub provider_id: String,
    pub skill_pairs: Vec<SkillPair>,
}

impl MatchResult {
    pub fn score(&self, criterion: Criterion) -> &CriterionScore {
        self.breakdown.iter().find(|c| c.criterion == criterion).expect("breakdown covers every criterion")
    }

    pub fn raw_scores(&self) -> [f64; 4] {
        Criterion::ALL.map(|c| self.score(c).raw)
    }

    /// The same raw scores combined under other weights.
    pub fn reweighted(&self, weights: &WeightProfile) -> MatchResult {
        assemble(
            &self.candidate_id,
            &self.job_id,
            self.raw_scores(),
            weights,
            self.provider_id.clone(),
            self.skill_pairs.clone(),
        )
    }
}

/// Sorts by rounded total descending, then candidate id.
pub fn sort_results(results: &mut [MatchResult]) {
    results.sort_by(|a, b| rank_key(b.total).cmp(&rank_key(a.total)).then_with(|| a.candidate_id.cmp(&b.candidate_id)));
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankEntry {
    pub candidate_id: String,
    /// Rounded to [`RANK_PRECISION`].
    pub total: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ranking {
    pub job_id: String,
    pub entries: Vec<RankEntry>,
}

/// Totals are compared at this resolution, so float noise from weight
/// renormalization never reorders candidates; ties go to the smaller id.
pub const RANK_PRECISION: f64 = 1e-9;
const RANK_SCALE: f64 = 1e9;

pub fn quantize(total: f64) -> f64 {
    (total * RANK_SCALE).round() / RANK_SCALE
}

fn rank_key(total: f64) -> i64 {
    (total * RANK_SCALE).round() as i64
}

/// Scores profiles against jobs. Skill vectors come from the primary
/// provider; if it fails, the built-in trigram provider takes over and
/// results record which one was used.
#[derive(Clone)]
pub struct Matcher {
    primary: Arc<dyn EmbeddingProvider>,
    fallback: TrigramProvider,
    lexicon: Option<Arc<SkillLexicon>>,
}

impl Default for Matcher {
    fn default() -> Self {
        Self::new(Arc::new(TrigramProvider))
    }
}

impl Matcher {
    pub fn new(primary: Arc<dyn EmbeddingProvider>) -> Self {
        Self { primary, fallback: TrigramProvider, lexicon: None }
    }

    /// Job skills that resolve in `lexicon` are embedded by their canonical
    /// name, so "JS" in a job compares like "JavaScript".
    pub fn with_lexicon(mut self, lexicon: Arc<SkillLexicon>) -> Self {
        self.lexicon = Some(lexicon);
        self
    }

    pub fn provider_id(&self) -> &str {
        self.primary.id()
    }

    fn jd_keys(&self, jd: &JobDescription) -> Vec<String> {
        jd.required_skills
            .iter()
            .map(|s| match &self.lexicon {
                Some(lex) => {
                    lex.lookup(&fold(s)).map_or_else(|| s.clone(), |hit| lex.entry(hit.entry).canonical.clone())
                }
                None => s.clone(),
            })
            .collect()
    }

    fn vectors(&self, texts: &[&str]) -> Result<(String, HashMap<String, EmbeddingVector>), MatchError> {
        match embed_all(texts.iter().copied(), self.primary.as_ref()) {
            Ok(v) => Ok((self.primary.id().to_string(), v)),
            Err(EmbedError::EmptyText) => Err(EmbedError::EmptyText.into()),
            Err(e) => {
                tracing::warn!(error = %e, fallback = self.fallback.id(), "embedding provider failed, using fallback");
                let v = embed_all(texts.iter().copied(), &self.fallback)?;
                Ok((self.fallback.id().to_string(), v))
            }
        }
    }

    /// Scores every candidate, embedding all distinct skills in one batch.
    pub fn match_all<'a>(
        &self,
        candidates: &[(&'a str, &'a ResumeProfile)],
        jd: &JobDescription,
        weights: &WeightProfile,
    ) -> Result<Vec<MatchResult>, MatchError> {
        jd.validate()?;
        let jd_keys = self.jd_keys(jd);
        let resume_skills: Vec<Vec<String>> =
            candidates.iter().map(|(_, p)| p.skills.iter().map(|s| s.canonical.clone()).collect()).collect();
        let texts: Vec<&str> = jd_keys.iter().chain(resume_skills.iter().flatten()).map(String::as_str).collect();
        let (provider_id, vectors) = self.vectors(&texts)?;

        candidates
            .iter()
            .zip(&resume_skills)
            .map(|((id, profile), skills)| {
                let (skill_raw, skill_pairs) = skill_score_with(skills, &jd.required_skills, &jd_keys, &vectors)?;
                let raws = [
                    skill_raw,
                    experience_score(profile.experience_months, jd.min_experience_months),
                    education_score(profile.education, jd.required_education),
                    location_score(&profile.contact.addresses, jd.location.as_deref()),
                ];
                Ok(assemble(id, &jd.id, raws, weights, provider_id.clone(), skill_pairs))
            })
            .collect()
    }

    pub fn match_profile(
        &self,
        candidate_id: &str,
        profile: &ResumeProfile,
        jd: &JobDescription,
        weights: &WeightProfile,
    ) -> Result<MatchResult, MatchError> {
        Ok(self.match_all(&[(candidate_id, profile)], jd, weights)?.remove(0))
    }

    /// Results sorted by rounded total descending, then candidate id.
    pub fn rank_results(
        &self,
        candidates: &[(&str, &ResumeProfile)],
        jd: &JobDescription,
        weights: &WeightProfile,
    ) -> Result<Vec<MatchResult>, MatchError> {
        let mut results = self.match_all(candidates, jd, weights)?;
        sort_results(&mut results);
        Ok(results)
    }

    pub fn rank(
        &self,
        candidates: &[(&str, &ResumeProfile)],
        jd: &JobDescription,
        weights: &WeightProfile,
    ) -> Result<Ranking, MatchError> {
        Ok(ranking(&jd.id, &self.rank_results(candidates, jd, weights)?))
    }
}

pub fn ranking(job_id: &str, sorted: &[MatchResult]) -> Ranking {
    Ranking {
        job_id: job_id.to_string(),
        entries: sorted
            .iter()
            .map(|r| RankEntry { candidate_id: r.candidate_id.clone(), total: quantize(r.total) })
            .collect(),
    }
}

/// Weighted sum of raw criterion scores.
pub fn assemble(
    candidate_id: &str,
    job_id: &str,
    raws: [f64; 4],
    weights: &WeightProfile,
    provider_id: String,
    skill_pairs: Vec<SkillPair>,
) -> MatchResult {
    let breakdown: Vec<CriterionScore> = Criterion::ALL
        .iter()
        .zip(raws)
        .zip(weights.as_array())
        .map(|((c, raw), w)| CriterionScore::new(*c, raw.clamp(0.0, 1.0), w))
        .collect();
    let total = breakdown.iter().map(|c| c.contribution).sum::<f64>().clamp(0.0, 1.0);
    MatchResult {
        candidate_id: candidate_id.to_string(),
        job_id: job_id.to_string(),
        total,
        breakdown,
        provider_id,
        skill_pairs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_combination_examples() {
        let w = WeightProfile::default();
        let r = assemble("c", "j", [1.0, 0.5, 1.0, 0.0], &w, "p".into(), vec![]);
        assert!((r.total - 0.8).abs() < 1e-12);
        assert_eq!(assemble("c", "j", [0.0; 4], &w, "p".into(), vec![]).total, 0.0);
        for w in WeightProfile::grid(10) {
            assert!((assemble("c", "j", [1.0; 4], &w, "p".into(), vec![]).total - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn quantization() {
        assert_eq!(rank_key(0.8), rank_key(0.8 + 1e-15));
        assert!(rank_key(0.8) > rank_key(0.8 - 2e-9));
        assert_eq!(quantize(0.123_456_789_4), 0.123_456_789);
    }
}
