use serde::{Deserialize, Serialize};

use super::score::{
    education_score, experience_score, location_matches, location_score, Criterion, CriterionScore, SkillPair,
};
use super::{JobDescription, MatchError, MatchResult};
use crate::extract::ResumeProfile;

/// Similarity at which a skill pair is shown as matched.
pub const MATCHED_THRESHOLD: f64 = 0.6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperienceNote {
    pub candidate_months: u32,
    pub required_months: u32,
    pub raw: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EducationNote {
    pub candidate: u8,
    pub required: u8,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocationNote {
    pub required: Option<String>,
    pub matched: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Explanation {
    pub candidate_id: String,
    pub job_id: String,
    pub total: f64,
    pub provider_id: String,
    pub matched: Vec<SkillPair>,
    pub unmatched_jd_skills: Vec<String>,
    pub experience_note: ExperienceNote,
    pub education_note: EducationNote,
    pub location_note: LocationNote,
    pub contributions: Vec<CriterionScore>,
}

fn inconsistent(reason: impl Into<String>) -> MatchError {
    MatchError::InconsistentInputs(reason.into())
}

/// Breaks a result down for display. Fails when `result` was not computed
/// from this `jd` and `profile`.
pub fn explain(result: &MatchResult, jd: &JobDescription, profile: &ResumeProfile) -> Result<Explanation, MatchError> {
    if result.job_id != jd.id {
        return Err(inconsistent(format!("result is for job `{}`, not `{}`", result.job_id, jd.id)));
    }
    let jd_skills: Vec<&str> = result.skill_pairs.iter().map(|p| p.jd_skill.as_str()).collect();
    if jd_skills != jd.required_skills.iter().map(String::as_str).collect::<Vec<_>>() {
        return Err(inconsistent("skill pairs do not cover the job's required skills"));
    }
    if result.breakdown.len() != Criterion::ALL.len() {
        return Err(inconsistent("breakdown must have one entry per criterion"));
    }
    let experience = experience_score(profile.experience_months, jd.min_experience_months);
    let checks = [
        (Criterion::Experience, experience),
        (Criterion::Education, education_score(profile.education, jd.required_education)),
        (Criterion::Location, location_score(&profile.contact.addresses, jd.location.as_deref())),
    ];
    for (criterion, raw) in checks {
        if result.score(criterion).raw != raw {
            return Err(inconsistent(format!("{criterion:?} score does not match the profile")));
        }
    }
    for pair in &result.skill_pairs {
        if let Some(r) = &pair.resume_skill {
            if !profile.skills.iter().any(|s| &s.canonical == r) {
                return Err(inconsistent(format!("`{r}` is not a skill of the profile")));
            }
        }
    }

    let (matched, unmatched): (Vec<&SkillPair>, Vec<&SkillPair>) =
        result.skill_pairs.iter().partition(|p| p.resume_skill.is_some() && p.similarity >= MATCHED_THRESHOLD);
    Ok(Explanation {
        candidate_id: result.candidate_id.clone(),
        job_id: result.job_id.clone(),
        total: result.total,
        provider_id: result.provider_id.clone(),
        matched: matched.into_iter().cloned().collect(),
        unmatched_jd_skills: unmatched.into_iter().map(|p| p.jd_skill.clone()).collect(),
        experience_note: ExperienceNote {
            candidate_months: profile.experience_months,
            required_months: jd.min_experience_months,
            raw: experience,
        },
        education_note: EducationNote {
            candidate: profile.education.ordinal(),
            required: jd.required_education.ordinal(),
        },
        location_note: LocationNote {
            required: jd.location.clone(),
            matched: location_matches(&profile.contact.addresses, jd.location.as_deref()),
        },
        contributions: result.breakdown.clone(),
    })
}
