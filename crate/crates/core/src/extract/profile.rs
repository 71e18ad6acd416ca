use serde::{Deserialize, Serialize};

use super::contact::ContactInfo;
use super::dates::{total_experience_months, DateInterval};
use super::education::EducationLevel;
use super::name::CandidateName;
use super::skills::SkillMention;

/// Structured resume, the input to matching.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResumeProfile {
    pub source_id: String,
    pub name: CandidateName,
    pub contact: ContactInfo,
    /// One mention per skill id, in order of first appearance.
    pub skills: Vec<SkillMention>,
    pub education: EducationLevel,
    pub experience_months: u32,
    pub experience: Vec<DateInterval>,
    /// Language codes.
    pub languages: Vec<String>,
}

impl ResumeProfile {
    pub fn skill_names(&self) -> Vec<&str> {
        self.skills.iter().map(|s| s.canonical.as_str()).collect()
    }

    pub fn has_skill(&self, id: &str) -> bool {
        self.skills.iter().any(|s| s.id == id)
    }
}

#[derive(Debug, Clone, Default)]
pub struct ProfileParts {
    pub name: CandidateName,
    pub contact: ContactInfo,
    pub skills: Vec<SkillMention>,
    pub education: EducationLevel,
    pub intervals: Vec<DateInterval>,
    pub languages: Vec<String>,
}

/// Assembles a profile. Repeated skills collapse to the first mention,
/// carrying the best similarity seen for that id.
pub fn build_profile(source_id: impl Into<String>, parts: ProfileParts) -> ResumeProfile {
    let mut skills: Vec<SkillMention> = Vec::new();
    for mention in parts.skills {
        match skills.iter_mut().find(|s| s.id == mention.id) {
            Some(existing) if mention.similarity > existing.similarity => {
                existing.similarity = mention.similarity;
                existing.surface = mention.surface;
                existing.span = mention.span;
            }
            Some(_) => {}
            None => skills.push(mention),
        }
    }
    ResumeProfile {
        source_id: source_id.into(),
        name: parts.name,
        contact: parts.contact,
        skills,
        education: parts.education,
        experience_months: total_experience_months(&parts.intervals),
        experience: parts.intervals,
        languages: parts.languages,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mention(id: &str, similarity: f64, at: usize) -> SkillMention {
        SkillMention {
            surface: id.to_string(),
            id: id.to_string(),
            canonical: id.to_uppercase(),
            similarity,
            span: (at, at + id.len()),
        }
    }

    #[test]
    fn skills_deduplicate_keeping_best() {
        let p = build_profile(
            "r1",
            ProfileParts {
                skills: vec![mention("python", 0.9, 0), mention("sql", 1.0, 10), mention("python", 1.0, 20)],
                ..Default::default()
            },
        );
        assert_eq!(p.skill_names(), ["PYTHON", "SQL"]);
        assert_eq!(p.skills[0].similarity, 1.0);
        assert!(p.has_skill("sql") && !p.has_skill("rust"));
        assert_eq!(p.experience_months, 0);
    }
}
