use serde::{Deserialize, Serialize};

use super::MatchError;
use crate::extract::EducationLevel;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JobDescription {
    pub id: String,
    #[serde(default)]
    pub title: String,
    pub required_skills: Vec<String>,
    #[serde(default)]
    pub min_experience_months: u32,
    #[serde(default)]
    pub required_education: EducationLevel,
    #[serde(default)]
    pub location: Option<String>,
    /// Language code; informational, not scored.
    #[serde(default)]
    pub language: Option<String>,
}

impl JobDescription {
    pub fn validate(&self) -> Result<(), MatchError> {
        let invalid = |reason: &str| Err(MatchError::InvalidJob { id: self.id.clone(), reason: reason.into() });
        if self.id.trim().is_empty() {
            return invalid("empty id");
        }
        if self.required_skills.is_empty() {
            return invalid("no required skills");
        }
        if self.required_skills.iter().any(|s| s.trim().is_empty()) {
            return invalid("blank required skill");
        }
        if self.location.as_deref().is_some_and(|l| l.trim().is_empty()) {
            return invalid("blank location");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn job(skills: &[&str]) -> JobDescription {
        JobDescription {
            id: "j1".into(),
            title: "Backend".into(),
            required_skills: skills.iter().map(|s| s.to_string()).collect(),
            min_experience_months: 24,
            required_education: EducationLevel::Master,
            location: Some("Alger".into()),
            language: None,
        }
    }

    #[test]
    fn validation() {
        assert!(job(&["Python"]).validate().is_ok());
        assert!(matches!(job(&[]).validate(), Err(MatchError::InvalidJob { .. })));
        assert!(job(&["Python", " "]).validate().is_err());
    }

    #[test]
    fn json_shape() {
        let j: JobDescription = serde_json::from_str(
            r#"{"id":"j1","title":"Backend","required_skills":["Python"],"min_experience_months":24,"required_education":3,"location":"Alger"}"#,
        )
        .unwrap();
        assert_eq!(j.required_education, EducationLevel::Master);
        assert_eq!(j.language, None);
    }
}
