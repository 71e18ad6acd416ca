use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::lexicon::DegreeLexicon;
use super::sections::{sections_text, Section, SectionLabel};
use super::tokens::ngrams;
use crate::fuzzy::fold;
use crate::ingest::NormalizedText;

/// Highest degree, compared by ordinal only.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum EducationLevel {
    #[default]
    None = 0,
    HighSchool = 1,
    /// Licence or Bachelor.
    Bachelor = 2,
    /// Master or Engineer.
    Master = 3,
    PhD = 4,
}

impl EducationLevel {
    pub const ALL: [EducationLevel; 5] = [Self::None, Self::HighSchool, Self::Bachelor, Self::Master, Self::PhD];

    pub fn ordinal(self) -> u8 {
        self as u8
    }
}

impl From<EducationLevel> for u8 {
    fn from(level: EducationLevel) -> u8 {
        level.ordinal()
    }
}

impl TryFrom<u8> for EducationLevel {
    type Error = String;

    fn try_from(v: u8) -> Result<Self, Self::Error> {
        Self::ALL.get(usize::from(v)).copied().ok_or_else(|| format!("education ordinal {v} out of range 0..=4"))
    }
}

impl FromStr for EducationLevel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "None" => Self::None,
            "HighSchool" => Self::HighSchool,
            "Bachelor" => Self::Bachelor,
            "Master" => Self::Master,
            "PhD" => Self::PhD,
            _ => return Err(format!("unknown education level `{s}`")),
        })
    }
}

impl fmt::Display for EducationLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Highest degree named in the Education sections (whole text when there
/// is none).
pub fn extract_education_level(sections: &[Section], text: &NormalizedText, degrees: &DegreeLexicon) -> EducationLevel {
    let text = text.as_str();
    let regions = sections_text(sections, text, &[SectionLabel::Education]).unwrap_or_else(|| vec![(0, text)]);
    regions
        .into_iter()
        .flat_map(|(base, region)| ngrams(region, base, 3))
        .filter_map(|((s, e), _)| degrees.lookup(&fold(&text[s..e])).map(|(level, _)| level))
        .max()
        .unwrap_or_default()
}
