//! Resume fields from normalized text: sections, contact details, name,
//! skills, education, experience and languages.

pub mod contact;
pub mod dates;
pub mod education;
pub mod languages;
pub mod lexicon;
pub mod name;
pub mod profile;
pub mod sections;
pub mod skills;
pub mod tokens;

pub use contact::{extract_contact, normalize_phone, ContactInfo};
pub use dates::{extract_experience, parse_date_intervals, total_experience_months, DateInterval, YearMonth};
pub use education::{extract_education_level, EducationLevel};
pub use languages::extract_languages;
pub use lexicon::{
    DegreeLexicon, Gazetteer, HeaderLexicon, LanguageLexicon, LexiconError, LexiconPaths, Resources, SkillEntry,
    SkillHit, SkillLexicon,
};
pub use name::{extract_name, CandidateName, GazetteerNameScorer, NameScorer};
pub use profile::{build_profile, ProfileParts, ResumeProfile};
pub use sections::{segment, Section, SectionLabel};
pub use skills::{extract_skills, SkillMention};

use crate::ingest::{ingest, IngestError, IngestedDocument, SourceDocument};

/// Runs every extractor over an ingested document.
pub fn extract_profile(
    doc: &IngestedDocument,
    resources: &Resources,
    scorer: &dyn NameScorer,
    today: YearMonth,
) -> ResumeProfile {
    let sections = segment(&doc.text, &resources.headers);
    build_profile(
        doc.id.clone(),
        ProfileParts {
            name: extract_name(&doc.blocks, &resources.headers, scorer),
            contact: extract_contact(&sections, &doc.text),
            skills: extract_skills(&sections, &doc.text, &resources.skills),
            education: extract_education_level(&sections, &doc.text, &resources.degrees),
            intervals: extract_experience(&sections, &doc.text, today),
            languages: extract_languages(&sections, &doc.text, &resources.languages),
        },
    )
}

/// Ingests and extracts with the built-in name scorer.
pub fn parse_resume(
    source: &SourceDocument,
    resources: &Resources,
    today: YearMonth,
) -> Result<ResumeProfile, IngestError> {
    let doc = ingest(source)?;
    let scorer = GazetteerNameScorer { gazetteer: &resources.gazetteer, skills: &resources.skills };
    Ok(extract_profile(&doc, resources, &scorer, today))
}
