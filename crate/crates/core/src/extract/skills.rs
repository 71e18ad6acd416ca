use serde::{Deserialize, Serialize};

use super::lexicon::SkillLexicon;
use super::sections::{sections_text, Section, SectionLabel};
use super::tokens::{ngrams, Span};
use crate::fuzzy::fold;
use crate::ingest::NormalizedText;

/// Longest n-gram tried against the lexicon.
pub const MAX_SKILL_TOKENS: usize = 3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkillMention {
    /// Text as written in the resume.
    pub surface: String,
    /// Lexicon entry id.
    pub id: String,
    /// Lexicon canonical name.
    pub canonical: String,
    pub similarity: f64,
    /// Byte range into the normalized text.
    pub span: Span,
}

struct Candidate {
    span: Span,
    chars: usize,
    entry: usize,
    similarity: f64,
}

fn overlaps(a: Span, b: Span) -> bool {
    a.0 < b.1 && b.0 < a.1
}

/// Finds skill mentions in the Skills sections, or in the whole text when
/// the resume has none.
///
/// Overlapping hits are resolved longest span first, then by similarity,
/// then leftmost. Mentions are returned in text order.
pub fn extract_skills(sections: &[Section], text: &NormalizedText, lexicon: &SkillLexicon) -> Vec<SkillMention> {
    let text = text.as_str();
    let regions = sections_text(sections, text, &[SectionLabel::Skills]).unwrap_or_else(|| vec![(0, text)]);

    let mut candidates = Vec::new();
    for (base, region) in regions {
        for (span, _) in ngrams(region, base, MAX_SKILL_TOKENS) {
            let slice = &text[span.0..span.1];
            if let Some(hit) = lexicon.lookup(&fold(slice)) {
                candidates.push(Candidate {
                    span,
                    chars: slice.chars().count(),
                    entry: hit.entry,
                    similarity: hit.similarity,
                });
            }
        }
    }
    candidates.sort_by(|a, b| {
        b.chars.cmp(&a.chars).then(b.similarity.total_cmp(&a.similarity)).then(a.span.0.cmp(&b.span.0))
    });

    let mut accepted: Vec<Candidate> = Vec::new();
    for c in candidates {
        if accepted.iter().all(|a| !overlaps(a.span, c.span)) {
            accepted.push(c);
        }
    }
    accepted.sort_by_key(|c| c.span.0);
    accepted
        .into_iter()
        .map(|c| {
            let entry = lexicon.entry(c.entry);
            SkillMention {
                surface: text[c.span.0..c.span.1].to_string(),
                id: entry.id.clone(),
                canonical: entry.canonical.clone(),
                similarity: c.similarity,
                span: c.span,
            }
        })
        .collect()
}
