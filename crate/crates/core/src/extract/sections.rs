use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::lexicon::HeaderLexicon;
use crate::fuzzy::fold;
use crate::ingest::NormalizedText;

/// Longest line (in chars) considered as a potential header.
const MAX_HEADER_CHARS: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SectionLabel {
    Contact,
    Summary,
    Education,
    Experience,
    Skills,
    Languages,
    Other,
}

impl FromStr for SectionLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "Contact" => Self::Contact,
            "Summary" => Self::Summary,
            "Education" => Self::Education,
            "Experience" => Self::Experience,
            "Skills" => Self::Skills,
            "Languages" => Self::Languages,
            "Other" => Self::Other,
            _ => return Err(format!("unknown section label `{s}`")),
        })
    }
}

impl fmt::Display for SectionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub label: SectionLabel,
    /// Header line as written; empty for the unheaded prefix.
    pub header: String,
    /// Byte range into the normalized text, end exclusive.
    pub span: (usize, usize),
}

impl Section {
    pub fn slice<'t>(&self, text: &'t str) -> &'t str {
        &text[self.span.0..self.span.1]
    }

    pub fn is_prefix(&self) -> bool {
        self.header.is_empty()
    }
}

/// Classifies a line as a section header.
///
/// Decorations around the title are ignored (`"— COMPÉTENCES :"`), and a
/// title followed by a colon may carry inline content
/// (`"Langues : Français, Anglais"`).
pub fn header_label(line: &str, headers: &HeaderLexicon) -> Option<SectionLabel> {
    let strip = |s: &str| s.trim_matches(|c: char| !c.is_alphanumeric()).to_string();
    let whole = strip(line);
    let mut candidates = vec![whole];
    if let Some((head, _)) = line.split_once(':') {
        candidates.push(strip(head));
    }
    candidates
        .into_iter()
        .filter(|c| !c.is_empty() && c.chars().count() <= MAX_HEADER_CHARS)
        .find_map(|c| headers.lookup(&fold(&c)).map(|(label, _)| label))
}

/// Splits normalized text into labeled sections that partition it exactly.
pub fn segment(text: &NormalizedText, headers: &HeaderLexicon) -> Vec<Section> {
    let text = text.as_str();
    let mut starts: Vec<(usize, SectionLabel, String)> = Vec::new();
    let mut offset = 0;
    for line in text.split('\n') {
        if let Some(label) = header_label(line, headers) {
            starts.push((offset, label, line.to_string()));
        }
        offset += line.len() + 1;
    }

    let mut sections = Vec::with_capacity(starts.len() + 1);
    let first_start = starts.first().map_or(text.len(), |s| s.0);
    if first_start > 0 || starts.is_empty() {
        sections.push(Section { label: SectionLabel::Other, header: String::new(), span: (0, first_start) });
    }
    for (i, (start, label, header)) in starts.iter().enumerate() {
        let end = starts.get(i + 1).map_or(text.len(), |next| next.0);
        sections.push(Section { label: *label, header: header.clone(), span: (*start, end) });
    }
    sections
}

/// Concatenated text of every section with one of `labels`, or `None`.
pub(crate) fn sections_text<'t>(
    sections: &[Section],
    text: &'t str,
    labels: &[SectionLabel],
) -> Option<Vec<(usize, &'t str)>> {
    let parts: Vec<(usize, &str)> =
        sections.iter().filter(|s| labels.contains(&s.label)).map(|s| (s.span.0, s.slice(text))).collect();
    (!parts.is_empty()).then_some(parts)
}
