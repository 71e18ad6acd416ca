use super::lexicon::LanguageLexicon;
use super::sections::{sections_text, Section, SectionLabel};
use super::tokens::ngrams;
use crate::fuzzy::fold;
use crate::ingest::NormalizedText;

/// Language codes named in the Languages sections, in order of first
/// mention. Resumes without such a section yield nothing, since language
/// names elsewhere ("Licence de français") rarely describe the candidate.
pub fn extract_languages(sections: &[Section], text: &NormalizedText, languages: &LanguageLexicon) -> Vec<String> {
    let text = text.as_str();
    let mut codes: Vec<String> = Vec::new();
    for (base, part) in sections_text(sections, text, &[SectionLabel::Languages]).unwrap_or_default() {
        for ((s, e), _) in ngrams(part, base, 1) {
            if let Some((code, _)) = languages.lookup(&fold(&text[s..e])) {
                if !codes.contains(&code) {
                    codes.push(code);
                }
            }
        }
    }
    codes
}
