//! Candidate name detection.
//!
//! Candidate lines come from the top of the document; a [`NameScorer`]
//! rates each one and the best line wins. Any classifier can sit behind the
//! trait; [`GazetteerNameScorer`] is the built-in deterministic one.

use serde::{Deserialize, Serialize};

use super::contact::normalize_phone;
use super::lexicon::{Gazetteer, HeaderLexicon, SkillLexicon};
use super::sections::header_label;
use crate::fuzzy::fold;
use crate::ingest::{normalize_text, TextBlock};

/// Number of leading blocks searched for the name.
pub const NAME_WINDOW: usize = 10;
pub const MAX_NAME_TOKENS: usize = 4;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CandidateName {
    pub value: String,
    pub confidence: f64,
}

/// Rates how likely `line` is the candidate's name, in `[0, 1]`.
/// `position` is the rank of the line's block among the leading blocks.
pub trait NameScorer: Send + Sync {
    fn score(&self, line: &str, position: usize) -> f64;
}

/// Gazetteer hits plus typography and position, minus skill-lexicon hits.
///
/// `score = 0.5·gazetteer + 0.2·casing + 0.3·position − 0.5·skill`,
/// clamped to `[0, 1]`, where `gazetteer` and `casing` are the fractions
/// of tokens found in the name lists and written Title-case or ALL-CAPS,
/// `position = 1 − rank/10`, and `skill` is 1 when the line or one of its
/// tokens resolves in the skill lexicon.
pub struct GazetteerNameScorer<'a> {
    pub gazetteer: &'a Gazetteer,
    pub skills: &'a SkillLexicon,
}

pub const GAZETTEER_WEIGHT: f64 = 0.5;
pub const CASING_WEIGHT: f64 = 0.2;
pub const POSITION_WEIGHT: f64 = 0.3;
pub const SKILL_PENALTY: f64 = 0.5;

fn name_parts(token: &str) -> impl Iterator<Item = &str> {
    token.split(['-', '\'', '\u{2019}']).filter(|p| !p.is_empty())
}

fn is_name_cased(token: &str) -> bool {
    name_parts(token).all(is_part_cased)
}

fn is_part_cased(token: &str) -> bool {
    let letters: Vec<char> = token.chars().filter(|c| c.is_alphabetic()).collect();
    let Some(first) = letters.first() else { return false };
    let all_caps = letters.len() >= 2 && letters.iter().all(|c| c.is_uppercase());
    let title = first.is_uppercase() && letters[1..].iter().all(|c| c.is_lowercase());
    all_caps || title
}

impl NameScorer for GazetteerNameScorer<'_> {
    fn score(&self, line: &str, position: usize) -> f64 {
        let tokens: Vec<&str> = line
            .split_whitespace()
            .map(|t| t.trim_matches(|c: char| !c.is_alphanumeric()))
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.is_empty() {
            return 0.0;
        }
        let n = tokens.len() as f64;
        let in_gazetteer = tokens.iter().filter(|t| name_parts(t).all(|p| self.gazetteer.contains(p))).count();
        let cased = tokens.iter().filter(|t| is_name_cased(t)).count();
        let position_bonus = 1.0 - position.min(NAME_WINDOW) as f64 / NAME_WINDOW as f64;
        let skill_hit =
            self.skills.lookup(&fold(line)).is_some() || tokens.iter().any(|t| self.skills.lookup(&fold(t)).is_some());

        let score = GAZETTEER_WEIGHT * in_gazetteer as f64 / n
            + CASING_WEIGHT * cased as f64 / n
            + POSITION_WEIGHT * position_bonus
            - if skill_hit { SKILL_PENALTY } else { 0.0 };
        score.clamp(0.0, 1.0)
    }
}

fn is_candidate(line: &str, headers: &HeaderLexicon) -> bool {
    let tokens = line.split_whitespace().count();
    (1..=MAX_NAME_TOKENS).contains(&tokens)
        && !line.chars().any(|c| c.is_ascii_digit())
        && line.chars().any(char::is_alphabetic)
        && !line.contains('@')
        && normalize_phone(line).is_none()
        && header_label(line, headers).is_none()
}

/// Candidate lines from the first [`NAME_WINDOW`] blocks in reading order,
/// each paired with its block position.
pub fn name_candidates(blocks: &[TextBlock], headers: &HeaderLexicon) -> Vec<(String, usize)> {
    let mut ordered: Vec<&TextBlock> = blocks.iter().collect();
    ordered.sort_by_key(|b| b.order.unwrap_or(usize::MAX));
    ordered
        .into_iter()
        .take(NAME_WINDOW)
        .enumerate()
        .flat_map(|(position, block)| {
            normalize_text(&block.text)
                .lines()
                .map(|l| l.to_string())
                .filter(|l| is_candidate(l, headers))
                .map(move |l| (l, position))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Highest-scoring candidate line; earliest line on ties. No candidate (or
/// only zero scores) yields an empty name with confidence 0.
pub fn extract_name(blocks: &[TextBlock], headers: &HeaderLexicon, scorer: &dyn NameScorer) -> CandidateName {
    let mut best = CandidateName::default();
    for (line, position) in name_candidates(blocks, headers) {
        let score = scorer.score(&line, position);
        if score > best.confidence {
            best = CandidateName { value: line, confidence: score };
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::lexicon::Resources;
    use crate::ingest::arrange_blocks;
    use crate::ingest::BBox;

    fn blocks(lines: &[&str]) -> Vec<TextBlock> {
        let raw = lines
            .iter()
            .enumerate()
            .map(|(i, l)| TextBlock::new(0, BBox::new(0.0, 12.0 * i as f64, 600.0, 12.0 * i as f64 + 12.0), *l))
            .collect();
        arrange_blocks(raw)
    }

    fn scorer(res: &Resources) -> GazetteerNameScorer<'_> {
        GazetteerNameScorer { gazetteer: &res.gazetteer, skills: &res.skills }
    }

    #[test]
    fn gazetteer_name_on_first_block() {
        let res = Resources::bundled();
        let s = scorer(&res);
        let doc = blocks(&["BENALI Amine", "Développeur Full Stack", "amine@mail.dz"]);
        let name = extract_name(&doc, &res.headers, &s);
        assert_eq!(name.value, "BENALI Amine");
        // Both tokens in the gazetteer, both name-cased, first position.
        let expected = GAZETTEER_WEIGHT + CASING_WEIGHT + POSITION_WEIGHT;
        assert!((name.confidence - expected).abs() < 1e-12);
        for (line, pos) in name_candidates(&doc, &res.headers) {
            assert!(s.score(&line, pos) <= name.confidence);
        }
    }

    #[test]
    fn only_headers_means_no_name() {
        let res = Resources::bundled();
        let doc = blocks(&["Compétences", "Formation", "Expérience", "Langues"]);
        let name = extract_name(&doc, &res.headers, &scorer(&res));
        assert_eq!(name, CandidateName { value: String::new(), confidence: 0.0 });
    }

    #[test]
    fn job_title_is_penalized() {
        let res = Resources::bundled();
        let s = scorer(&res);
        let name = s.score("Amine Benali", 0);
        let title = s.score("Ingénieur Logiciel", 1);
        // 0.5 + 0.2 + 0.3 for the name; 0.2 + 0.3·0.9 − 0.5 for the title.
        assert!((name - 1.0).abs() < 1e-12);
        assert!((title - (0.2 + 0.27 - 0.5_f64).max(0.0)).abs() < 1e-12);
        let doc = blocks(&["Ingénieur Logiciel", "Amine Benali"]);
        assert_eq!(extract_name(&doc, &res.headers, &s).value, "Amine Benali");
    }

    #[test]
    fn filters_digits_emails_and_long_lines() {
        let res = Resources::bundled();
        let doc = blocks(&["0661 23 45 67", "a@b.dz", "Passionate engineer with many years", "Sara Haddad"]);
        let candidates: Vec<String> = name_candidates(&doc, &res.headers).into_iter().map(|c| c.0).collect();
        assert_eq!(candidates, ["Sara Haddad"]);
    }

    #[test]
    fn window_is_ten_blocks() {
        let res = Resources::bundled();
        let mut lines = vec!["Compétences"; NAME_WINDOW];
        lines.push("Amine Benali");
        let name = extract_name(&blocks(&lines), &res.headers, &scorer(&res));
        assert_eq!(name.confidence, 0.0);
    }

    #[test]
    fn hyphenated_family_names() {
        let res = Resources::bundled();
        assert!((scorer(&res).score("Nadia Ait-Ahmed", 0) - 1.0).abs() < 1e-12);
    }
}
