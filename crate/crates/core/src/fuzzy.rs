//! Accent-insensitive normalized edit similarity.
//!
//! Every lexicon lookup in the crate (section headers, skills, degrees,
//! languages, locations) goes through [`fold`] followed by [`similarity`], so
//! one threshold and one metric govern all approximate matching.

use unicode_normalization::char::is_combining_mark;
use unicode_normalization::UnicodeNormalization;

/// Minimum similarity for a fuzzy lexicon hit.
pub const MATCH_THRESHOLD: f64 = 0.85;

/// Strips accents, lowercases, unifies apostrophes and collapses whitespace.
pub fn fold(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut pending_space = false;
    for c in s.nfd().filter(|c| !is_combining_mark(*c)) {
        if c.is_whitespace() {
            pending_space = !out.is_empty();
            continue;
        }
        if pending_space {
            out.push(' ');
            pending_space = false;
        }
        match c {
            '\u{2019}' | '\u{2018}' | '`' | '\u{00b4}' => out.push('\''),
            _ => out.extend(c.to_lowercase()),
        }
    }
    out
}

/// Levenshtein distance over Unicode scalar values.
pub fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    levenshtein_chars(&a, &b)
}

fn levenshtein_chars(a: &[char], b: &[char]) -> usize {
    if a.is_empty() {
        return b.len();
    }
    if b.is_empty() {
        return a.len();
    }
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let substitution = prev[j] + usize::from(ca != cb);
            cur[j + 1] = substitution.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// `1 - levenshtein(a, b) / max(|a|, |b|)`, with lengths in chars.
///
/// Inputs are compared as given; call [`fold`] first for accent- and
/// case-insensitive comparison. Two empty strings are identical (1.0).
pub fn similarity(a: &str, b: &str) -> f64 {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let longest = a.len().max(b.len());
    if longest == 0 {
        return 1.0;
    }
    1.0 - levenshtein_chars(&a, &b) as f64 / longest as f64
}

/// Similarity after folding both sides.
pub fn folded_similarity(a: &str, b: &str) -> f64 {
    similarity(&fold(a), &fold(b))
}

/// Cheap upper bound on [`similarity`] from lengths alone.
pub(crate) fn length_bound(len_a: usize, len_b: usize) -> f64 {
    let longest = len_a.max(len_b);
    if longest == 0 {
        return 1.0;
    }
    1.0 - len_a.abs_diff(len_b) as f64 / longest as f64
}

/// A folded lexicon variant with its char length cached for pruning.
#[derive(Debug, Clone)]
pub(crate) struct FoldedTerm {
    pub text: String,
    pub chars: usize,
}

impl FoldedTerm {
    pub fn new(raw: &str) -> Self {
        let text = fold(raw);
        let chars = text.chars().count();
        Self { text, chars }
    }

    /// Similarity against an already folded candidate, or `None` when the
    /// length bound alone rules out reaching `threshold`.
    pub fn score(&self, candidate: &str, candidate_chars: usize, threshold: f64) -> Option<f64> {
        if length_bound(self.chars, candidate_chars) < threshold {
            return None;
        }
        let s = similarity(&self.text, candidate);
        (s >= threshold).then_some(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fold_strips_accents_and_case() {
        assert_eq!(fold("  Expérience   PROFESSIONNELLE "), "experience professionnelle");
        assert_eq!(fold("Aujourd\u{2019}hui"), "aujourd'hui");
        assert_eq!(fold("Ge\u{301}rant"), "gerant");
    }

    #[test]
    fn header_typo_is_within_threshold() {
        let s = similarity(&fold("EXPERIANCE"), "experience");
        assert!((s - 0.9).abs() < 1e-12);
        assert!(s >= MATCH_THRESHOLD);
    }

    #[test]
    fn data_analytics_pair() {
        // "analytics" -> "analysis" is two edits (t->s, drop c), over 14 chars.
        assert_eq!(levenshtein("data analytics", "data analysis"), 2);
        let s = similarity("data analytics", "data analysis");
        assert!((s - (1.0 - 2.0 / 14.0)).abs() < 1e-12);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(similarity("", ""), 1.0);
        assert_eq!(similarity("abc", ""), 0.0);
        assert_eq!(levenshtein("", "abc"), 3);
        assert_eq!(levenshtein("kitten", "sitting"), 3);
    }

    #[test]
    fn length_bound_never_underestimates() {
        for (a, b) in [("abc", "abcd"), ("flaw", "lawn"), ("x", "xyzzy")] {
            let bound = length_bound(a.chars().count(), b.chars().count());
            assert!(bound >= similarity(a, b));
        }
    }
}
