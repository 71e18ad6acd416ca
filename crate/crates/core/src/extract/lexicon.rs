//! Lexicons are data: skills, section headers, degrees, languages and the
//! name gazetteer ship as files under `data/` and can be swapped at load
//! time without touching code.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::education::EducationLevel;
use super::sections::SectionLabel;
use crate::fuzzy::{fold, FoldedTerm, MATCH_THRESHOLD};

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("cannot read lexicon `{path}`: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid lexicon JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid lexicon: {0}")]
    Invalid(String),
}

fn read(path: &Path) -> Result<String, LexiconError> {
    std::fs::read_to_string(path).map_err(|source| LexiconError::Io { path: path.to_path_buf(), source })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkillEntry {
    pub id: String,
    pub canonical: String,
    #[serde(default)]
    pub aliases: Vec<String>,
}

/// Result of resolving a candidate span against the skill lexicon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkillHit {
    pub entry: usize,
    pub similarity: f64,
}

#[derive(Debug, Clone)]
pub struct SkillLexicon {
    entries: Vec<SkillEntry>,
    exact: HashMap<String, usize>,
    terms: Vec<(usize, FoldedTerm)>,
}

impl SkillLexicon {
    pub fn new(entries: Vec<SkillEntry>) -> Result<Self, LexiconError> {
        let mut ids = HashSet::new();
        let mut exact = HashMap::new();
        let mut terms = Vec::new();
        for (i, entry) in entries.iter().enumerate() {
            if entry.id.trim().is_empty() || entry.canonical.trim().is_empty() {
                return Err(LexiconError::Invalid(format!("entry {i} has an empty id or canonical name")));
            }
            if !ids.insert(entry.id.as_str()) {
                return Err(LexiconError::Invalid(format!("duplicate skill id `{}`", entry.id)));
            }
            for variant in std::iter::once(&entry.canonical).chain(&entry.aliases) {
                let term = FoldedTerm::new(variant);
                if term.text.is_empty() {
                    continue;
                }
                // First entry wins when two entries share a surface form.
                exact.entry(term.text.clone()).or_insert(i);
                terms.push((i, term));
            }
        }
        Ok(Self { entries, exact, terms })
    }

    pub fn from_json(json: &str) -> Result<Self, LexiconError> {
        Self::new(serde_json::from_str(json)?)
    }

    pub fn from_path(path: &Path) -> Result<Self, LexiconError> {
        Self::from_json(&read(path)?)
    }

    pub fn bundled() -> Self {
        Self::from_json(include_str!("../../data/skills.json")).expect("bundled skill lexicon is valid")
    }

    pub fn entries(&self) -> &[SkillEntry] {
        &self.entries
    }

    pub fn entry(&self, index: usize) -> &SkillEntry {
        &self.entries[index]
    }

    pub fn get(&self, id: &str) -> Option<&SkillEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Resolves an already folded span. Exact canonical or alias hits score
    /// 1.0; otherwise the most similar variant at or above the threshold
    /// wins, earlier entries first on ties.
    pub fn lookup(&self, folded: &str) -> Option<SkillHit> {
        if let Some(&entry) = self.exact.get(folded) {
            return Some(SkillHit { entry, similarity: 1.0 });
        }
        let chars = folded.chars().count();
        let mut best: Option<SkillHit> = None;
        for (entry, term) in &self.terms {
            if let Some(similarity) = term.score(folded, chars, MATCH_THRESHOLD) {
                if best.is_none_or(|b| similarity > b.similarity) {
                    best = Some(SkillHit { entry: *entry, similarity });
                }
            }
        }
        best
    }
}

/// Label → surface variants, matched by folded similarity.
#[derive(Debug, Clone)]
pub struct VariantLexicon<L> {
    terms: Vec<(L, FoldedTerm)>,
}

impl<L: Clone> VariantLexicon<L> {
    pub fn new(variants: impl IntoIterator<Item = (L, String)>) -> Self {
        let terms = variants
            .into_iter()
            .map(|(label, v)| (label, FoldedTerm::new(&v)))
            .filter(|(_, t)| !t.text.is_empty())
            .collect();
        Self { terms }
    }

    /// Best label for an already folded candidate at `threshold` or above.
    pub fn lookup_with(&self, folded: &str, threshold: f64) -> Option<(L, f64)> {
        let chars = folded.chars().count();
        let mut best: Option<(L, f64)> = None;
        for (label, term) in &self.terms {
            if let Some(s) = term.score(folded, chars, threshold) {
                if best.as_ref().is_none_or(|(_, b)| s > *b) {
                    best = Some((label.clone(), s));
                }
            }
        }
        best
    }

    pub fn lookup(&self, folded: &str) -> Option<(L, f64)> {
        self.lookup_with(folded, MATCH_THRESHOLD)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<L: Clone + FromStr> VariantLexicon<L> {
    /// Parses a JSON object `{label: [variants...]}`.
    pub fn from_json(json: &str) -> Result<Self, LexiconError> {
        let raw: BTreeMap<String, Vec<String>> = serde_json::from_str(json)?;
        let mut variants = Vec::new();
        for (label, list) in raw {
            let parsed = label.parse::<L>().map_err(|_| LexiconError::Invalid(format!("unknown label `{label}`")))?;
            variants.extend(list.into_iter().map(|v| (parsed.clone(), v)));
        }
        Ok(Self::new(variants))
    }

    pub fn from_path(path: &Path) -> Result<Self, LexiconError> {
        Self::from_json(&read(path)?)
    }
}

pub type HeaderLexicon = VariantLexicon<SectionLabel>;
pub type DegreeLexicon = VariantLexicon<EducationLevel>;
/// Language code → names in English and French.
pub type LanguageLexicon = VariantLexicon<String>;

pub fn bundled_headers() -> HeaderLexicon {
    HeaderLexicon::from_json(include_str!("../../data/headers.json")).expect("bundled header lexicon is valid")
}

pub fn bundled_degrees() -> DegreeLexicon {
    DegreeLexicon::from_json(include_str!("../../data/degrees.json")).expect("bundled degree lexicon is valid")
}

pub fn bundled_languages() -> LanguageLexicon {
    LanguageLexicon::from_json(include_str!("../../data/languages.json")).expect("bundled language lexicon is valid")
}

/// Given-name and family-name tokens, folded.
#[derive(Debug, Clone, Default)]
pub struct Gazetteer {
    given: HashSet<String>,
    family: HashSet<String>,
}

impl Gazetteer {
    /// Builds from two word lists, one token per line; `#` starts a comment.
    pub fn from_lists(given: &str, family: &str) -> Self {
        let parse = |s: &str| {
            s.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()).map(fold).collect()
        };
        Self { given: parse(given), family: parse(family) }
    }

    pub fn from_paths(given: &Path, family: &Path) -> Result<Self, LexiconError> {
        Ok(Self::from_lists(&read(given)?, &read(family)?))
    }

    pub fn bundled() -> Self {
        Self::from_lists(include_str!("../../data/given_names.txt"), include_str!("../../data/family_names.txt"))
    }

    pub fn is_given(&self, token: &str) -> bool {
        self.given.contains(&fold(token))
    }

    pub fn is_family(&self, token: &str) -> bool {
        self.family.contains(&fold(token))
    }

    pub fn contains(&self, token: &str) -> bool {
        let t = fold(token);
        self.given.contains(&t) || self.family.contains(&t)
    }
}

/// Locations of every replaceable lexicon file.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexiconPaths {
    pub skills: Option<PathBuf>,
    pub headers: Option<PathBuf>,
    pub degrees: Option<PathBuf>,
    pub languages: Option<PathBuf>,
    pub given_names: Option<PathBuf>,
    pub family_names: Option<PathBuf>,
}

/// Read-only lexicon bundle shared by every extraction call.
#[derive(Debug, Clone)]
pub struct Resources {
    pub skills: SkillLexicon,
    pub headers: HeaderLexicon,
    pub degrees: DegreeLexicon,
    pub languages: LanguageLexicon,
    pub gazetteer: Gazetteer,
}

impl Resources {
    pub fn bundled() -> Self {
        Self {
            skills: SkillLexicon::bundled(),
            headers: bundled_headers(),
            degrees: bundled_degrees(),
            languages: bundled_languages(),
            gazetteer: Gazetteer::bundled(),
        }
    }

    /// Bundled data with any configured file overriding its counterpart.
    pub fn load(paths: &LexiconPaths) -> Result<Self, LexiconError> {
        let mut res = Self::bundled();
        if let Some(p) = &paths.skills {
            res.skills = SkillLexicon::from_path(p)?;
        }
        if let Some(p) = &paths.headers {
            res.headers = HeaderLexicon::from_path(p)?;
        }
        if let Some(p) = &paths.degrees {
            res.degrees = DegreeLexicon::from_path(p)?;
        }
        if let Some(p) = &paths.languages {
            res.languages = LanguageLexicon::from_path(p)?;
        }
        match (&paths.given_names, &paths.family_names) {
            (Some(g), Some(f)) => res.gazetteer = Gazetteer::from_paths(g, f)?,
            (None, None) => {}
            _ => return Err(LexiconError::Invalid("given and family name lists must be set together".into())),
        }
        Ok(res)
    }
}
