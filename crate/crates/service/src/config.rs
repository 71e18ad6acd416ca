//! Service configuration: an optional JSON file, then environment
//! overrides.

use std::fs;
use std::path::{Path, PathBuf};

use cvmatch_core::embed::HttpProviderConfig;
use cvmatch_core::extract::{LexiconPaths, YearMonth};
use cvmatch_core::matching::WeightProfile;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const ENV_CONFIG: &str = "CVMATCH_CONFIG";
pub const ENV_STORE: &str = "CVMATCH_STORE";
pub const ENV_EMBED_ENDPOINT: &str = "CVMATCH_EMBED_ENDPOINT";
pub const ENV_EMBED_MODEL: &str = "CVMATCH_EMBED_MODEL";
pub const ENV_EMBED_DIMENSION: &str = "CVMATCH_EMBED_DIMENSION";
pub const ENV_EMBED_TIMEOUT_MS: &str = "CVMATCH_EMBED_TIMEOUT_MS";
pub const ENV_WEIGHTS: &str = "CVMATCH_WEIGHTS";
pub const ENV_REFERENCE_DATE: &str = "CVMATCH_REFERENCE_DATE";
/// Prefix for lexicon overrides, e.g. `CVMATCH_LEXICON_SKILLS`.
pub const ENV_LEXICON_PREFIX: &str = "CVMATCH_LEXICON_";

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config `{path}`: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid config `{path}`: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("invalid value for {var}: {reason}")]
    Env { var: String, reason: String },
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Directory store root; in-memory store when unset.
    pub store: Option<PathBuf>,
    /// External embedding service; the built-in provider when unset.
    pub embedding: Option<HttpProviderConfig>,
    /// Used when a request carries no weights.
    pub weights: WeightProfile,
    pub lexicons: LexiconPaths,
    /// Date that "present" resolves to. The current month when unset.
    pub reference_date: Option<YearMonth>,
}

fn parse_year_month(var: &str, value: &str) -> Result<YearMonth, ConfigError> {
    let err = || ConfigError::Env { var: var.into(), reason: format!("`{value}` is not YYYY-MM") };
    let (y, m) = value.split_once('-').ok_or_else(err)?;
    YearMonth::new(y.parse().map_err(|_| err())?, m.parse().map_err(|_| err())?).ok_or_else(err)
}

fn parse_env<T: std::str::FromStr>(var: &str, value: &str) -> Result<T, ConfigError>
where
    T::Err: std::fmt::Display,
{
    value.parse().map_err(|e: T::Err| ConfigError::Env { var: var.into(), reason: e.to_string() })
}

impl Config {
    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = fs::read_to_string(path).map_err(|source| ConfigError::Read { path: path.into(), source })?;
        serde_json::from_str(&text).map_err(|source| ConfigError::Parse { path: path.into(), source })
    }

    /// File (when given) then process environment.
    pub fn load(path: Option<&Path>) -> Result<Self, ConfigError> {
        let base = match path {
            Some(p) => Self::from_file(p)?,
            None => Self::default(),
        };
        base.with_env(|k| std::env::var(k).ok())
    }

    /// Applies `CVMATCH_*` overrides read through `env`.
    pub fn with_env(mut self, env: impl Fn(&str) -> Option<String>) -> Result<Self, ConfigError> {
        if let Some(v) = env(ENV_STORE) {
            self.store = Some(v.into());
        }
        if let Some(v) = env(ENV_EMBED_ENDPOINT) {
            self.embedding.get_or_insert_with(HttpProviderConfig::default).endpoint = v;
        }
        if let Some(embedding) = self.embedding.as_mut() {
            if let Some(v) = env(ENV_EMBED_MODEL) {
                embedding.model = v;
            }
            if let Some(v) = env(ENV_EMBED_DIMENSION) {
                embedding.dimension = parse_env(ENV_EMBED_DIMENSION, &v)?;
            }
            if let Some(v) = env(ENV_EMBED_TIMEOUT_MS) {
                embedding.timeout_ms = parse_env(ENV_EMBED_TIMEOUT_MS, &v)?;
            }
        }
        if let Some(v) = env(ENV_WEIGHTS) {
            self.weights = parse_env(ENV_WEIGHTS, &v)?;
        }
        if let Some(v) = env(ENV_REFERENCE_DATE) {
            self.reference_date = Some(parse_year_month(ENV_REFERENCE_DATE, &v)?);
        }
        let lexicons = &mut self.lexicons;
        for (suffix, slot) in [
            ("SKILLS", &mut lexicons.skills),
            ("HEADERS", &mut lexicons.headers),
            ("DEGREES", &mut lexicons.degrees),
            ("LANGUAGES", &mut lexicons.languages),
            ("GIVEN_NAMES", &mut lexicons.given_names),
            ("FAMILY_NAMES", &mut lexicons.family_names),
        ] {
            if let Some(v) = env(&format!("{ENV_LEXICON_PREFIX}{suffix}")) {
                *slot = Some(v.into());
            }
        }
        Ok(self)
    }
}
