use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::MatchError;

/// Tolerance on the weight sum for user-supplied profiles.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-6;

/// Criterion weights on the simplex. Construct through [`WeightProfile::new`]
/// or deserialization, both of which validate and renormalize.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawWeights")]
pub struct WeightProfile {
    pub skills: f64,
    pub experience: f64,
    pub education: f64,
    pub location: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWeights {
    skills: f64,
    experience: f64,
    education: f64,
    location: f64,
}

impl TryFrom<RawWeights> for WeightProfile {
    type Error = MatchError;

    fn try_from(r: RawWeights) -> Result<Self, Self::Error> {
        Self::new(r.skills, r.experience, r.education, r.location)
    }
}

impl Default for WeightProfile {
    fn default() -> Self {
        Self { skills: 0.5, experience: 0.2, education: 0.2, location: 0.1 }
    }
}

fn check_components(w: [f64; 4]) -> Result<f64, MatchError> {
    if w.iter().any(|x| !x.is_finite() || *x < 0.0) {
        return Err(MatchError::InvalidWeights(format!("weights must be finite and non-negative, got {w:?}")));
    }
    Ok(w.iter().sum())
}

impl WeightProfile {
    /// Accepts weights summing to 1 within [`WEIGHT_SUM_TOLERANCE`] and
    /// rescales them to sum to 1.
    pub fn new(skills: f64, experience: f64, education: f64, location: f64) -> Result<Self, MatchError> {
        let sum = check_components([skills, experience, education, location])?;
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(MatchError::InvalidWeights(format!("weights sum to {sum}, expected 1")));
        }
        Ok(Self::scaled(skills, experience, education, location, sum))
    }

    /// Any non-negative weights with a positive sum, rescaled to sum to 1.
    pub fn from_relative(skills: f64, experience: f64, education: f64, location: f64) -> Result<Self, MatchError> {
        let sum = check_components([skills, experience, education, location])?;
        if sum <= 0.0 {
            return Err(MatchError::InvalidWeights("weights sum to zero".into()));
        }
        Ok(Self::scaled(skills, experience, education, location, sum))
    }

    fn scaled(s: f64, e: f64, d: f64, l: f64, sum: f64) -> Self {
        Self { skills: s / sum, experience: e / sum, education: d / sum, location: l / sum }
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.skills, self.experience, self.education, self.location]
    }

    /// Every profile whose weights are multiples of `1/steps`, skills first.
    pub fn grid(steps: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for s in 0..=steps {
            for e in 0..=steps - s {
                for d in 0..=steps - s - e {
                    let l = steps - s - e - d;
                    out.push(
                        Self::from_relative(f64::from(s), f64::from(e), f64::from(d), f64::from(l))
                            .expect("grid weights sum to steps"),
                    );
                }
            }
        }
        out
    }
}

fn parse_list(s: &str) -> Result<[f64; 4], MatchError> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| MatchError::InvalidWeights(format!("`{s}`: {e}")))?;
    parts.try_into().map_err(|_| MatchError::InvalidWeights(format!("`{s}`: expected four comma-separated weights")))
}

impl WeightProfile {
    /// Like [`FromStr`] but through [`WeightProfile::from_relative`], so
    /// `"5,2,2,1"` equals `"0.5,0.2,0.2,0.1"`.
    pub fn parse_relative(s: &str) -> Result<Self, MatchError> {
        let [a, b, c, d] = parse_list(s)?;
        Self::from_relative(a, b, c, d)
    }
}

impl FromStr for WeightProfile {
    type Err = MatchError;

    /// `"skills,experience,education,location"`, e.g. `"0.5,0.2,0.2,0.1"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let [a, b, c, d] = parse_list(s)?;
        Self::new(a, b, c, d)
    }
}

impl fmt::Display for WeightProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.skills, self.experience, self.education, self.location)
    }
}
