//! Text embeddings behind a provider trait, plus cosine similarity.

mod cache;
mod http;
mod trigram;

pub use cache::CachingProvider;
pub use http::{HttpEmbeddingProvider, HttpProviderConfig};
pub use trigram::TrigramProvider;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EmbedError {
    #[error("cannot embed empty text")]
    EmptyText,
    #[error("embedding provider `{provider}` unavailable: {reason}")]
    ProviderUnavailable { provider: String, reason: String },
    #[error("malformed response from embedding provider `{provider}`: {reason}")]
    MalformedResponse { provider: String, reason: String },
    #[error("vector dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("vectors come from different providers: `{left}` vs `{right}`")]
    ProviderMismatch { left: String, right: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingVector {
    pub values: Vec<f64>,
    pub provider_id: String,
}

impl EmbeddingVector {
    pub fn dimension(&self) -> usize {
        self.values.len()
    }

    pub fn norm(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Scales `values` to unit length. All-zero vectors stay zero.
pub fn l2_normalize(values: &mut [f64]) {
    let norm = values.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 && norm.is_finite() {
        values.iter_mut().for_each(|v| *v /= norm);
    }
}

pub trait EmbeddingProvider: Send + Sync {
    /// Stable identifier; vectors from different ids are not comparable.
    fn id(&self) -> &str;

    fn dimension(&self) -> usize;

    /// One vector per input, in order. Any blank text fails the batch with
    /// [`EmbedError::EmptyText`].
    fn embed_batch(&self, texts: &[String]) -> Result<Vec<EmbeddingVector>, EmbedError>;

    fn embed(&self, text: &str) -> Result<EmbeddingVector, EmbedError> {
        let mut out = self.embed_batch(&[text.to_string()])?;
        out.pop().ok_or_else(|| EmbedError::MalformedResponse {
            provider: self.id().to_string(),
            reason: "no vector returned".into(),
        })
    }
}

pub(crate) fn reject_blank(texts: &[String]) -> Result<(), EmbedError> {
    match texts.iter().any(|t| t.trim().is_empty()) {
        true => Err(EmbedError::EmptyText),
        false => Ok(()),
    }
}

/// Cosine similarity clamped to `[-1, 1]`; 0 when either vector is zero.
pub fn cosine(a: &EmbeddingVector, b: &EmbeddingVector) -> Result<f64, EmbedError> {
    if a.provider_id != b.provider_id {
        return Err(EmbedError::ProviderMismatch { left: a.provider_id.clone(), right: b.provider_id.clone() });
    }
    if a.dimension() != b.dimension() {
        return Err(EmbedError::DimensionMismatch { left: a.dimension(), right: b.dimension() });
    }
    let (na, nb) = (a.norm(), b.norm());
    if na == 0.0 || nb == 0.0 {
        return Ok(0.0);
    }
    let dot: f64 = a.values.iter().zip(&b.values).map(|(x, y)| x * y).sum();
    Ok((dot / (na * nb)).clamp(-1.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(values: &[f64]) -> EmbeddingVector {
        EmbeddingVector { values: values.to_vec(), provider_id: "p".into() }
    }

    #[test]
    fn cosine_basics() {
        assert!((cosine(&v(&[1.0, 0.0]), &v(&[2.0, 0.0])).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(cosine(&v(&[1.0, 0.0]), &v(&[0.0, 3.0])).unwrap(), 0.0);
        assert!((cosine(&v(&[1.0, 1.0]), &v(&[-1.0, -1.0])).unwrap() + 1.0).abs() < 1e-12);
        assert_eq!(cosine(&v(&[0.0, 0.0]), &v(&[1.0, 0.0])).unwrap(), 0.0);
    }

    #[test]
    fn cosine_rejects_incomparable_vectors() {
        let other = EmbeddingVector { values: vec![1.0, 0.0], provider_id: "q".into() };
        assert!(matches!(cosine(&v(&[1.0, 0.0]), &other), Err(EmbedError::ProviderMismatch { .. })));
        assert!(matches!(cosine(&v(&[1.0]), &v(&[1.0, 0.0])), Err(EmbedError::DimensionMismatch { .. })));
    }

    proptest! {
        #[test]
        fn cosine_bounded_and_symmetric(
            a in prop::collection::vec(-1e6f64..1e6, 4),
            b in prop::collection::vec(-1e6f64..1e6, 4),
        ) {
            let (a, b) = (v(&a), v(&b));
            let ab = cosine(&a, &b).unwrap();
            prop_assert!((-1.0..=1.0).contains(&ab));
            prop_assert_eq!(ab, cosine(&b, &a).unwrap());
        }

        #[test]
        fn normalize_gives_unit_length(mut a in prop::collection::vec(-1e6f64..1e6, 1..16)) {
            l2_normalize(&mut a);
            let n = a.iter().map(|x| x * x).sum::<f64>().sqrt();
            prop_assert!(n == 0.0 || (n - 1.0).abs() < 1e-9);
        }
    }
}
