use std::collections::HashMap;

use super::{l2_normalize, reject_blank, EmbedError, EmbeddingProvider, EmbeddingVector};
use crate::fuzzy::fold;

pub const TRIGRAM_DIMENSION: usize = 256;
const BOUNDARY: char = '#';
const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(FNV_OFFSET, |h, b| (h ^ u64::from(*b)).wrapping_mul(FNV_PRIME))
}

/// Local, deterministic embedding: hashed character trigrams of the folded
/// text, padded with `#`, weighted `ln(1 + count)` and L2-normalized.
///
/// Captures spelling overlap only, so "Node.js" and "NodeJS" are close but
/// "ML" and "machine learning" are not.
#[derive(Debug, Clone, Copy, Default)]
pub struct TrigramProvider;

impl TrigramProvider {
    pub const ID: &'static str = "trigram-fnv1a-256";

    pub fn vector(text: &str) -> Vec<f64> {
        let padded: Vec<char> =
            std::iter::once(BOUNDARY).chain(fold(text).chars()).chain(std::iter::once(BOUNDARY)).collect();
        let mut counts: HashMap<usize, u32> = HashMap::new();
        for w in padded.windows(3) {
            let gram: String = w.iter().collect();
            *counts.entry((fnv1a(gram.as_bytes()) % TRIGRAM_DIMENSION as u64) as usize).or_default() += 1;
        }
        let mut values = vec![0.0; TRIGRAM_DIMENSION];
        for (bucket, count) in counts {
            values[bucket] = f64::from(count).ln_1p();
        }
        l2_normalize(&mut values);
        values
    }
}

impl EmbeddingProvider for TrigramProvider {
    fn id(&self) -> &str {
        Self::ID
    }

    fn dimension(&self) -> usize {
        TRIGRAM_DIMENSION
    }

    fn embed_batch(&self, texts: &[String]) -> Result<Vec<EmbeddingVector>, EmbedError> {
        reject_blank(texts)?;
        Ok(texts
            .iter()
            .map(|t| EmbeddingVector { values: Self::vector(t), provider_id: Self::ID.to_string() })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::cosine;
    use crate::extract::SkillLexicon;

    #[test]
    fn fnv_reference_values() {
        assert_eq!(fnv1a(b""), 0xcbf29ce484222325);
        assert_eq!(fnv1a(b"a"), 0xaf63dc4c8601ec8c);
        assert_eq!(fnv1a(b"foobar"), 0x85944171f73967e8);
    }

    #[test]
    fn golden_vector_for_short_text() {
        // "Go" folds to "go"; trigrams "#go" and "go#", one each.
        let v = TrigramProvider::vector("Go");
        let b1 = (fnv1a(b"#go") % 256) as usize;
        let b2 = (fnv1a(b"go#") % 256) as usize;
        let nonzero: Vec<usize> = (0..256).filter(|i| v[*i] != 0.0).collect();
        if b1 == b2 {
            assert_eq!(nonzero, [b1]);
            assert!((v[b1] - 1.0).abs() < 1e-12);
        } else {
            let mut expected = vec![b1, b2];
            expected.sort();
            assert_eq!(nonzero, expected);
            assert!((v[b1] - 0.5f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn case_and_accent_insensitive() {
        assert_eq!(TrigramProvider::vector("Réseaux"), TrigramProvider::vector("RESEAUX"));
    }

    #[test]
    fn blank_text_is_rejected() {
        assert!(matches!(TrigramProvider.embed("  "), Err(EmbedError::EmptyText)));
    }

    #[test]
    fn unit_norm_and_dimension() {
        let v = TrigramProvider.embed("Kubernetes").unwrap();
        assert_eq!(v.dimension(), TRIGRAM_DIMENSION);
        assert!((v.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn distinct_lexicon_skills_stay_apart() {
        let lex = SkillLexicon::bundled();
        let vectors: Vec<(String, EmbeddingVector)> =
            lex.entries().iter().map(|e| (e.canonical.clone(), TrigramProvider.embed(&e.canonical).unwrap())).collect();
        for (i, (a, va)) in vectors.iter().enumerate() {
            for (b, vb) in &vectors[i + 1..] {
                if crate::fuzzy::fold(a) != crate::fuzzy::fold(b) {
                    assert!(cosine(va, vb).unwrap() < 0.999, "{a} vs {b}");
                }
            }
        }
    }
}
