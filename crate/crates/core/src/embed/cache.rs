use std::collections::HashMap;
use std::sync::Mutex;

use super::{EmbedError, EmbeddingProvider, EmbeddingVector};

/// Memoizes another provider's vectors by exact text.
pub struct CachingProvider<P> {
    inner: P,
    cache: Mutex<HashMap<String, EmbeddingVector>>,
}

impl<P: EmbeddingProvider> CachingProvider<P> {
    pub fn new(inner: P) -> Self {
        Self { inner, cache: Mutex::new(HashMap::new()) }
    }

    pub fn inner(&self) -> &P {
        &self.inner
    }

    pub fn cached(&self) -> usize {
        self.cache.lock().unwrap_or_else(|e| e.into_inner()).len()
    }
}

impl<P: EmbeddingProvider> EmbeddingProvider for CachingProvider<P> {
    fn id(&self) -> &str {
        self.inner.id()
    }

    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    fn embed_batch(&self, texts: &[String]) -> Result<Vec<EmbeddingVector>, EmbedError> {
        let missing: Vec<String> = {
            let cache = self.cache.lock().unwrap_or_else(|e| e.into_inner());
            let mut missing: Vec<String> = texts.iter().filter(|t| !cache.contains_key(*t)).cloned().collect();
            missing.sort();
            missing.dedup();
            missing
        };
        if !missing.is_empty() {
            let fresh = self.inner.embed_batch(&missing)?;
            let mut cache = self.cache.lock().unwrap_or_else(|e| e.into_inner());
            cache.extend(missing.into_iter().zip(fresh));
        }
        let cache = self.cache.lock().unwrap_or_else(|e| e.into_inner());
        texts
            .iter()
            .map(|t| {
                cache.get(t).cloned().ok_or_else(|| EmbedError::MalformedResponse {
                    provider: self.inner.id().to_string(),
                    reason: "fewer vectors than texts".into(),
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::TrigramProvider;
    use std::sync::atomic::{AtomicUsize, Ordering};

    struct Counting(AtomicUsize);

    impl EmbeddingProvider for Counting {
        fn id(&self) -> &str {
            "counting"
        }
        fn dimension(&self) -> usize {
            TrigramProvider.dimension()
        }
        fn embed_batch(&self, texts: &[String]) -> Result<Vec<EmbeddingVector>, EmbedError> {
            self.0.fetch_add(texts.len(), Ordering::SeqCst);
            TrigramProvider.embed_batch(texts)
        }
    }

    #[test]
    fn each_text_embedded_once() {
        let p = CachingProvider::new(Counting(AtomicUsize::new(0)));
        let texts: Vec<String> = ["python", "sql", "python"].map(String::from).to_vec();
        let first = p.embed_batch(&texts).unwrap();
        let second = p.embed_batch(&texts).unwrap();
        assert_eq!(first, second);
        assert_eq!(first[0], first[2]);
        assert_eq!(p.inner().0.load(Ordering::SeqCst), 2);
        assert_eq!(p.cached(), 2);
    }
}
