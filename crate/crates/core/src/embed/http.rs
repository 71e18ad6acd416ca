use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::{l2_normalize, reject_blank, EmbedError, EmbeddingProvider, EmbeddingVector};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HttpProviderConfig {
    /// URL accepting `POST {"model": .., "texts": [..]}` and answering
    /// `{"vectors": [[..], ..], "dim": n}` (`dim` optional).
    pub endpoint: String,
    /// Sent to the server and used as the provider id.
    pub model: String,
    pub dimension: usize,
    pub timeout_ms: u64,
    pub batch_size: usize,
}

impl Default for HttpProviderConfig {
    fn default() -> Self {
        Self {
            endpoint: "http://127.0.0.1:8081/embed".into(),
            model: "remote-384".into(),
            dimension: 384,
            timeout_ms: 5_000,
            batch_size: 128,
        }
    }
}

#[derive(Serialize)]
struct Request<'a> {
    model: &'a str,
    texts: &'a [String],
}

#[derive(Deserialize)]
struct Response {
    vectors: Vec<Vec<f64>>,
    dim: Option<usize>,
}

/// Remote embedding service over HTTP/JSON. Returned vectors are
/// normalized to unit length.
pub struct HttpEmbeddingProvider {
    config: HttpProviderConfig,
    agent: ureq::Agent,
}

impl HttpEmbeddingProvider {
    pub fn new(config: HttpProviderConfig) -> Self {
        let agent =
            ureq::Agent::config_builder().timeout_global(Some(Duration::from_millis(config.timeout_ms))).build().into();
        Self { config, agent }
    }

    pub fn config(&self) -> &HttpProviderConfig {
        &self.config
    }

    fn unavailable(&self, reason: impl ToString) -> EmbedError {
        EmbedError::ProviderUnavailable { provider: self.config.model.clone(), reason: reason.to_string() }
    }

    fn malformed(&self, reason: impl ToString) -> EmbedError {
        EmbedError::MalformedResponse { provider: self.config.model.clone(), reason: reason.to_string() }
    }

    fn request(&self, texts: &[String]) -> Result<Vec<EmbeddingVector>, EmbedError> {
        let mut response = self
            .agent
            .post(&self.config.endpoint)
            .send_json(Request { model: &self.config.model, texts })
            .map_err(|e| self.unavailable(e))?;
        let body: Response = response.body_mut().read_json().map_err(|e| match e {
            ureq::Error::Json(e) => self.malformed(e),
            other => self.unavailable(other),
        })?;
        if body.dim.is_some_and(|d| d != self.config.dimension) {
            return Err(self.malformed(format!("dim {:?}, expected {}", body.dim, self.config.dimension)));
        }
        if body.vectors.len() != texts.len() {
            return Err(self.malformed(format!("{} vectors for {} texts", body.vectors.len(), texts.len())));
        }
        body.vectors
            .into_iter()
            .map(|mut values| {
                if values.len() != self.config.dimension {
                    return Err(self.malformed(format!(
                        "vector of dimension {}, expected {}",
                        values.len(),
                        self.config.dimension
                    )));
                }
                if values.iter().any(|v| !v.is_finite()) {
                    return Err(self.malformed("non-finite component"));
                }
                l2_normalize(&mut values);
                Ok(EmbeddingVector { values, provider_id: self.config.model.clone() })
            })
            .collect()
    }
}

impl EmbeddingProvider for HttpEmbeddingProvider {
    fn id(&self) -> &str {
        &self.config.model
    }

    fn dimension(&self) -> usize {
        self.config.dimension
    }

    fn embed_batch(&self, texts: &[String]) -> Result<Vec<EmbeddingVector>, EmbedError> {
        reject_blank(texts)?;
        let mut out = Vec::with_capacity(texts.len());
        for chunk in texts.chunks(self.config.batch_size.max(1)) {
            out.extend(self.request(chunk)?);
        }
        Ok(out)
    }
}
