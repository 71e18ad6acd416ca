//! Integration point for layout services and OCR engines that run outside
//! this crate. They hand back a JSON array of `{page, bbox, text}` objects,
//! which replaces native extraction for that document.

use serde::{Deserialize, Serialize};

use super::{BBox, IngestError, SourceDocument, TextBlock};

/// Anything able to turn a source document into positioned blocks.
pub trait LayoutProvider: Send + Sync {
    fn name(&self) -> &str;
    fn extract(&self, doc: &SourceDocument) -> Result<Vec<TextBlock>, IngestError>;
}

/// Wire format of one provider block.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProvidedBlock {
    pub page: usize,
    pub bbox: [f64; 4],
    pub text: String,
}

/// Reads the document bytes as an already extracted JSON block list.
#[derive(Debug, Default, Clone, Copy)]
pub struct JsonBlockProvider;

impl LayoutProvider for JsonBlockProvider {
    fn name(&self) -> &str {
        "json-blocks"
    }

    fn extract(&self, doc: &SourceDocument) -> Result<Vec<TextBlock>, IngestError> {
        let provided: Vec<ProvidedBlock> =
            serde_json::from_slice(doc.bytes()).map_err(|e| IngestError::malformed(doc.id(), e))?;
        let mut blocks = Vec::with_capacity(provided.len());
        for (i, block) in provided.into_iter().enumerate() {
            if block.text.trim().is_empty() {
                continue;
            }
            let bbox = BBox::from(block.bbox);
            if !bbox.is_valid() {
                return Err(IngestError::malformed(doc.id(), format!("block {i} has a degenerate bbox")));
            }
            blocks.push(TextBlock::new(block.page, bbox, block.text));
        }
        Ok(blocks)
    }
}
