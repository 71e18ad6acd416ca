//! Document ingestion: raw resume files to positioned text blocks and a
//! normalized text stream in reading order.

mod layout;
mod normalize;
mod pdf;
mod provider;

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use layout::{
    arrange_blocks, assign_columns, detect_columns, order_blocks, ColumnAssignment, MIN_GUTTER_COVERAGE,
    MIN_GUTTER_WIDTH,
};
pub use normalize::{normalize_text, NormalizedText};
pub use provider::{JsonBlockProvider, LayoutProvider, ProvidedBlock};

/// Row height used when synthesizing bounding boxes for plain-text lines.
pub const PLAIN_TEXT_LINE_HEIGHT: f64 = 12.0;
/// Page width used for plain-text rows (US Letter).
pub const PLAIN_TEXT_PAGE_WIDTH: f64 = 612.0;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("malformed document `{id}`: {reason}")]
    MalformedDocument { id: String, reason: String },
    #[error("document `{id}` has no extractable text")]
    EmptyDocument { id: String },
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl IngestError {
    pub(crate) fn malformed(id: &str, reason: impl fmt::Display) -> Self {
        Self::MalformedDocument { id: id.to_string(), reason: reason.to_string() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DocumentKind {
    PdfText,
    PlainText,
    /// Pre-extracted block list in the provider JSON format.
    ExternalProvider,
}

#[derive(Debug, Clone)]
pub struct SourceDocument {
    id: String,
    bytes: Vec<u8>,
    kind: DocumentKind,
}

const PDF_MAGIC: &[u8] = b"%PDF-";

impl SourceDocument {
    /// Builds a document after checking that the bytes agree with `kind`.
    pub fn new(id: impl Into<String>, bytes: Vec<u8>, kind: DocumentKind) -> Result<Self, IngestError> {
        let id = id.into();
        match kind {
            DocumentKind::PdfText if !bytes.starts_with(PDF_MAGIC) => {
                return Err(IngestError::malformed(&id, "missing %PDF- header"));
            }
            DocumentKind::PlainText if std::str::from_utf8(&bytes).is_err() => {
                return Err(IngestError::malformed(&id, "plain text is not valid UTF-8"));
            }
            _ => {}
        }
        Ok(Self { id, bytes, kind })
    }

    /// Sniffs the kind from content: PDF magic, otherwise UTF-8 text.
    pub fn detect(id: impl Into<String>, bytes: Vec<u8>) -> Result<Self, IngestError> {
        let kind = if bytes.starts_with(PDF_MAGIC) { DocumentKind::PdfText } else { DocumentKind::PlainText };
        Self::new(id, bytes, kind)
    }

    /// Reads a file; `.json` files are treated as provider block lists.
    pub fn from_path(path: &Path) -> Result<Self, IngestError> {
        let bytes =
            std::fs::read(path).map_err(|source| IngestError::Io { path: path.display().to_string(), source })?;
        let id =
            path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_else(|| path.display().to_string());
        let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
        if is_json {
            Self::new(id, bytes, DocumentKind::ExternalProvider)
        } else {
            Self::detect(id, bytes)
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn kind(&self) -> DocumentKind {
        self.kind
    }
}

/// Axis-aligned box in points, origin at the top-left of the page.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct BBox {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl BBox {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Self {
        Self { x0, y0, x1, y1 }
    }

    pub fn is_valid(&self) -> bool {
        self.x0 < self.x1 && self.y0 < self.y1 && [self.x0, self.y0, self.x1, self.y1].iter().all(|v| v.is_finite())
    }

    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> f64 {
        self.y1 - self.y0
    }
}

impl From<[f64; 4]> for BBox {
    fn from([x0, y0, x1, y1]: [f64; 4]) -> Self {
        Self { x0, y0, x1, y1 }
    }
}

impl From<BBox> for [f64; 4] {
    fn from(b: BBox) -> Self {
        [b.x0, b.y0, b.x1, b.y1]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TextBlock {
    pub page: usize,
    pub bbox: BBox,
    pub text: String,
    /// Reading-order rank; `None` until [`order_blocks`] runs.
    #[serde(default)]
    pub order: Option<usize>,
}

impl TextBlock {
    pub fn new(page: usize, bbox: BBox, text: impl Into<String>) -> Self {
        Self { page, bbox, text: text.into(), order: None }
    }
}

/// Converts a document into unordered positioned text blocks.
pub fn extract_blocks(doc: &SourceDocument) -> Result<Vec<TextBlock>, IngestError> {
    let blocks = match doc.kind {
        DocumentKind::PlainText => plain_text_blocks(doc)?,
        DocumentKind::PdfText => pdf::extract_pdf_blocks(&doc.id, &doc.bytes)?,
        DocumentKind::ExternalProvider => JsonBlockProvider.extract(doc)?,
    };
    if blocks.is_empty() {
        return Err(IngestError::EmptyDocument { id: doc.id.clone() });
    }
    Ok(blocks)
}

fn plain_text_blocks(doc: &SourceDocument) -> Result<Vec<TextBlock>, IngestError> {
    let text = std::str::from_utf8(&doc.bytes).map_err(|e| IngestError::malformed(&doc.id, e))?;
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let blocks = text
        .lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(row, line)| {
            let y0 = row as f64 * PLAIN_TEXT_LINE_HEIGHT;
            let bbox = BBox::new(0.0, y0, PLAIN_TEXT_PAGE_WIDTH, y0 + PLAIN_TEXT_LINE_HEIGHT);
            TextBlock::new(0, bbox, line.trim_end())
        })
        .collect();
    Ok(blocks)
}

/// Full front half of the pipeline: extract, order, and normalize.
#[derive(Debug, Clone)]
pub struct IngestedDocument {
    pub id: String,
    pub blocks: Vec<TextBlock>,
    pub text: NormalizedText,
}

pub fn ingest(doc: &SourceDocument) -> Result<IngestedDocument, IngestError> {
    let blocks = arrange_blocks(extract_blocks(doc)?);
    let joined = blocks.iter().map(|b| b.text.as_str()).collect::<Vec<_>>().join("\n");
    Ok(IngestedDocument { id: doc.id.clone(), blocks, text: normalize_text(&joined) })
}
