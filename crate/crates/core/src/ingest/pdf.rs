//! Text extraction from text-based PDFs.
//!
//! Content streams are interpreted just far enough to know where each text
//! showing operator lands on the page: graphics state (`q`/`Q`/`cm`), text
//! state (`Tf`, `Tc`, `Tw`, `Tz`, `TL`, `Ts`, `Tr`) and text positioning
//! (`Td`, `TD`, `Tm`, `T*`). Glyph advances come from the font's `Widths`
//! (simple fonts) or `W` (CID fonts). Runs sharing a baseline and separated
//! by less than an em are merged into one block.

use std::collections::HashMap;

use lopdf::content::Content;
use lopdf::{Dictionary, Document, Encoding, Object, ObjectId};
use tracing::debug;

use super::{BBox, IngestError, TextBlock};

/// Glyph box above the baseline, as a fraction of the font size.
pub(crate) const ASCENT: f64 = 0.8;
/// Glyph box below the baseline, as a fraction of the font size.
pub(crate) const DESCENT: f64 = 0.2;
const DEFAULT_GLYPH_WIDTH: f64 = 500.0;
const DEFAULT_PAGE_HEIGHT: f64 = 792.0;
/// Largest horizontal gap, in ems, bridged when merging runs.
const MERGE_GAP_EM: f64 = 1.0;
/// Gaps wider than this, in ems, become a space in the merged text.
const SPACE_GAP_EM: f64 = 0.15;
/// `TJ` adjustments wider than this, in ems, become a space.
const TJ_SPACE_EM: f64 = 0.2;

#[derive(Debug, Clone, Copy, PartialEq)]
struct Matrix([f64; 6]);

impl Matrix {
    const IDENTITY: Matrix = Matrix([1.0, 0.0, 0.0, 1.0, 0.0, 0.0]);

    fn translate(tx: f64, ty: f64) -> Matrix {
        Matrix([1.0, 0.0, 0.0, 1.0, tx, ty])
    }

    /// `self × other` in PDF's row-vector convention.
    fn then(self, other: Matrix) -> Matrix {
        let [a, b, c, d, e, f] = self.0;
        let [a2, b2, c2, d2, e2, f2] = other.0;
        Matrix([
            a * a2 + b * c2,
            a * b2 + b * d2,
            c * a2 + d * c2,
            c * b2 + d * d2,
            e * a2 + f * c2 + e2,
            e * b2 + f * d2 + f2,
        ])
    }

    fn apply(self, x: f64, y: f64) -> (f64, f64) {
        let [a, b, c, d, e, f] = self.0;
        (x * a + y * c + e, x * b + y * d + f)
    }

    fn vertical_scale(self) -> f64 {
        let [_, _, c, d, _, _] = self.0;
        (c * c + d * d).sqrt()
    }
}

struct Font<'a> {
    encoding: Option<Encoding<'a>>,
    two_byte: bool,
    first_char: u32,
    widths: Vec<f64>,
    cid_widths: HashMap<u32, f64>,
    default_width: f64,
}

impl<'a> Font<'a> {
    fn load(doc: &'a Document, dict: &'a Dictionary) -> Font<'a> {
        let two_byte = dict.get(b"Subtype").and_then(Object::as_name).is_ok_and(|s| s == b"Type0");
        let encoding = dict.get_font_encoding(doc).ok();
        let mut font = Font {
            encoding,
            two_byte,
            first_char: 0,
            widths: Vec::new(),
            cid_widths: HashMap::new(),
            default_width: DEFAULT_GLYPH_WIDTH,
        };
        if two_byte {
            font.load_cid_widths(doc, dict);
        } else {
            font.first_char = deref(doc, dict.get(b"FirstChar").ok()).and_then(as_number).unwrap_or(0.0) as u32;
            if let Some(Object::Array(ws)) = deref(doc, dict.get(b"Widths").ok()) {
                font.widths = ws.iter().map(|w| deref(doc, Some(w)).and_then(as_number).unwrap_or(0.0)).collect();
            }
            let missing = deref(doc, dict.get(b"FontDescriptor").ok())
                .and_then(|d| d.as_dict().ok())
                .and_then(|d| deref(doc, d.get(b"MissingWidth").ok()))
                .and_then(as_number);
            if let Some(w) = missing.filter(|w| *w > 0.0) {
                font.default_width = w;
            }
        }
        font
    }

    fn load_cid_widths(&mut self, doc: &Document, dict: &Dictionary) {
        self.default_width = 1000.0;
        let Some(Object::Array(descendants)) = deref(doc, dict.get(b"DescendantFonts").ok()) else {
            return;
        };
        let Some(cid_font) = deref(doc, descendants.first()).and_then(|o| o.as_dict().ok()) else {
            return;
        };
        if let Some(dw) = deref(doc, cid_font.get(b"DW").ok()).and_then(as_number) {
            self.default_width = dw;
        }
        let Some(Object::Array(w)) = deref(doc, cid_font.get(b"W").ok()) else {
            return;
        };
        let items: Vec<&Object> = w.iter().filter_map(|o| deref(doc, Some(o))).collect();
        let mut i = 0;
        while i + 1 < items.len() {
            let Some(first) = as_number(items[i]) else { break };
            let first = first as u32;
            match items[i + 1] {
                Object::Array(list) => {
                    for (k, width) in list.iter().enumerate() {
                        if let Some(width) = deref(doc, Some(width)).and_then(as_number) {
                            self.cid_widths.insert(first + k as u32, width);
                        }
                    }
                    i += 2;
                }
                other => {
                    let (Some(last), Some(width)) = (as_number(other), items.get(i + 2).and_then(|o| as_number(o)))
                    else {
                        break;
                    };
                    for cid in first..=last as u32 {
                        self.cid_widths.insert(cid, width);
                    }
                    i += 3;
                }
            }
        }
    }

    fn codes(&self, bytes: &[u8]) -> Vec<u32> {
        if self.two_byte {
            bytes.chunks(2).map(|c| c.iter().fold(0u32, |acc, b| acc * 256 + u32::from(*b))).collect()
        } else {
            bytes.iter().map(|b| u32::from(*b)).collect()
        }
    }

    fn glyph_width(&self, code: u32) -> f64 {
        if self.two_byte {
            return self.cid_widths.get(&code).copied().unwrap_or(self.default_width);
        }
        code.checked_sub(self.first_char)
            .and_then(|i| self.widths.get(i as usize))
            .copied()
            .filter(|w| *w > 0.0)
            .unwrap_or(self.default_width)
    }

    fn decode(&self, bytes: &[u8]) -> String {
        self.encoding
            .as_ref()
            .and_then(|e| e.bytes_to_string(bytes).ok())
            .unwrap_or_else(|| bytes.iter().map(|&b| b as char).collect())
    }
}

fn deref<'a>(doc: &'a Document, obj: Option<&'a Object>) -> Option<&'a Object> {
    obj.and_then(|o| doc.dereference(o).ok()).map(|(_, o)| o)
}

fn as_number(obj: &Object) -> Option<f64> {
    match obj {
        Object::Integer(i) => Some(*i as f64),
        Object::Real(r) => Some(f64::from(*r)),
        _ => None,
    }
}

fn operand_numbers(ops: &[Object]) -> Vec<f64> {
    ops.iter().map(|o| as_number(o).unwrap_or(0.0)).collect()
}

/// One text-showing operation resolved to page coordinates (PDF origin).
#[derive(Debug, Clone)]
struct Run {
    x0: f64,
    x1: f64,
    baseline: f64,
    size: f64,
    text: String,
}

#[derive(Clone)]
struct GraphicsState {
    ctm: Matrix,
    char_spacing: f64,
    word_spacing: f64,
    h_scale: f64,
    leading: f64,
    rise: f64,
    render_mode: i64,
    font: Option<Vec<u8>>,
    font_size: f64,
}

impl Default for GraphicsState {
    fn default() -> Self {
        Self {
            ctm: Matrix::IDENTITY,
            char_spacing: 0.0,
            word_spacing: 0.0,
            h_scale: 1.0,
            leading: 0.0,
            rise: 0.0,
            render_mode: 0,
            font: None,
            font_size: 0.0,
        }
    }
}

struct PageInterpreter<'a> {
    doc: &'a Document,
    font_dicts: std::collections::BTreeMap<Vec<u8>, &'a Dictionary>,
    fonts: HashMap<Vec<u8>, Font<'a>>,
    gs: GraphicsState,
    stack: Vec<GraphicsState>,
    tm: Matrix,
    tlm: Matrix,
    runs: Vec<Run>,
}

enum ShowItem<'b> {
    Text(&'b [u8]),
    Adjust(f64),
}

impl<'a> PageInterpreter<'a> {
    fn new(doc: &'a Document, page_id: ObjectId) -> Self {
        Self {
            doc,
            font_dicts: doc.get_page_fonts(page_id).unwrap_or_default(),
            fonts: HashMap::new(),
            gs: GraphicsState::default(),
            stack: Vec::new(),
            tm: Matrix::IDENTITY,
            tlm: Matrix::IDENTITY,
            runs: Vec::new(),
        }
    }

    fn next_line(&mut self, tx: f64, ty: f64) {
        self.tlm = Matrix::translate(tx, ty).then(self.tlm);
        self.tm = self.tlm;
    }

    fn run(&mut self, content: &Content) {
        for op in &content.operations {
            let nums = || operand_numbers(&op.operands);
            match op.operator.as_str() {
                "q" => self.stack.push(self.gs.clone()),
                "Q" => {
                    if let Some(gs) = self.stack.pop() {
                        self.gs = gs;
                    }
                }
                "cm" => {
                    if let [a, b, c, d, e, f] = nums()[..] {
                        self.gs.ctm = Matrix([a, b, c, d, e, f]).then(self.gs.ctm);
                    }
                }
                "BT" => {
                    self.tm = Matrix::IDENTITY;
                    self.tlm = Matrix::IDENTITY;
                }
                "Tf" => {
                    if let [Object::Name(name), size] = &op.operands[..] {
                        self.gs.font = Some(name.clone());
                        self.gs.font_size = as_number(size).unwrap_or(0.0);
                    }
                }
                "Tc" => self.gs.char_spacing = nums().first().copied().unwrap_or(0.0),
                "Tw" => self.gs.word_spacing = nums().first().copied().unwrap_or(0.0),
                "Tz" => self.gs.h_scale = nums().first().copied().unwrap_or(100.0) / 100.0,
                "TL" => self.gs.leading = nums().first().copied().unwrap_or(0.0),
                "Ts" => self.gs.rise = nums().first().copied().unwrap_or(0.0),
                "Tr" => self.gs.render_mode = nums().first().copied().unwrap_or(0.0) as i64,
                "Td" => {
                    if let [tx, ty] = nums()[..] {
                        self.next_line(tx, ty);
                    }
                }
                "TD" => {
                    if let [tx, ty] = nums()[..] {
                        self.gs.leading = -ty;
                        self.next_line(tx, ty);
                    }
                }
                "Tm" => {
                    if let [a, b, c, d, e, f] = nums()[..] {
                        self.tlm = Matrix([a, b, c, d, e, f]);
                        self.tm = self.tlm;
                    }
                }
                "T*" => self.next_line(0.0, -self.gs.leading),
                "Tj" => {
                    if let Some(Object::String(bytes, _)) = op.operands.first() {
                        self.show(&[ShowItem::Text(bytes)]);
                    }
                }
                "'" => {
                    self.next_line(0.0, -self.gs.leading);
                    if let Some(Object::String(bytes, _)) = op.operands.first() {
                        self.show(&[ShowItem::Text(bytes)]);
                    }
                }
                "\"" => {
                    if let [aw, ac, Object::String(bytes, _)] = &op.operands[..] {
                        self.gs.word_spacing = as_number(aw).unwrap_or(0.0);
                        self.gs.char_spacing = as_number(ac).unwrap_or(0.0);
                        self.next_line(0.0, -self.gs.leading);
                        self.show(&[ShowItem::Text(bytes)]);
                    }
                }
                "TJ" => {
                    if let Some(Object::Array(items)) = op.operands.first() {
                        let items: Vec<ShowItem> = items
                            .iter()
                            .filter_map(|o| match o {
                                Object::String(bytes, _) => Some(ShowItem::Text(bytes)),
                                other => as_number(other).map(ShowItem::Adjust),
                            })
                            .collect();
                        self.show(&items);
                    }
                }
                "Do" => debug!("form XObjects are not interpreted"),
                _ => {}
            }
        }
    }

    fn font(&mut self) -> Option<&Font<'a>> {
        let name = self.gs.font.clone()?;
        if !self.fonts.contains_key(&name) {
            let dict = self.font_dicts.get(&name)?;
            self.fonts.insert(name.clone(), Font::load(self.doc, dict));
        }
        self.fonts.get(&name)
    }

    fn show(&mut self, items: &[ShowItem]) {
        let size = self.gs.font_size;
        let (cs, ws, th) = (self.gs.char_spacing, self.gs.word_spacing, self.gs.h_scale);
        let rise = self.gs.rise;
        let Some(font) = self.font() else {
            debug!("text shown without a usable font");
            return;
        };
        let mut text = String::new();
        let mut advance = 0.0;
        for item in items {
            match item {
                ShowItem::Text(bytes) => {
                    text.push_str(&font.decode(bytes));
                    for code in font.codes(bytes) {
                        let spacing = if !font.two_byte && code == 32 { ws } else { 0.0 };
                        advance += (font.glyph_width(code) / 1000.0 * size + cs + spacing) * th;
                    }
                }
                ShowItem::Adjust(n) => {
                    let shift = -n / 1000.0 * size * th;
                    if shift > TJ_SPACE_EM * size && !text.ends_with(' ') {
                        text.push(' ');
                    }
                    advance += shift;
                }
            }
        }
        let trm = self.tm.then(self.gs.ctm);
        let start = trm.apply(0.0, rise);
        self.tm = Matrix::translate(advance, 0.0).then(self.tm);
        let end = self.tm.then(self.gs.ctm).apply(0.0, rise);
        let effective_size = size * trm.vertical_scale();
        if self.gs.render_mode == 3 || effective_size <= 0.0 || text.trim().is_empty() {
            return;
        }
        self.runs.push(Run {
            x0: start.0.min(end.0),
            x1: start.0.max(end.0),
            baseline: start.1,
            size: effective_size,
            text,
        });
    }
}

fn page_box(doc: &Document, page_id: ObjectId) -> (f64, f64) {
    let mut node = doc.get_dictionary(page_id).ok();
    let mut hops = 0;
    while let Some(dict) = node {
        if let Some(Object::Array(mb)) = deref(doc, dict.get(b"MediaBox").ok()) {
            let v: Vec<f64> = mb.iter().filter_map(|o| deref(doc, Some(o)).and_then(as_number)).collect();
            if let [llx, lly, _, ury] = v[..] {
                return (llx, ury.max(lly));
            }
        }
        hops += 1;
        if hops > 32 {
            break;
        }
        node = dict.get(b"Parent").and_then(Object::as_reference).ok().and_then(|id| doc.get_dictionary(id).ok());
    }
    (0.0, DEFAULT_PAGE_HEIGHT)
}

fn merge_runs(page: usize, runs: Vec<Run>, left: f64, top: f64) -> Vec<TextBlock> {
    let mut merged: Vec<Run> = Vec::new();
    for run in runs {
        if let Some(cur) = merged.last_mut() {
            let em = cur.size.max(run.size);
            let gap = run.x0 - cur.x1;
            let same_line = (run.baseline - cur.baseline).abs() <= 0.25 * em;
            if same_line && gap >= -0.5 * em && gap <= MERGE_GAP_EM * em {
                if gap > SPACE_GAP_EM * em && !cur.text.ends_with(' ') && !run.text.starts_with(' ') {
                    cur.text.push(' ');
                }
                cur.text.push_str(&run.text);
                cur.x1 = cur.x1.max(run.x1);
                cur.x0 = cur.x0.min(run.x0);
                cur.size = em;
                continue;
            }
        }
        merged.push(run);
    }
    merged
        .into_iter()
        .filter_map(|run| {
            let text = run.text.trim();
            if text.is_empty() {
                return None;
            }
            let x1 = if run.x1 > run.x0 { run.x1 } else { run.x0 + 0.5 * run.size };
            let bbox = BBox::new(
                run.x0 - left,
                top - (run.baseline + ASCENT * run.size),
                x1 - left,
                top - (run.baseline - DESCENT * run.size),
            );
            Some(TextBlock::new(page, bbox, text))
        })
        .collect()
}

pub(crate) fn extract_pdf_blocks(id: &str, bytes: &[u8]) -> Result<Vec<TextBlock>, IngestError> {
    let doc = Document::load_mem(bytes).map_err(|e| IngestError::malformed(id, e))?;
    if doc.is_encrypted() {
        return Err(IngestError::malformed(id, "encrypted PDF"));
    }
    let mut blocks = Vec::new();
    for (index, (_, page_id)) in doc.get_pages().into_iter().enumerate() {
        let raw = doc.get_page_content(page_id).map_err(|e| IngestError::malformed(id, e))?;
        let content = Content::decode(&raw).map_err(|e| IngestError::malformed(id, e))?;
        let mut interpreter = PageInterpreter::new(&doc, page_id);
        interpreter.run(&content);
        let (left, top) = page_box(&doc, page_id);
        blocks.extend(merge_runs(index, interpreter.runs, left, top));
    }
    Ok(blocks)
}
