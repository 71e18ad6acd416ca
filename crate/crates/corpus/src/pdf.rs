//! Minimal PDF writer: Helvetica with WinAnsiEncoding and uniform glyph
//! widths, so text extents are exactly `0.5 · size` per character.

use lopdf::content::{Content, Operation};
use lopdf::{dictionary, Document, Object, Stream, StringFormat};

pub const PAGE_WIDTH: f64 = 612.0;
pub const PAGE_HEIGHT: f64 = 792.0;
pub const GLYPH_WIDTH: i64 = 500;

#[derive(Debug, Clone)]
pub struct Run {
    pub x: f64,
    pub text: String,
    /// Written as a TJ array with word gaps as kerning instead of spaces.
    pub kerned: bool,
}

#[derive(Debug, Clone)]
pub struct PdfLine {
    pub page: usize,
    /// Baseline, from the bottom of the page.
    pub y: f64,
    pub size: f64,
    pub runs: Vec<Run>,
}

pub fn text_width(text: &str, size: f64) -> f64 {
    text.chars().count() as f64 * size * GLYPH_WIDTH as f64 / 1000.0
}

/// Kerning that stands in for a space in TJ arrays, in thousandths of an
/// em; wide enough for extractors to read it as a word gap.
pub const KERN_SPACE: i64 = -300;

fn winansi(c: char) -> u8 {
    const HIGH: &[(char, u8)] = &[
        ('€', 0x80),
        ('‚', 0x82),
        ('„', 0x84),
        ('…', 0x85),
        ('‰', 0x89),
        ('Š', 0x8A),
        ('Œ', 0x8C),
        ('‘', 0x91),
        ('’', 0x92),
        ('“', 0x93),
        ('”', 0x94),
        ('•', 0x95),
        ('–', 0x96),
        ('—', 0x97),
        ('™', 0x99),
        ('š', 0x9A),
        ('œ', 0x9C),
        ('Ÿ', 0x9F),
    ];
    match c as u32 {
        0x20..=0x7E | 0xA0..=0xFF => c as u8,
        _ => HIGH.iter().find(|(h, _)| *h == c).map(|(_, b)| *b).unwrap_or_else(|| panic!("{c:?} not in WinAnsi")),
    }
}

fn encode(text: &str) -> Object {
    Object::String(text.chars().map(winansi).collect(), StringFormat::Literal)
}

fn show(run: &Run) -> Operation {
    if run.kerned {
        let mut items = Vec::new();
        for (i, word) in run.text.split(' ').enumerate() {
            if i > 0 {
                items.push(Object::Integer(KERN_SPACE));
            }
            items.push(encode(word));
        }
        Operation::new("TJ", vec![Object::Array(items)])
    } else {
        Operation::new("Tj", vec![encode(&run.text)])
    }
}

pub fn write_pdf(lines: &[PdfLine], pages: usize) -> Vec<u8> {
    let mut doc = Document::with_version("1.5");
    let pages_id = doc.new_object_id();
    let font_id = doc.add_object(dictionary! {
        "Type" => "Font",
        "Subtype" => "Type1",
        "BaseFont" => "Helvetica",
        "Encoding" => "WinAnsiEncoding",
        "FirstChar" => 32,
        "LastChar" => 255,
        "Widths" => vec![Object::Integer(GLYPH_WIDTH); 224],
    });
    let resources_id = doc.add_object(dictionary! {
        "Font" => dictionary! { "F1" => font_id },
    });

    let mut kids = Vec::new();
    for page in 0..pages {
        let mut ops = Vec::new();
        for line in lines.iter().filter(|l| l.page == page) {
            for run in &line.runs {
                ops.push(Operation::new("BT", vec![]));
                ops.push(Operation::new("Tf", vec!["F1".into(), line.size.into()]));
                ops.push(Operation::new("Td", vec![run.x.into(), line.y.into()]));
                ops.push(show(run));
                ops.push(Operation::new("ET", vec![]));
            }
        }
        let content = Content { operations: ops }.encode().expect("content encodes");
        let content_id = doc.add_object(Stream::new(dictionary! {}, content));
        let page_id = doc.add_object(dictionary! {
            "Type" => "Page",
            "Parent" => pages_id,
            "Contents" => content_id,
            "Resources" => resources_id,
            "MediaBox" => vec![0.into(), 0.into(), PAGE_WIDTH.into(), PAGE_HEIGHT.into()],
        });
        kids.push(Object::Reference(page_id));
    }
    let count = kids.len() as i64;
    doc.objects
        .insert(pages_id, Object::Dictionary(dictionary! { "Type" => "Pages", "Kids" => kids, "Count" => count }));
    let catalog_id = doc.add_object(dictionary! { "Type" => "Catalog", "Pages" => pages_id });
    doc.trailer.set("Root", catalog_id);

    let mut out = Vec::new();
    doc.save_to(&mut out).expect("in-memory write");
    out
}
