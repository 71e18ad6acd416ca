//! Places rendered lines on PDF pages.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::pdf::{text_width, PdfLine, Run, PAGE_HEIGHT};
use crate::render::{Block, Kind, Line};

const TOP: f64 = PAGE_HEIGHT - 48.0;
const BOTTOM: f64 = 56.0;
const MARGIN: f64 = 56.0;
const SIDEBAR_X: f64 = 40.0;
const MAIN_X: f64 = 320.0;
/// Column widths in characters of body text.
pub const SIDEBAR_CHARS: usize = 40;
pub const MAIN_CHARS: usize = 50;

/// Expected reading order of one page.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageGold {
    pub column_count: usize,
    pub lines: Vec<String>,
}

fn size(kind: Kind) -> f64 {
    match kind {
        Kind::Name => 16.0,
        Kind::Header => 12.0,
        Kind::Body => 10.0,
    }
}

fn runs<R: Rng>(rng: &mut R, line: &Line, x: f64, size: f64) -> Vec<Run> {
    match line.split {
        Some(at) => {
            let (label, value) = line.text.split_at(at);
            vec![
                Run { x, text: label.trim_end().to_string(), kerned: false },
                Run { x: x + text_width(label, size), text: value.to_string(), kerned: false },
            ]
        }
        None => {
            let kerned = line.kind == Kind::Body && line.text.contains(' ') && rng.gen_bool(0.15);
            vec![Run { x, text: line.text.clone(), kerned }]
        }
    }
}

struct Cursor {
    page: usize,
    y: f64,
}

impl Cursor {
    fn advance(&mut self, line: &Line, first_in_block: bool, paginate: bool) -> (usize, f64, f64) {
        let size = size(line.kind);
        let gap = if first_in_block { 8.0 } else { 0.0 };
        if paginate && self.y - size * 1.4 - gap < BOTTOM {
            self.page += 1;
            self.y = TOP;
        }
        self.y -= size * 1.4 + gap;
        (self.page, self.y, size)
    }
}

/// One column, paginated top to bottom.
pub fn single_column<R: Rng>(rng: &mut R, blocks: &[Block]) -> (Vec<PdfLine>, Vec<PageGold>) {
    let mut cursor = Cursor { page: 0, y: TOP };
    let mut lines = Vec::new();
    let mut gold: Vec<PageGold> = Vec::new();
    for block in blocks {
        for (i, line) in block.lines.iter().enumerate() {
            let (page, y, size) = cursor.advance(line, i == 0, true);
            lines.push(PdfLine { page, y, size, runs: runs(rng, line, MARGIN, size) });
            if gold.len() <= page {
                gold.push(PageGold { column_count: 1, lines: Vec::new() });
            }
            gold[page].lines.push(line.text.clone());
        }
    }
    (lines, gold)
}

/// Sidebar blocks on the left, the rest on the right, one page.
pub fn two_column<R: Rng>(rng: &mut R, blocks: &[Block]) -> (Vec<PdfLine>, Vec<PageGold>) {
    let mut lines = Vec::new();
    let mut page = PageGold { column_count: 2, lines: Vec::new() };
    for sidebar in [true, false] {
        let mut cursor = Cursor { page: 0, y: TOP };
        let x = if sidebar { SIDEBAR_X } else { MAIN_X };
        for block in blocks.iter().filter(|b| b.sidebar == sidebar) {
            for (i, line) in block.lines.iter().enumerate() {
                let (_, y, size) = cursor.advance(line, i == 0, false);
                assert!(y > BOTTOM / 2.0, "two-column resume overflows the page");
                lines.push(PdfLine { page: 0, y, size, runs: runs(rng, line, x, size) });
                page.lines.push(line.text.clone());
            }
        }
    }
    (lines, vec![page])
}
