//! Column detection and reading order.
//!
//! A page is split into columns at vertical gutters: bands at least
//! [`MIN_GUTTER_WIDTH`] points wide that are free of text over at least
//! [`MIN_GUTTER_COVERAGE`] of the page's text height and have text on both
//! sides. Blocks that cross a gutter (a full-width name banner, say) only
//! eat into its coverage.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::TextBlock;

pub const MIN_GUTTER_WIDTH: f64 = 18.0;
pub const MIN_GUTTER_COVERAGE: f64 = 0.6;

/// Column index per block (parallel to the input slice) for one page.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnAssignment {
    pub columns: Vec<usize>,
    pub column_count: usize,
}

/// Length of the union of closed intervals.
fn union_length(mut spans: Vec<(f64, f64)>) -> f64 {
    spans.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut total = 0.0;
    let mut current: Option<(f64, f64)> = None;
    for (lo, hi) in spans {
        match current {
            Some((cl, ch)) if lo <= ch => current = Some((cl, ch.max(hi))),
            Some((cl, ch)) => {
                total += ch - cl;
                current = Some((lo, hi));
            }
            None => current = Some((lo, hi)),
        }
    }
    if let Some((cl, ch)) = current {
        total += ch - cl;
    }
    total
}

fn is_gutter(blocks: &[TextBlock], left: f64, text_height: f64) -> bool {
    let right = left + MIN_GUTTER_WIDTH;
    let mut has_left = false;
    let mut has_right = false;
    let mut crossing = Vec::new();
    for b in blocks {
        if b.bbox.x1 <= left {
            has_left = true;
        } else if b.bbox.x0 >= right {
            has_right = true;
        } else {
            crossing.push((b.bbox.y0, b.bbox.y1));
        }
    }
    if !(has_left && has_right) {
        return false;
    }
    let free = text_height - union_length(crossing);
    free >= MIN_GUTTER_COVERAGE * text_height
}

/// Clusters one page's blocks into columns, numbered left to right.
///
/// The set of blocks overlapping a candidate gutter only changes when the
/// gutter's left edge passes a block's right edge or its right edge reaches
/// a block's left edge, so those positions are the only ones probed.
pub fn detect_columns(blocks: &[TextBlock]) -> ColumnAssignment {
    if blocks.is_empty() {
        return ColumnAssignment { columns: Vec::new(), column_count: 0 };
    }
    let top = blocks.iter().map(|b| b.bbox.y0).fold(f64::INFINITY, f64::min);
    let bottom = blocks.iter().map(|b| b.bbox.y1).fold(f64::NEG_INFINITY, f64::max);
    let text_height = bottom - top;

    let mut probes: Vec<f64> = blocks.iter().flat_map(|b| [b.bbox.x1, b.bbox.x0 - MIN_GUTTER_WIDTH]).collect();
    probes.sort_by(f64::total_cmp);
    probes.dedup();

    let mut gutters: Vec<(f64, f64)> = Vec::new();
    for left in probes {
        if !is_gutter(blocks, left, text_height) {
            continue;
        }
        let right = left + MIN_GUTTER_WIDTH;
        match gutters.last_mut() {
            Some(last) if left <= last.1 => last.1 = last.1.max(right),
            _ => gutters.push((left, right)),
        }
    }
    let separators: Vec<f64> = gutters.iter().map(|(l, r)| (l + r) / 2.0).collect();

    let raw: Vec<usize> = blocks.iter().map(|b| separators.iter().filter(|&&s| s < b.bbox.x0).count()).collect();
    let mut used: Vec<usize> = raw.clone();
    used.sort_unstable();
    used.dedup();
    let columns = raw.iter().map(|c| used.binary_search(c).expect("column is in use")).collect();
    ColumnAssignment { columns, column_count: used.len() }
}

/// Runs [`detect_columns`] page by page; the result is parallel to `blocks`.
pub fn assign_columns(blocks: &[TextBlock]) -> Vec<usize> {
    let mut by_page: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, b) in blocks.iter().enumerate() {
        by_page.entry(b.page).or_default().push(i);
    }
    let mut columns = vec![0; blocks.len()];
    for indices in by_page.values() {
        let page_blocks: Vec<TextBlock> = indices.iter().map(|&i| blocks[i].clone()).collect();
        let assignment = detect_columns(&page_blocks);
        for (&i, &col) in indices.iter().zip(&assignment.columns) {
            columns[i] = col;
        }
    }
    columns
}

/// Sorts blocks by page, column, top edge, then left edge, and stamps
/// `order` with the resulting rank.
///
/// # Panics
///
/// If `columns` is not parallel to `blocks`.
pub fn order_blocks(blocks: Vec<TextBlock>, columns: &[usize]) -> Vec<TextBlock> {
    assert_eq!(blocks.len(), columns.len(), "column assignment must cover every block");
    let mut keyed: Vec<(usize, TextBlock)> = columns.iter().copied().zip(blocks).collect();
    keyed.sort_by(|(ca, a), (cb, b)| {
        a.page.cmp(&b.page).then(ca.cmp(cb)).then(a.bbox.y0.total_cmp(&b.bbox.y0)).then(a.bbox.x0.total_cmp(&b.bbox.x0))
    });
    keyed
        .into_iter()
        .enumerate()
        .map(|(rank, (_, mut block))| {
            block.order = Some(rank);
            block
        })
        .collect()
}

/// Column detection followed by ordering.
pub fn arrange_blocks(blocks: Vec<TextBlock>) -> Vec<TextBlock> {
    let columns = assign_columns(&blocks);
    order_blocks(blocks, &columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::BBox;
    use proptest::prelude::*;

    fn block(x0: f64, y0: f64, x1: f64, y1: f64, text: &str) -> TextBlock {
        TextBlock::new(0, BBox::new(x0, y0, x1, y1), text)
    }

    fn two_column_page() -> Vec<TextBlock> {
        let mut blocks = Vec::new();
        for i in 0..10 {
            let y = 50.0 + 20.0 * i as f64;
            blocks.push(block(40.0, y, 280.0, y + 12.0, &format!("L{i}")));
            blocks.push(block(330.0, y + 3.0, 570.0, y + 15.0, &format!("R{i}")));
        }
        blocks
    }

    #[test]
    fn single_column_without_gutter() {
        let blocks: Vec<_> =
            (0..5).map(|i| block(40.0, 10.0 * i as f64, 300.0 - 20.0 * i as f64, 10.0 * i as f64 + 8.0, "x")).collect();
        let cols = detect_columns(&blocks);
        assert_eq!(cols.column_count, 1);
        assert!(cols.columns.iter().all(|&c| c == 0));
    }

    #[test]
    fn two_columns_split_at_gutter() {
        let blocks = two_column_page();
        let cols = detect_columns(&blocks);
        assert_eq!(cols.column_count, 2);
        for (b, c) in blocks.iter().zip(&cols.columns) {
            assert_eq!(*c, usize::from(b.text.starts_with('R')));
        }
    }

    #[test]
    fn banner_crossing_gutter_keeps_two_columns() {
        let mut blocks = two_column_page();
        blocks.push(block(40.0, 10.0, 570.0, 30.0, "NAME"));
        let cols = detect_columns(&blocks);
        assert_eq!(cols.column_count, 2);
        assert_eq!(*cols.columns.last().unwrap(), 0);
    }

    #[test]
    fn narrow_gap_is_not_a_gutter() {
        let blocks = vec![block(40.0, 0.0, 290.0, 100.0, "a"), block(300.0, 0.0, 570.0, 100.0, "b")];
        assert_eq!(detect_columns(&blocks).column_count, 1);
    }

    #[test]
    fn short_gutter_is_not_a_gutter() {
        // Free band only over 50% of the text height.
        let blocks = vec![
            block(40.0, 0.0, 280.0, 100.0, "a"),
            block(330.0, 0.0, 570.0, 100.0, "b"),
            block(40.0, 100.0, 570.0, 200.0, "wide"),
        ];
        assert_eq!(detect_columns(&blocks).column_count, 1);
    }

    #[test]
    fn empty_page_has_no_columns() {
        assert_eq!(detect_columns(&[]), ColumnAssignment { columns: vec![], column_count: 0 });
    }

    #[test]
    fn single_column_sorted_by_top() {
        let blocks = vec![
            block(0.0, 10.0, 5.0, 12.0, "10"),
            block(0.0, 50.0, 5.0, 52.0, "50"),
            block(0.0, 30.0, 5.0, 32.0, "30"),
        ];
        let ordered = arrange_blocks(blocks);
        let texts: Vec<_> = ordered.iter().map(|b| b.text.as_str()).collect();
        assert_eq!(texts, ["10", "30", "50"]);
        assert_eq!(ordered.iter().map(|b| b.order.unwrap()).collect::<Vec<_>>(), [0, 1, 2]);
    }

    #[test]
    fn column_major_order() {
        let blocks = vec![
            block(330.0, 5.0, 570.0, 17.0, "C"),
            block(40.0, 40.0, 280.0, 52.0, "B"),
            block(40.0, 10.0, 280.0, 22.0, "A"),
        ];
        let ordered = order_blocks(blocks, &[1, 0, 0]);
        let texts: Vec<_> = ordered.iter().map(|b| b.text.as_str()).collect();
        assert_eq!(texts, ["A", "B", "C"]);
    }

    #[test]
    fn pages_ascend() {
        let mut late = block(0.0, 0.0, 10.0, 10.0, "p1");
        late.page = 1;
        let early = block(0.0, 500.0, 10.0, 510.0, "p0");
        let ordered = arrange_blocks(vec![late, early]);
        assert_eq!(ordered[0].text, "p0");
    }

    fn arb_blocks() -> impl Strategy<Value = Vec<TextBlock>> {
        prop::collection::vec((0i32..120, 0i32..160, 1i32..80, 1i32..8, 0usize..2), 0..30).prop_map(|v| {
            v.into_iter()
                .enumerate()
                .map(|(i, (x, y, w, h, page))| {
                    let (x, y) = (f64::from(x * 5), f64::from(y * 5));
                    let mut b = block(x, y, x + f64::from(w * 5), y + f64::from(h * 5), &format!("b{i}"));
                    b.page = page;
                    b
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn translation_invariant(blocks in arb_blocks(), dx in -300i32..300, dy in -300i32..300) {
            let moved: Vec<_> = blocks.iter().cloned().map(|mut b| {
                b.bbox = BBox::new(b.bbox.x0 + f64::from(dx), b.bbox.y0 + f64::from(dy),
                                   b.bbox.x1 + f64::from(dx), b.bbox.y1 + f64::from(dy));
                b
            }).collect();
            prop_assert_eq!(assign_columns(&blocks), assign_columns(&moved));
        }

        #[test]
        fn ordering_is_a_permutation(blocks in arb_blocks()) {
            let mut before: Vec<String> = blocks.iter().map(|b| b.text.clone()).collect();
            let ordered = arrange_blocks(blocks);
            let mut after: Vec<String> = ordered.iter().map(|b| b.text.clone()).collect();
            let ranks: Vec<usize> = ordered.iter().map(|b| b.order.unwrap()).collect();
            prop_assert_eq!(ranks, (0..ordered.len()).collect::<Vec<_>>());
            before.sort();
            after.sort();
            prop_assert_eq!(before, after);
        }

        #[test]
        fn columns_contiguous(blocks in arb_blocks()) {
            let page0: Vec<_> = blocks.into_iter().filter(|b| b.page == 0).collect();
            let cols = detect_columns(&page0);
            prop_assert_eq!(cols.columns.len(), page0.len());
            for c in 0..cols.column_count {
                prop_assert!(cols.columns.contains(&c));
            }
            prop_assert!(cols.columns.iter().all(|&c| c < cols.column_count.max(1)));
        }

        #[test]
        fn one_column_pages_sort_by_position(blocks in arb_blocks()) {
            let columns = vec![0; blocks.len()];
            let ordered = order_blocks(blocks, &columns);
            for pair in ordered.windows(2) {
                let key = |b: &TextBlock| (b.page, b.bbox.y0, b.bbox.x0);
                let (a, b) = (key(&pair[0]), key(&pair[1]));
                prop_assert!(a.0 < b.0 || (a.0 == b.0 && (a.1 < b.1 || (a.1 == b.1 && a.2 <= b.2))));
            }
        }
    }
}
