use std::fmt;
use std::sync::LazyLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use super::sections::{sections_text, Section, SectionLabel};
use crate::fuzzy::fold;
use crate::ingest::NormalizedText;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct YearMonth {
    pub year: i32,
    /// 1..=12
    pub month: u32,
}

impl YearMonth {
    pub fn new(year: i32, month: u32) -> Option<Self> {
        (1..=12).contains(&month).then_some(Self { year, month })
    }

    /// Months since year 0, for arithmetic.
    pub fn index(self) -> i64 {
        i64::from(self.year) * 12 + i64::from(self.month) - 1
    }

    pub fn from_index(index: i64) -> Self {
        Self { year: index.div_euclid(12) as i32, month: index.rem_euclid(12) as u32 + 1 }
    }
}

impl fmt::Display for YearMonth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}", self.year, self.month)
    }
}

/// Inclusive month range. Year-only dates start in January and end in
/// December, with the matching `*_month_known` flag cleared. Ends never
/// pass the reference date.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DateInterval {
    pub start: YearMonth,
    pub end: YearMonth,
    pub start_month_known: bool,
    pub end_month_known: bool,
    /// End was "present" or equivalent and resolved to the reference date.
    pub ongoing: bool,
}

impl DateInterval {
    pub fn months(&self) -> i64 {
        self.end.index() - self.start.index() + 1
    }
}

const MONTHS: &[(&str, u32)] = &[
    ("janvier", 1),
    ("january", 1),
    ("janv", 1),
    ("jan", 1),
    ("fevrier", 2),
    ("february", 2),
    ("fevr", 2),
    ("fev", 2),
    ("feb", 2),
    ("mars", 3),
    ("march", 3),
    ("mar", 3),
    ("avril", 4),
    ("april", 4),
    ("avr", 4),
    ("apr", 4),
    ("mai", 5),
    ("may", 5),
    ("juin", 6),
    ("june", 6),
    ("jun", 6),
    ("juillet", 7),
    ("july", 7),
    ("juil", 7),
    ("jul", 7),
    ("aout", 8),
    ("august", 8),
    ("aug", 8),
    ("septembre", 9),
    ("september", 9),
    ("sept", 9),
    ("sep", 9),
    ("octobre", 10),
    ("october", 10),
    ("oct", 10),
    ("novembre", 11),
    ("november", 11),
    ("nov", 11),
    ("decembre", 12),
    ("december", 12),
    ("dec", 12),
];

static DATE_TOKEN: LazyLock<Regex> = LazyLock::new(|| {
    let names: Vec<&str> = MONTHS.iter().map(|(n, _)| *n).collect();
    Regex::new(&format!(
        r"\b(?:(?P<mname>{})\.?\s*(?P<myear>(?:19|20)\d{{2}})|(?P<mnum>0?[1-9]|1[0-2])[/.](?P<nyear>(?:19|20)\d{{2}})|(?P<present>present|current|now|today|aujourd'hui|a ce jour|ce jour|en cours|actuellement|actuel|ongoing)|(?P<year>(?:19|20)\d{{2}}))\b",
        names.join("|")
    ))
    .unwrap()
});
static SEPARATOR: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"^\s*(?:-+|–|—|to|a|au|until|till|jusqu'a|jusqu'au)\s*$").unwrap());
static OPEN_MARKER: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"(?:depuis|since)\s*$").unwrap());

#[derive(Debug, Clone, Copy, PartialEq)]
enum Token {
    Date { ym: YearMonth, month_known: bool },
    Present,
}

struct Found {
    token: Token,
    start: usize,
    end: usize,
}

fn tokens(folded: &str) -> Vec<Found> {
    DATE_TOKEN
        .captures_iter(folded)
        .filter_map(|c| {
            let m = c.get(0).unwrap();
            let year = |g: &str| c.name(g).map(|y| y.as_str().parse::<i32>().unwrap());
            let token = if let (Some(name), Some(y)) = (c.name("mname"), year("myear")) {
                let month = MONTHS.iter().find(|(n, _)| *n == name.as_str()).unwrap().1;
                Token::Date { ym: YearMonth::new(y, month)?, month_known: true }
            } else if let (Some(mm), Some(y)) = (c.name("mnum"), year("nyear")) {
                Token::Date { ym: YearMonth::new(y, mm.as_str().parse().ok()?)?, month_known: true }
            } else if c.name("present").is_some() {
                Token::Present
            } else {
                Token::Date { ym: YearMonth::new(year("year")?, 1)?, month_known: false }
            };
            Some(Found { token, start: m.start(), end: m.end() })
        })
        .collect()
}

fn make_interval(start: Token, end: Token, today: YearMonth) -> Option<DateInterval> {
    let Token::Date { ym: start, month_known: start_month_known } = start else { return None };
    let (end, end_month_known, ongoing) = match end {
        Token::Present => (today, true, true),
        // Year-only end dates cover the whole year.
        Token::Date { ym, month_known: false } => (YearMonth { year: ym.year, month: 12 }, false, false),
        Token::Date { ym, month_known: true } => (ym, true, false),
    };
    // Months after the reference date have not been worked yet.
    let end = end.min(today);
    let interval = DateInterval { start, end, start_month_known, end_month_known, ongoing };
    if start > end {
        tracing::debug!(%start, %end, "discarding inverted or future date range");
        return None;
    }
    Some(interval)
}

/// Date ranges written in `text` ("Jan 2020 – Mar 2022", "2018-2020",
/// "09/2021 à aujourd'hui", "depuis 2023"). `today` resolves open ends.
/// Lone dates that are not part of a range are ignored.
pub fn parse_date_intervals(text: &str, today: YearMonth) -> Vec<DateInterval> {
    let mut out = Vec::new();
    for line in text.lines() {
        let folded = fold(line);
        let found = tokens(&folded);
        let mut i = 0;
        while i < found.len() {
            let current = &found[i];
            if let Some(next) = found.get(i + 1) {
                let between = &folded[current.end..next.start];
                let joined = SEPARATOR.is_match(between) || (next.token == Token::Present && between.trim().is_empty());
                if joined {
                    if let Some(interval) = make_interval(current.token, next.token, today) {
                        out.push(interval);
                    }
                    i += 2;
                    continue;
                }
            }
            if OPEN_MARKER.is_match(&folded[..current.start]) {
                if let Some(interval) = make_interval(current.token, Token::Present, today) {
                    out.push(interval);
                }
            }
            i += 1;
        }
    }
    out
}

/// Date ranges in the Experience sections.
pub fn extract_experience(sections: &[Section], text: &NormalizedText, today: YearMonth) -> Vec<DateInterval> {
    sections_text(sections, text.as_str(), &[SectionLabel::Experience])
        .unwrap_or_default()
        .into_iter()
        .flat_map(|(_, part)| parse_date_intervals(part, today))
        .collect()
}

/// Months covered by the union of the intervals, so overlapping jobs count
/// once.
pub fn total_experience_months(intervals: &[DateInterval]) -> u32 {
    let mut ranges: Vec<(i64, i64)> = intervals.iter().map(|i| (i.start.index(), i.end.index())).collect();
    ranges.sort_unstable();
    let mut total = 0;
    let mut current: Option<(i64, i64)> = None;
    for (s, e) in ranges {
        current = match current {
            Some((cs, ce)) if s <= ce + 1 => Some((cs, ce.max(e))),
            Some((cs, ce)) => {
                total += ce - cs + 1;
                Some((s, e))
            }
            None => Some((s, e)),
        };
    }
    if let Some((cs, ce)) = current {
        total += ce - cs + 1;
    }
    u32::try_from(total).unwrap_or(u32::MAX)
}
