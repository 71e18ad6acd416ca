use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};
use unicode_normalization::UnicodeNormalization;

/// NFC text with clean whitespace and no control characters except `\n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NormalizedText(String);

impl NormalizedText {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl Deref for NormalizedText {
    type Target = str;

    fn deref(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for NormalizedText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// UTF-8 French/typographic characters as they appear after being misread
/// as Windows-1252. Longest sequences first.
const MOJIBAKE: &[(&str, &str)] = &[
    ("â€™", "\u{2019}"),
    ("â€˜", "\u{2018}"),
    ("â€œ", "\u{201c}"),
    ("â€“", "\u{2013}"),
    ("â€”", "\u{2014}"),
    ("â€¦", "\u{2026}"),
    ("â€¢", "\u{2022}"),
    ("â‚¬", "\u{20ac}"),
    ("Ã\u{a0}", "à"),
    ("Ã¢", "â"),
    ("Ã¤", "ä"),
    ("Ã¦", "æ"),
    ("Ã§", "ç"),
    ("Ã¨", "è"),
    ("Ã©", "é"),
    ("Ãª", "ê"),
    ("Ã«", "ë"),
    ("Ã®", "î"),
    ("Ã¯", "ï"),
    ("Ã´", "ô"),
    ("Ã¶", "ö"),
    ("Ã¹", "ù"),
    ("Ã»", "û"),
    ("Ã¼", "ü"),
    ("Ã¿", "ÿ"),
    ("Ã€", "À"),
    ("Ã‚", "Â"),
    ("Ã„", "Ä"),
    ("Ã†", "Æ"),
    ("Ã‡", "Ç"),
    ("Ãˆ", "È"),
    ("Ã‰", "É"),
    ("ÃŠ", "Ê"),
    ("Ã‹", "Ë"),
    ("ÃŽ", "Î"),
    ("Ã”", "Ô"),
    ("Ã–", "Ö"),
    ("Ã™", "Ù"),
    ("Ã›", "Û"),
    ("Ãœ", "Ü"),
    ("Å“", "œ"),
    ("Å’", "Œ"),
    ("Â«", "«"),
    ("Â»", "»"),
    ("Â°", "°"),
    ("Â\u{a0}", "\u{a0}"),
];

fn is_invisible(c: char) -> bool {
    matches!(
        c,
        '\u{00ad}'
            | '\u{200b}'..='\u{200f}'
            | '\u{202a}'..='\u{202e}'
            | '\u{2060}'..='\u{2064}'
            | '\u{2066}'..='\u{2069}'
            | '\u{feff}'
            | '\u{fffd}'
            | '\u{e000}'..='\u{f8ff}'
    ) || (c.is_control() && !matches!(c, '\n' | '\r' | '\t'))
}

fn repair_mojibake(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut rest = s;
    'scan: while let Some(c) = rest.chars().next() {
        if matches!(c, 'â' | 'Ã' | 'Å' | 'Â') {
            for (broken, fixed) in MOJIBAKE {
                if let Some(tail) = rest.strip_prefix(broken) {
                    out.push_str(fixed);
                    rest = tail;
                    continue 'scan;
                }
            }
        }
        out.push(c);
        rest = &rest[c.len_utf8()..];
    }
    out
}

fn normalize_whitespace(s: &str) -> String {
    let unified = s.replace("\r\n", "\n").replace('\r', "\n");
    let mut out = String::with_capacity(unified.len());
    for (i, line) in unified.split('\n').enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let mut first = true;
        for word in line.split(|c: char| c.is_whitespace()).filter(|w| !w.is_empty()) {
            if !first {
                out.push(' ');
            }
            out.push_str(word);
            first = false;
        }
    }
    out
}

/// Cleans raw extracted text.
///
/// Invisible and control characters go first so they cannot hide a
/// mojibake pair, composition runs on both sides of the repair, and
/// whitespace is collapsed last. The result is a fixed point.
pub fn normalize_text(raw: &str) -> NormalizedText {
    let visible: String = raw.chars().filter(|c| !is_invisible(*c)).collect();
    let composed: String = visible.nfc().collect();
    // A repair can expose another broken sequence, so repeat until stable.
    // Each repair shortens the text, which bounds the loop.
    let mut repaired = composed;
    loop {
        let next: String = repair_mojibake(&repaired).nfc().collect();
        if next == repaired {
            break;
        }
        repaired = next;
    }
    NormalizedText(normalize_whitespace(&repaired))
}
