//! Token n-gram candidate spans for lexicon lookups.
//!
//! Text is cut into segments at list punctuation (commas, bullets, colons,
//! line breaks...) and into tokens at whitespace and `/`. N-grams never
//! cross a segment boundary; a span covers the original text from its first
//! token's start to its last token's end, so `CI/CD` is one bigram.

/// Byte range into the source text.
pub type Span = (usize, usize);

fn is_segment_break(c: char) -> bool {
    matches!(
        c,
        ',' | ';'
            | '|'
            | '\n'
            | ':'
            | '('
            | ')'
            | '['
            | ']'
            | '{'
            | '}'
            | '"'
            | '«'
            | '»'
            | '•'
            | '·'
            | '▪'
            | '◦'
            | '●'
            | '■'
            | '►'
            | '➢'
            | '✓'
            | '→'
            | '*'
    )
}

fn is_dash(token: &str) -> bool {
    token.chars().all(|c| matches!(c, '-' | '–' | '—' | '_'))
}

/// Segments of token spans, offsets relative to `text` plus `base`.
pub fn segments(text: &str, base: usize) -> Vec<Vec<Span>> {
    let mut out: Vec<Vec<Span>> = Vec::new();
    let mut current: Vec<Span> = Vec::new();
    let mut token_start: Option<usize> = None;

    let close_token = |start: usize, end: usize, current: &mut Vec<Span>, out: &mut Vec<Vec<Span>>| {
        let raw = &text[start..end];
        let trimmed = raw.trim_end_matches(['.', '\'', '\u{2019}']);
        let trimmed = trimmed.trim_start_matches(['\'', '\u{2019}']);
        if trimmed.is_empty() {
            return;
        }
        if is_dash(trimmed) {
            if !current.is_empty() {
                out.push(std::mem::take(current));
            }
            return;
        }
        let lead = raw.len() - raw.trim_start_matches(['\'', '\u{2019}']).len();
        let s = start + lead;
        current.push((base + s, base + s + trimmed.len()));
    };

    for (i, c) in text.char_indices() {
        let breaks = is_segment_break(c);
        if c.is_whitespace() || c == '/' || breaks {
            if let Some(start) = token_start.take() {
                close_token(start, i, &mut current, &mut out);
            }
            if breaks && !current.is_empty() {
                out.push(std::mem::take(&mut current));
            }
        } else if token_start.is_none() {
            token_start = Some(i);
        }
    }
    if let Some(start) = token_start {
        close_token(start, text.len(), &mut current, &mut out);
    }
    if !current.is_empty() {
        out.push(current);
    }
    out
}

/// All n-grams (`1..=max_n`) within each segment.
pub fn ngrams(text: &str, base: usize, max_n: usize) -> Vec<(Span, usize)> {
    let mut spans = Vec::new();
    for segment in segments(text, base) {
        for n in 1..=max_n.min(segment.len()) {
            for window in segment.windows(n) {
                spans.push(((window[0].0, window[n - 1].1), n));
            }
        }
    }
    spans
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(text: &str) -> Vec<Vec<&str>> {
        segments(text, 0).into_iter().map(|seg| seg.into_iter().map(|(s, e)| &text[s..e]).collect()).collect()
    }

    #[test]
    fn splits_lists() {
        assert_eq!(
            texts("Python, Node.js; CI/CD • React Native.\n- Docker"),
            vec![vec!["Python"], vec!["Node.js"], vec!["CI", "CD"], vec!["React", "Native"], vec!["Docker"]]
        );
    }

    #[test]
    fn dash_tokens_split_segments() {
        assert_eq!(texts("Git - Linux"), vec![vec!["Git"], vec!["Linux"]]);
        assert_eq!(texts("C++ C# .NET"), vec![vec!["C++", "C#", ".NET"]]);
    }

    #[test]
    fn ngram_spans_cover_original_text() {
        let text = "Ingénieur d'État en Informatique";
        let grams = ngrams(text, 10, 3);
        let two: Vec<&str> = grams.iter().filter(|(_, n)| *n == 2).map(|((s, e), _)| &text[s - 10..e - 10]).collect();
        assert_eq!(two, ["Ingénieur d'État", "d'État en", "en Informatique"]);
    }
}
