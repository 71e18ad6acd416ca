//! Turns a [`ResumeSpec`] into lines of text, grouped for layout.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::pools::{self, Lang};
use crate::spec::{DateStyle, JobEnd, ResumeSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Name,
    Header,
    Body,
}

#[derive(Debug, Clone)]
pub struct Line {
    pub kind: Kind,
    pub text: String,
    /// Byte offset where a PDF writer may split the line into two runs.
    pub split: Option<usize>,
}

impl Line {
    fn body(text: impl Into<String>) -> Self {
        Self { kind: Kind::Body, text: text.into(), split: None }
    }
}

/// A run of lines that stays together; two-column layouts put each block
/// in one column.
#[derive(Debug, Clone)]
pub struct Block {
    pub sidebar: bool,
    pub lines: Vec<Line>,
}

fn header<R: Rng>(rng: &mut R, variants: &[&str], style: usize) -> Line {
    let title = *variants.choose(rng).unwrap();
    let text = match style {
        1 => title.to_uppercase(),
        2 => format!("{title} :"),
        _ => title.to_string(),
    };
    Line { kind: Kind::Header, text, split: None }
}

fn month_year(lang: Lang, style: DateStyle, (y, m): (i32, u32), numeric_sep: char) -> String {
    let i = (m - 1) as usize;
    match (style, lang) {
        (DateStyle::ShortMonth, Lang::En) => format!("{} {y}", pools::MONTHS_EN[i]),
        (DateStyle::ShortMonth, Lang::Fr) => format!("{} {y}", pools::MONTHS_FR[i]),
        (DateStyle::LongMonth, Lang::En) => format!("{} {y}", pools::MONTHS_EN_LONG[i]),
        (DateStyle::LongMonth, Lang::Fr) => format!("{} {y}", pools::MONTHS_FR_LONG[i]),
        (DateStyle::Numeric, _) => format!("{m:02}{numeric_sep}{y}"),
        (DateStyle::YearOnly, _) => y.to_string(),
    }
}

fn job_dates<R: Rng>(rng: &mut R, lang: Lang, job: &crate::spec::Job) -> String {
    let sep_char = if rng.gen_bool(0.7) { '/' } else { '.' };
    let start = month_year(lang, job.style, job.start, sep_char);
    if job.since {
        return match lang {
            Lang::En => format!("Since {start}"),
            Lang::Fr => format!("Depuis {start}"),
        };
    }
    let end = match job.end {
        JobEnd::Present => match lang {
            Lang::En => *["Present", "Current", "now"].choose(rng).unwrap(),
            Lang::Fr => *["aujourd'hui", "à ce jour", "Présent"].choose(rng).unwrap(),
        }
        .to_string(),
        JobEnd::Month(y, m) => month_year(lang, job.style, (y, m), sep_char),
    };
    let sep = match lang {
        Lang::En => *[" – ", " - ", " to "].choose(rng).unwrap(),
        Lang::Fr if end.starts_with('à') => " – ",
        Lang::Fr => *[" – ", " - ", " à "].choose(rng).unwrap(),
    };
    format!("{start}{sep}{end}")
}

/// Greedy word wrap; `width` 0 disables wrapping.
pub fn wrap(text: &str, width: usize) -> Vec<String> {
    if width == 0 || text.chars().count() <= width {
        return vec![text.to_string()];
    }
    let mut out = Vec::new();
    let mut line = String::new();
    for word in text.split(' ') {
        if !line.is_empty() && line.chars().count() + 1 + word.chars().count() > width {
            out.push(std::mem::take(&mut line));
        }
        if !line.is_empty() {
            line.push(' ');
        }
        line.push_str(word);
    }
    if !line.is_empty() {
        out.push(line);
    }
    out
}

/// Packs list items into lines of at most `width` chars, never splitting
/// an item.
fn pack(prefix: &str, items: &[String], width: usize) -> Vec<String> {
    let mut out = Vec::new();
    let mut line = prefix.to_string();
    let mut first = true;
    for item in items {
        let piece = if first { item.clone() } else { format!(", {item}") };
        if width > 0 && !first && line.chars().count() + piece.chars().count() > width {
            out.push(format!("{line},"));
            line = item.clone();
        } else {
            line.push_str(&piece);
        }
        first = false;
    }
    out.push(line);
    out
}

/// Lines of the resume. `width` is the column width in chars for two-column
/// layouts, 0 otherwise; `compact` forces one fact per line.
pub fn render<R: Rng>(rng: &mut R, spec: &ResumeSpec, width: usize) -> Vec<Block> {
    let h = pools::headers(spec.lang);
    let style = spec.header_style;
    let compact = width > 0;
    let fr = spec.lang == Lang::Fr;
    let mut blocks = Vec::new();

    // Identity and contact.
    let mut top =
        vec![Line { kind: Kind::Name, text: spec.name_line.clone(), split: None }, Line::body(spec.title.clone())];
    if rng.gen_bool(0.4) {
        top.push(header(rng, h.contact, style));
    }
    let labelled = |label_en: &str, label_fr: &str, value: &str| {
        let label = if fr { format!("{label_fr} : ") } else { format!("{label_en}: ") };
        Line { kind: Kind::Body, split: Some(label.len()), text: format!("{label}{value}") }
    };
    let address = format!("{}, {}", spec.street, spec.city);
    if compact || rng.gen_bool(0.5) {
        top.push(labelled("Email", "Email", &spec.email));
        top.push(labelled("Phone", "Tél", &spec.phone_display));
        if compact {
            top.push(labelled("Address", "Adresse", &spec.street));
            top.push(Line::body(spec.city.clone()));
        } else {
            top.push(labelled("Address", "Adresse", &address));
        }
    } else {
        top.push(Line::body(format!("{} | {}", spec.email, spec.phone_display)));
        top.push(Line::body(address));
    }
    blocks.push(Block { sidebar: true, lines: top });

    let mut summary = vec![header(rng, h.summary, style)];
    summary.extend(wrap(&spec.summary, width).into_iter().map(Line::body));

    let mut experience = vec![header(rng, h.experience, style)];
    let one_line = !compact && rng.gen_bool(0.5);
    for job in &spec.jobs {
        let dates = job_dates(rng, spec.lang, job);
        if one_line {
            experience.push(Line::body(format!("{dates} : {}, {}", job.role, job.company)));
        } else {
            experience.push(Line::body(dates));
            experience.extend(wrap(&format!("{} — {}", job.role, job.company), width).into_iter().map(Line::body));
        }
        for task in &job.tasks {
            experience.extend(wrap(&format!("• {task}"), width).into_iter().map(Line::body));
        }
    }

    let mut education = vec![header(rng, h.education, style)];
    for d in &spec.degrees {
        let school = if d.school.is_empty() { String::new() } else { format!(", {}", d.school) };
        if compact || rng.gen_bool(0.5) {
            education.push(Line::body(format!("{} – {}", d.years.0, d.years.1)));
            education.extend(wrap(&format!("{}{school}", d.text), width).into_iter().map(Line::body));
        } else {
            education.push(Line::body(format!("{} – {} : {}{school}", d.years.0, d.years.1, d.text)));
        }
    }

    let mut skills = vec![header(rng, h.skills, style)];
    let surfaces: Vec<String> = spec.skills.iter().map(|s| s.1.clone()).collect();
    match spec.skill_style {
        0 => skills.extend(pack("", &surfaces, width).into_iter().map(Line::body)),
        1 => skills.extend(surfaces.iter().map(|s| Line::body(format!("• {s}")))),
        _ => {
            let prefixes: Vec<&str> = pools::SKILL_PREFIXES.iter().filter(|p| p.0 == spec.lang).map(|p| p.1).collect();
            let cut = surfaces.len() / 2;
            skills.extend(pack(prefixes[0], &surfaces[..cut], width).into_iter().map(Line::body));
            skills.extend(pack(prefixes[1], &surfaces[cut..], width).into_iter().map(Line::body));
        }
    }

    let names: Vec<String> = spec.languages.iter().map(|l| l.1.clone()).collect();
    let mut languages = Vec::new();
    if !compact && rng.gen_bool(0.5) {
        let title = *h.languages.first().unwrap();
        let label = if fr { format!("{title} : ") } else { format!("{title}: ") };
        languages.push(Line { kind: Kind::Header, text: format!("{label}{}", names.join(", ")), split: None });
    } else {
        languages.push(header(rng, h.languages, style));
        languages.extend(names.iter().map(|n| Line::body(format!("• {n}"))));
    }

    let mut interests = vec![header(rng, h.other, style)];
    interests.extend(wrap(&spec.interests, width).into_iter().map(Line::body));

    let mut main = vec![summary, experience, education];
    if !compact && rng.gen_bool(0.4) {
        main.swap(1, 2);
    }
    if compact {
        blocks.push(Block { sidebar: true, lines: skills });
        blocks.push(Block { sidebar: true, lines: languages });
        blocks.push(Block { sidebar: true, lines: interests });
        blocks.extend(main.into_iter().map(|lines| Block { sidebar: false, lines }));
    } else {
        let mut rest: Vec<Vec<Line>> = main;
        let at = rng.gen_range(1..=rest.len());
        rest.insert(at, skills);
        rest.push(languages);
        rest.push(interests);
        blocks.extend(rest.into_iter().map(|lines| Block { sidebar: false, lines }));
    }
    blocks
}

/// Plain-text resume; some files use CRLF or stray spacing.
pub fn to_text<R: Rng>(rng: &mut R, blocks: &[Block]) -> String {
    let crlf = rng.gen_bool(0.2);
    let mut out = String::new();
    for (i, block) in blocks.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for line in &block.lines {
            out.push_str(&line.text);
            if rng.gen_bool(0.1) {
                out.push_str("  ");
            }
            out.push('\n');
        }
    }
    if crlf {
        out = out.replace('\n', "\r\n");
    }
    out
}
