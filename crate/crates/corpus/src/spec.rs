//! Randomized resume content and its gold annotation.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::pools::{self, Lang};

/// Reference month for "present" and gold experience totals.
pub const CLOCK: (i32, u32) = (2025, 6);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DateStyle {
    ShortMonth,
    LongMonth,
    Numeric,
    YearOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JobEnd {
    Month(i32, u32),
    Present,
}

#[derive(Debug, Clone)]
pub struct Job {
    pub start: (i32, u32),
    pub end: JobEnd,
    pub style: DateStyle,
    /// Written as "since <start>" instead of a range.
    pub since: bool,
    pub role: String,
    pub company: String,
    pub tasks: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct Degree {
    pub ordinal: u8,
    pub text: String,
    pub school: String,
    pub years: (i32, i32),
}

#[derive(Debug, Clone)]
pub struct ResumeSpec {
    pub id: String,
    pub lang: Lang,
    pub given: String,
    pub family: String,
    pub name_line: String,
    pub title: String,
    pub email: String,
    pub phone_display: String,
    pub phone: String,
    pub street: String,
    pub city: String,
    pub summary: String,
    /// (id, surface)
    pub skills: Vec<(String, String)>,
    pub skill_style: usize,
    pub degrees: Vec<Degree>,
    pub jobs: Vec<Job>,
    /// (code, display)
    pub languages: Vec<(String, String)>,
    pub interests: String,
    pub header_style: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldResume {
    pub id: String,
    pub file: String,
    pub language: String,
    pub layout: String,
    pub name: String,
    pub emails: Vec<String>,
    pub phones: Vec<String>,
    pub city: String,
    pub skills: Vec<String>,
    pub education: u8,
    pub experience_months: u32,
    pub languages: Vec<String>,
}

fn month_index(y: i32, m: u32) -> i64 {
    i64::from(y) * 12 + i64::from(m) - 1
}

impl Job {
    /// Inclusive month range as the text reads: year-only dates cover whole
    /// years, "present" is [`CLOCK`].
    pub fn months(&self) -> (i64, i64) {
        let year_only = self.style == DateStyle::YearOnly;
        let start = if year_only { month_index(self.start.0, 1) } else { month_index(self.start.0, self.start.1) };
        let end = match self.end {
            JobEnd::Present => month_index(CLOCK.0, CLOCK.1),
            JobEnd::Month(y, _) if year_only => month_index(y, 12),
            JobEnd::Month(y, m) => month_index(y, m),
        };
        (start, end.min(month_index(CLOCK.0, CLOCK.1)))
    }
}

impl ResumeSpec {
    pub fn experience_months(&self) -> u32 {
        let months: BTreeSet<i64> = self
            .jobs
            .iter()
            .flat_map(|j| {
                let (s, e) = j.months();
                s..=e
            })
            .collect();
        months.len() as u32
    }

    pub fn education(&self) -> u8 {
        self.degrees.iter().map(|d| d.ordinal).max().unwrap_or(0)
    }

    pub fn gold(&self, file: &str, layout: &str) -> GoldResume {
        let mut skills: Vec<String> = self.skills.iter().map(|s| s.0.clone()).collect();
        skills.sort();
        skills.dedup();
        GoldResume {
            id: self.id.clone(),
            file: file.to_string(),
            language: self.lang.code().to_string(),
            layout: layout.to_string(),
            name: self.name_line.clone(),
            emails: vec![self.email.clone()],
            phones: vec![self.phone.clone()],
            city: self.city.clone(),
            skills,
            education: self.education(),
            experience_months: self.experience_months(),
            languages: self.languages.iter().map(|l| l.0.clone()).collect(),
        }
    }
}

fn pick<'a, R: Rng>(rng: &mut R, items: &'a [&'a str]) -> &'a str {
    items.choose(rng).unwrap()
}

fn ascii_lower(s: &str) -> String {
    s.chars()
        .filter_map(|c| match c {
            'é' | 'è' | 'ê' => Some('e'),
            'ï' | 'î' => Some('i'),
            '-' => Some('-'),
            c if c.is_ascii_alphanumeric() => Some(c.to_ascii_lowercase()),
            _ => None,
        })
        .collect()
}

fn phone<R: Rng>(rng: &mut R, lang: Lang) -> (String, String) {
    if lang == Lang::Fr && rng.gen_bool(0.3) {
        let d: Vec<u32> = (0..8).map(|_| rng.gen_range(0..10)).collect();
        let display = format!("+33 6 {}{} {}{} {}{} {}{}", d[0], d[1], d[2], d[3], d[4], d[5], d[6], d[7]);
        let digits: String = d.iter().map(|x| x.to_string()).collect();
        return (display, format!("+336{digits}"));
    }
    let prefix = ["5", "6", "7"].choose(rng).unwrap().to_string();
    let d: Vec<u32> = (0..8).map(|_| rng.gen_range(0..10)).collect();
    let digits: String = d.iter().map(|x| x.to_string()).collect();
    let pair = |i: usize| format!("{}{}", d[i], d[i + 1]);
    let groups = |sep: &str| [pair(2), pair(4), pair(6)].join(sep);
    let head = format!("{prefix}{}", pair(0));
    match rng.gen_range(0..5) {
        0 => (format!("0{head} {}", groups(" ")), format!("0{prefix}{digits}")),
        1 => (format!("0{head}-{}", groups("-")), format!("0{prefix}{digits}")),
        2 => (format!("+213 {head} {}", groups(" ")), format!("+213{prefix}{digits}")),
        3 => (format!("0{head}.{}", groups(".")), format!("0{prefix}{digits}")),
        _ => (format!("(0{head}) {}", groups(" ")), format!("0{prefix}{digits}")),
    }
}

/// Constraints used by the ranking scenarios.
#[derive(Debug, Clone, Default)]
pub struct Requirements {
    pub skills: Option<Vec<String>>,
    pub experience_months: Option<u32>,
    pub education: Option<u8>,
    pub city: Option<String>,
}

fn degrees<R: Rng>(rng: &mut R, lang: Lang, top: u8) -> Vec<Degree> {
    let mut out = Vec::new();
    let mut year = rng.gen_range(2004..2016);
    for ordinal in 1..=top {
        let (_, en, fr) = pools::DEGREES.iter().find(|d| d.0 == ordinal).unwrap();
        let field = if ordinal == 1 {
            pick(rng, pools::HIGHSCHOOL_FIELDS)
        } else if lang == Lang::En {
            pick(rng, pools::FIELDS_EN)
        } else {
            pick(rng, pools::FIELDS_FR)
        };
        let template = pick(rng, if lang == Lang::En { en } else { fr });
        let length = match ordinal {
            1 => 1,
            2 => 3,
            3 => 2,
            _ => 3,
        };
        out.push(Degree {
            ordinal,
            text: template.replace("{}", field),
            school: if ordinal == 1 { String::new() } else { pick(rng, pools::SCHOOLS).to_string() },
            years: (year, year + length),
        });
        year += length;
    }
    // Most resumes skip the high school line once they have a degree.
    if top > 1 && rng.gen_bool(0.6) {
        out.remove(0);
    }
    out.reverse();
    out
}

fn jobs<R: Rng>(rng: &mut R, lang: Lang, target: Option<u32>) -> Vec<Job> {
    let clock = month_index(CLOCK.0, CLOCK.1);
    let count = rng.gen_range(1..=4);
    let mut out = Vec::new();
    let mut cursor = clock - rng.gen_range(0..6);
    let ongoing = rng.gen_bool(0.4);
    for i in 0..count {
        let len = match target {
            Some(t) => (i64::from(t) / count as i64).max(1) + 2,
            None => rng.gen_range(3..40),
        };
        let end = cursor;
        let start = end - len + 1;
        let gap = if target.is_some() { 0 } else { rng.gen_range(-3..8) };
        cursor = start - 1 - gap;
        let style = match rng.gen_range(0..10) {
            0..=3 => DateStyle::ShortMonth,
            4..=5 => DateStyle::LongMonth,
            6..=7 => DateStyle::Numeric,
            _ if target.is_none() => DateStyle::YearOnly,
            _ => DateStyle::Numeric,
        };
        let ym = |m: i64| ((m.div_euclid(12)) as i32, (m.rem_euclid(12) + 1) as u32);
        let is_present = i == 0 && ongoing;
        let (roles, tasks) = match lang {
            Lang::En => (pools::ROLES_EN, pools::TASKS_EN),
            Lang::Fr => (pools::ROLES_FR, pools::TASKS_FR),
        };
        out.push(Job {
            start: ym(start),
            end: if is_present { JobEnd::Present } else { JobEnd::Month(ym(end).0, ym(end).1) },
            style: if is_present && style == DateStyle::YearOnly { DateStyle::ShortMonth } else { style },
            since: is_present && style != DateStyle::Numeric && rng.gen_bool(0.3),
            role: pick(rng, roles).to_string(),
            company: pick(rng, pools::COMPANIES).to_string(),
            tasks: {
                let n = rng.gen_range(0..=2);
                tasks.choose_multiple(rng, n).map(|t| t.to_string()).collect()
            },
        });
        if cursor < month_index(2006, 1) {
            break;
        }
    }
    out
}

fn skills<R: Rng>(rng: &mut R, lang: Lang, required: Option<&[String]>) -> Vec<(String, String)> {
    let mut ids: Vec<&str> = match required {
        Some(r) => {
            let mut ids: Vec<&str> = r.iter().map(String::as_str).collect();
            let others: Vec<&str> = pools::SKILLS.iter().map(|s| s.0).filter(|id| !ids.contains(id)).collect();
            let n = rng.gen_range(0..=3);
            let extra: Vec<&str> = others.choose_multiple(rng, n).copied().collect();
            ids.extend(extra);
            ids
        }
        None => {
            let all: Vec<&str> = pools::SKILLS.iter().map(|s| s.0).collect();
            let n = rng.gen_range(5..=10);
            all.choose_multiple(rng, n).copied().collect()
        }
    };
    ids.shuffle(rng);
    ids.into_iter()
        .map(|id| {
            let (_, canonical, french) = pools::skill(id);
            let alias = pools::ALIASES.iter().find(|a| a.0 == id).map(|a| a.1);
            let surface = match (lang, french, alias) {
                (Lang::Fr, f, _) if !f.is_empty() && rng.gen_bool(0.8) => f,
                (_, _, Some(a)) if rng.gen_bool(0.4) => a,
                _ => canonical,
            };
            (id.to_string(), surface.to_string())
        })
        .collect()
}

pub fn generate<R: Rng>(rng: &mut R, id: &str, lang: Lang, req: &Requirements) -> ResumeSpec {
    let given = pick(rng, pools::GIVEN).to_string();
    let family = pick(rng, pools::FAMILY).to_string();
    let name_line = match rng.gen_range(0..3) {
        0 => format!("{given} {}", family.to_uppercase()),
        1 => format!("{} {given}", family.to_uppercase()),
        _ => format!("{given} {family}"),
    };
    let email = match rng.gen_range(0..3) {
        0 => format!("{}.{}@{}", ascii_lower(&given), ascii_lower(&family), pick(rng, pools::MAIL_DOMAINS)),
        1 => format!(
            "{}{}{}@{}",
            &ascii_lower(&given)[..1],
            ascii_lower(&family),
            rng.gen_range(80..100),
            pick(rng, pools::MAIL_DOMAINS)
        ),
        _ => format!("{}_{}@{}", ascii_lower(&family), ascii_lower(&given), pick(rng, pools::MAIL_DOMAINS)),
    };
    let (phone_display, phone) = phone(rng, lang);
    let top_degree = req.education.unwrap_or_else(|| [1, 2, 2, 3, 3, 3, 4].choose(rng).copied().unwrap());
    let mut languages: Vec<(String, String)> = Vec::new();
    let mut codes: Vec<usize> = vec![0, 1, 2];
    let n = rng.gen_range(0..=1);
    codes.extend([3usize, 4, 5].choose_multiple(rng, n));
    codes.shuffle(rng);
    for i in codes {
        let (code, en, fr) = pools::LANGUAGES[i];
        let (name, levels) = match lang {
            Lang::En => (en, pools::LEVELS_EN),
            Lang::Fr => (fr, pools::LEVELS_FR),
        };
        let display = if rng.gen_bool(0.6) { format!("{name} ({})", pick(rng, levels)) } else { name.to_string() };
        languages.push((code.to_string(), display));
    }

    ResumeSpec {
        id: id.to_string(),
        lang,
        title: match lang {
            Lang::En => pick(rng, pools::ROLES_EN),
            Lang::Fr => pick(rng, pools::ROLES_FR),
        }
        .to_string(),
        summary: match lang {
            Lang::En => pick(rng, pools::SUMMARIES_EN),
            Lang::Fr => pick(rng, pools::SUMMARIES_FR),
        }
        .to_string(),
        interests: match lang {
            Lang::En => pick(rng, pools::INTERESTS_EN),
            Lang::Fr => pick(rng, pools::INTERESTS_FR),
        }
        .to_string(),
        given,
        family,
        name_line,
        email,
        phone_display,
        phone,
        street: pick(rng, pools::STREETS).to_string(),
        city: req.city.clone().unwrap_or_else(|| pick(rng, pools::CITIES).to_string()),
        skills: skills(rng, lang, req.skills.as_deref()),
        skill_style: rng.gen_range(0..3),
        degrees: degrees(rng, lang, top_degree),
        jobs: jobs(rng, lang, req.experience_months),
        languages,
        header_style: rng.gen_range(0..3),
    }
}
