use std::sync::LazyLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use super::sections::{Section, SectionLabel};
use crate::fuzzy::fold;
use crate::ingest::NormalizedText;

pub const MIN_PHONE_DIGITS: usize = 8;
pub const MAX_PHONE_DIGITS: usize = 15;

static EMAIL: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"[A-Za-z0-9._%+\-]+@[A-Za-z0-9\-]+(?:\.[A-Za-z0-9\-]+)*\.[A-Za-z]{2,}").unwrap());
static PHONE: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"(?:\+|\()?\d[\d \-.()]*\d").unwrap());
static ADDRESS_LABEL: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(r"^(?:adresse|address|addr|location|localisation|domicile|lieu de residence|residence)\s*:\s*(.+)$")
        .unwrap()
});
const ADDRESS_WORDS: &[&str] = &[
    "rue",
    "avenue",
    "av",
    "boulevard",
    "bd",
    "cite",
    "street",
    "st",
    "road",
    "rd",
    "lot",
    "lotissement",
    "quartier",
    "residence",
    "wilaya",
    "commune",
    "bp",
    "cedex",
    "chemin",
    "route",
    "impasse",
    "allee",
];

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContactInfo {
    pub emails: Vec<String>,
    /// Digits only, with a leading `+` when written internationally.
    pub phones: Vec<String>,
    pub addresses: Vec<String>,
}

impl ContactInfo {
    pub fn is_empty(&self) -> bool {
        self.emails.is_empty() && self.phones.is_empty() && self.addresses.is_empty()
    }
}

fn push_unique(list: &mut Vec<String>, value: String) {
    if !list.contains(&value) {
        list.push(value);
    }
}

fn is_year(g: &str) -> bool {
    g.len() == 4 && g.parse::<u32>().is_ok_and(|y| (1950..=2099).contains(&y))
}

fn is_month(g: &str) -> bool {
    g.len() <= 2 && g.parse::<u32>().is_ok_and(|m| (1..=12).contains(&m))
}

/// Digit groups made only of months and years ("2019-2021", "01.2019 -
/// 03.2021") are date ranges, not phone numbers.
fn looks_like_dates(candidate: &str) -> bool {
    let groups: Vec<&str> = candidate.split(|c: char| !c.is_ascii_digit()).filter(|g| !g.is_empty()).collect();
    groups.iter().any(|g| is_year(g)) && groups.iter().all(|g| is_year(g) || is_month(g))
}

/// Normalizes a phone candidate, or rejects it.
pub fn normalize_phone(candidate: &str) -> Option<String> {
    let international = candidate.starts_with('+');
    if !international && looks_like_dates(candidate) {
        return None;
    }
    let digits: String = candidate.chars().filter(char::is_ascii_digit).collect();
    if !(MIN_PHONE_DIGITS..=MAX_PHONE_DIGITS).contains(&digits.len()) {
        return None;
    }
    Some(if international { format!("+{digits}") } else { digits })
}

fn find_emails(text: &str, out: &mut Vec<String>) {
    for m in EMAIL.find_iter(text) {
        push_unique(out, m.as_str().to_string());
    }
}

fn find_phones(text: &str, out: &mut Vec<String>) {
    let without_emails = EMAIL.replace_all(text, " ");
    for line in without_emails.lines() {
        for m in PHONE.find_iter(line) {
            if let Some(phone) = normalize_phone(m.as_str()) {
                push_unique(out, phone);
            }
        }
    }
}

/// Narrow columns wrap "street, city" so the city lands alone on the next
/// line. A comma-free address takes such a line as its locality.
fn locality_continuation(line: Option<&str>) -> Option<&str> {
    let line = line?.trim();
    let words = line.split_whitespace().count();
    let plain = (1..=3).contains(&words)
        && line.chars().next().is_some_and(char::is_uppercase)
        && !line.contains([':', '@', '•', '|'])
        && PHONE.find_iter(line).all(|m| normalize_phone(m.as_str()).is_none());
    plain.then_some(line)
}

fn find_addresses(text: &str, out: &mut Vec<String>) {
    let lines: Vec<&str> = text.lines().collect();
    for (i, line) in lines.iter().enumerate() {
        let folded = fold(line);
        let value = if ADDRESS_LABEL.is_match(&folded) {
            // Byte lengths differ after folding; re-split the original line.
            line.split_once(':').map_or("", |(_, v)| v).trim()
        } else {
            if EMAIL.is_match(line) || PHONE.find_iter(line).any(|m| normalize_phone(m.as_str()).is_some()) {
                continue;
            }
            let has_keyword = folded.split(|c: char| !c.is_alphanumeric()).any(|w| ADDRESS_WORDS.contains(&w));
            if !has_keyword || !line.chars().any(char::is_alphabetic) {
                continue;
            }
            line.trim()
        };
        if value.is_empty() {
            continue;
        }
        match locality_continuation(lines.get(i + 1).copied()).filter(|_| !value.contains(',')) {
            Some(city) => push_unique(out, format!("{value}, {city}")),
            None => push_unique(out, value.to_string()),
        }
    }
}

/// Pulls emails, phones and addresses out of the resume.
///
/// The unheaded prefix and the Contact and Summary sections are searched
/// first; each field falls back to the full text when nothing was found
/// there. Addresses are only taken from the priority sections.
pub fn extract_contact(sections: &[Section], text: &NormalizedText) -> ContactInfo {
    let text = text.as_str();
    let priority: Vec<&str> = sections
        .iter()
        .filter(|s| s.is_prefix() || matches!(s.label, SectionLabel::Contact | SectionLabel::Summary))
        .map(|s| s.slice(text))
        .collect();

    let mut info = ContactInfo::default();
    for part in &priority {
        find_emails(part, &mut info.emails);
        find_phones(part, &mut info.phones);
        find_addresses(part, &mut info.addresses);
    }
    if info.emails.is_empty() {
        find_emails(text, &mut info.emails);
    }
    if info.phones.is_empty() {
        find_phones(text, &mut info.phones);
    }
    info
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::lexicon::bundled_headers;
    use crate::extract::sections::segment;
    use crate::ingest::normalize_text;
    use proptest::prelude::*;

    fn contact(text: &str) -> ContactInfo {
        let text = normalize_text(text);
        extract_contact(&segment(&text, &bundled_headers()), &text)
    }

    #[test]
    fn email_and_international_phone() {
        let c = contact("mail: jane.doe@mail.dz / +213 661 23 45 67");
        assert_eq!(c.emails, ["jane.doe@mail.dz"]);
        assert_eq!(c.phones, ["+213661234567"]);
    }

    #[test]
    fn nothing_to_find() {
        assert!(contact("Développeur passionné\nRigoureux et curieux").is_empty());
    }

    #[test]
    fn parenthesized_national_number() {
        let digits: String = "(0661) 23-45-67".chars().filter(char::is_ascii_digit).collect();
        assert_eq!(digits.len(), 10);
        assert_eq!(contact("(0661) 23-45-67").phones, [digits]);
    }

    #[test]
    fn date_ranges_are_not_phones() {
        let c = contact("Expérience\n2019-2021 Développeur\n01.2019 - 03.2021 Stage");
        assert!(c.phones.is_empty(), "{:?}", c.phones);
    }

    #[test]
    fn priority_sections_win_and_duplicates_collapse() {
        let c = contact(
            "Amine Benali\namine@x.dz | 0661 23 45 67\nAdresse : 12 Rue Didouche Mourad, Alger\n\
             Expérience\nContact RH: rh@acme.dz\namine@x.dz",
        );
        assert_eq!(c.emails, ["amine@x.dz"]);
        assert_eq!(c.phones, ["0661234567"]);
        assert_eq!(c.addresses, ["12 Rue Didouche Mourad, Alger"]);
    }

    #[test]
    fn wrapped_city_joins_address() {
        let c = contact("Adresse : 3 Rue Larbi Ben M'hidi\nTlemcen\nCompétences\nJava");
        assert_eq!(c.addresses, ["3 Rue Larbi Ben M'hidi, Tlemcen"]);
        let c = contact("Adresse : 3 Rue Larbi Ben M'hidi, Oran\nTlemcen");
        assert_eq!(c.addresses, ["3 Rue Larbi Ben M'hidi, Oran"]);
        let c = contact("Adresse : 3 Rue Larbi Ben M'hidi\nTél : 0661 23 45 67");
        assert_eq!(c.addresses, ["3 Rue Larbi Ben M'hidi"]);
    }

    #[test]
    fn address_keyword_line() {
        let c = contact("Contact\nCité 500 logements, Bab Ezzouar\nEmail : a@b.com");
        assert_eq!(c.addresses, ["Cité 500 logements, Bab Ezzouar"]);
    }

    proptest! {
        #[test]
        fn phones_have_8_to_15_digits(s in "[0-9 +().\\-a-z@\n]{0,80}") {
            for phone in contact(&s).phones {
                let n = phone.chars().filter(char::is_ascii_digit).count();
                prop_assert!((MIN_PHONE_DIGITS..=MAX_PHONE_DIGITS).contains(&n));
            }
        }
    }
}
