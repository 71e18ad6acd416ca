use std::collections::BTreeSet;
use std::path::Path;

use cvmatch_core::extract::{parse_resume, Resources, ResumeProfile, YearMonth};
use cvmatch_core::ingest::{detect_columns, ingest, SourceDocument};

fn clock(manifest: &cvmatch_corpus::Manifest) -> YearMonth {
    let (y, m) = manifest.clock.split_once('-').unwrap();
    YearMonth::new(y.parse().unwrap(), m.parse().unwrap()).unwrap()
}

fn source(dir: &Path, file: &str) -> SourceDocument {
    SourceDocument::from_path(&dir.join(file)).unwrap()
}

#[test]
fn pdf_reading_order_matches_layout() {
    let dir = cvmatch_corpus::fixture_dir();
    let blocks = cvmatch_corpus::load_blocks(&dir).unwrap();
    assert!(blocks.documents.iter().filter(|d| d.pages[0].column_count == 2).count() >= 5);
    for doc in &blocks.documents {
        let ingested = ingest(&source(&dir, &doc.file)).unwrap();
        for (page, gold) in doc.pages.iter().enumerate() {
            let on_page: Vec<_> = ingested.blocks.iter().filter(|b| b.page == page).cloned().collect();
            assert_eq!(detect_columns(&on_page).column_count, gold.column_count, "{} page {page}", doc.file);
            let mut ordered = on_page.clone();
            ordered.sort_by_key(|b| b.order);
            let texts: Vec<String> = ordered.iter().map(|b| b.text.clone()).collect();
            assert_eq!(texts, gold.lines, "{} page {page}", doc.file);
        }
    }
}

#[test]
fn first_resume_matches_gold_exactly() {
    let dir = cvmatch_corpus::fixture_dir();
    let manifest = cvmatch_corpus::load_manifest(&dir).unwrap();
    let gold = &manifest.resumes[0];
    let profile = parse_resume(&source(&dir, &gold.file), &Resources::bundled(), clock(&manifest)).unwrap();
    assert_eq!(profile.name.value, gold.name);
    assert_eq!(profile.contact.emails, gold.emails);
    assert_eq!(profile.contact.phones, gold.phones);
    let skills: BTreeSet<&str> = profile.skills.iter().map(|s| s.id.as_str()).collect();
    assert_eq!(skills, gold.skills.iter().map(String::as_str).collect());
    assert_eq!(profile.education.ordinal(), gold.education);
    assert_eq!(profile.experience_months, gold.experience_months);
    assert_eq!(profile.languages, gold.languages);
}

fn field_diffs(p: &ResumeProfile, gold: &cvmatch_corpus::spec::GoldResume) -> Vec<String> {
    let skills: BTreeSet<&str> = p.skills.iter().map(|s| s.id.as_str()).collect();
    let gold_skills: BTreeSet<&str> = gold.skills.iter().map(String::as_str).collect();
    let mut bad = Vec::new();
    if p.name.value != gold.name {
        bad.push(format!("name {:?} vs {:?}", p.name.value, gold.name));
    }
    if p.contact.emails != gold.emails {
        bad.push(format!("emails {:?} vs {:?}", p.contact.emails, gold.emails));
    }
    if p.contact.phones != gold.phones {
        bad.push(format!("phones {:?} vs {:?}", p.contact.phones, gold.phones));
    }
    if skills != gold_skills {
        let extra: Vec<_> = skills.difference(&gold_skills).collect();
        let missing: Vec<_> = gold_skills.difference(&skills).collect();
        bad.push(format!("skills +{extra:?} -{missing:?}"));
    }
    if p.education.ordinal() != gold.education {
        bad.push(format!("education {} vs {}", p.education.ordinal(), gold.education));
    }
    if p.experience_months != gold.experience_months {
        bad.push(format!("experience {} vs {}", p.experience_months, gold.experience_months));
    }
    if !p.contact.addresses.iter().any(|a| a.ends_with(&gold.city)) {
        bad.push(format!("addresses {:?} lack {:?}", p.contact.addresses, gold.city));
    }
    if p.languages != gold.languages {
        bad.push(format!("languages {:?} vs {:?}", p.languages, gold.languages));
    }
    bad
}

#[test]
fn every_resume_matches_gold() {
    let dir = cvmatch_corpus::fixture_dir();
    let manifest = cvmatch_corpus::load_manifest(&dir).unwrap();
    let resources = Resources::bundled();
    let mut failures = Vec::new();
    for gold in &manifest.resumes {
        let p = parse_resume(&source(&dir, &gold.file), &resources, clock(&manifest)).unwrap();
        let bad = field_diffs(&p, gold);
        if !bad.is_empty() {
            failures.push(format!("{} ({}): {}", gold.id, gold.layout, bad.join("; ")));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn generator_vocabulary_resolves_in_lexicon() {
    use cvmatch_core::fuzzy::fold;
    let lexicon = cvmatch_core::extract::SkillLexicon::bundled();
    for (id, canonical, french) in cvmatch_corpus::pools::SKILLS {
        let entry = lexicon.get(id).unwrap_or_else(|| panic!("{id} missing from lexicon"));
        assert_eq!(&entry.canonical, canonical);
        for surface in [*canonical, *french].into_iter().filter(|s| !s.is_empty()) {
            let hit = lexicon.lookup(&fold(surface)).unwrap();
            assert_eq!(lexicon.entry(hit.entry).id, *id, "{surface}");
        }
    }
    for (id, alias) in cvmatch_corpus::pools::ALIASES {
        assert_eq!(lexicon.entry(lexicon.lookup(&fold(alias)).unwrap().entry).id, *id, "{alias}");
    }
}
