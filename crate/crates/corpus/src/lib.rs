//! Deterministic synthetic resume corpus with gold annotations.
//!
//! Resumes come in English and French, as plain text, one-column PDFs and
//! two-column PDFs. Alongside them the generator writes the expected
//! extraction for each resume, the expected reading order of each PDF, and
//! ranking scenarios where one candidate is known to fit the job best.

pub mod layout;
pub mod pdf;
pub mod pools;
pub mod render;
pub mod spec;

use std::fs;
use std::io;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use layout::PageGold;
use pools::Lang;
use spec::{GoldResume, Requirements, ResumeSpec, CLOCK};

pub const DEFAULT_SEED: u64 = 0x5eed_2025;
pub const RESUME_COUNT: usize = 36;
pub const SCENARIO_COUNT: usize = 10;
pub const DISTRACTORS: usize = 20;

pub const MANIFEST: &str = "manifest.json";
pub const BLOCKS: &str = "blocks.json";
pub const SCENARIOS: &str = "scenarios.json";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    /// Reference month, `YYYY-MM`, for ongoing jobs.
    pub clock: String,
    pub resumes: Vec<GoldResume>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocumentBlocks {
    pub file: String,
    pub pages: Vec<PageGold>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockManifest {
    pub documents: Vec<DocumentBlocks>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub id: String,
    pub job_file: String,
    /// Candidate id of the best fit.
    pub gold: String,
    /// Candidate id to resume file.
    pub candidates: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioManifest {
    pub scenarios: Vec<Scenario>,
}

/// Every generated file, relative path and contents.
#[derive(Debug, Clone, PartialEq)]
pub struct Corpus {
    pub files: Vec<(String, Vec<u8>)>,
}

impl Corpus {
    pub fn get(&self, path: &str) -> Option<&[u8]> {
        self.files.iter().find(|(p, _)| p == path).map(|(_, b)| b.as_slice())
    }

    pub fn write_to(&self, dir: &Path) -> io::Result<()> {
        for (path, bytes) in &self.files {
            let target = dir.join(path);
            if let Some(parent) = target.parent() {
                fs::create_dir_all(parent)?;
            }
            fs::write(target, bytes)?;
        }
        Ok(())
    }
}

fn json<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("manifest serializes");
    out.push(b'\n');
    out
}

#[derive(Clone, Copy, PartialEq)]
enum Format {
    Text,
    OneColumn,
    TwoColumn,
}

fn emit<R: Rng>(
    rng: &mut R,
    spec: &ResumeSpec,
    format: Format,
    stem: &str,
) -> (String, Vec<u8>, Option<Vec<PageGold>>) {
    match format {
        Format::Text => {
            let blocks = render::render(rng, spec, 0);
            (format!("{stem}.txt"), render::to_text(rng, &blocks).into_bytes(), None)
        }
        Format::OneColumn => {
            let blocks = render::render(rng, spec, 0);
            let (lines, gold) = layout::single_column(rng, &blocks);
            (format!("{stem}.pdf"), pdf::write_pdf(&lines, gold.len()), Some(gold))
        }
        Format::TwoColumn => {
            let blocks = render::render(rng, spec, layout::SIDEBAR_CHARS);
            let (lines, gold) = layout::two_column(rng, &blocks);
            (format!("{stem}.pdf"), pdf::write_pdf(&lines, 1), Some(gold))
        }
    }
}

fn resumes(rng: &mut ChaCha8Rng, files: &mut Vec<(String, Vec<u8>)>) -> (Manifest, BlockManifest) {
    let mut gold = Vec::new();
    let mut documents = Vec::new();
    for i in 0..RESUME_COUNT {
        let id = format!("r{:02}", i + 1);
        let lang = if i % 2 == 0 { Lang::Fr } else { Lang::En };
        let (format, layout_name) = match i * 3 / RESUME_COUNT {
            0 => (Format::Text, "text"),
            1 => (Format::OneColumn, "pdf-1col"),
            _ => (Format::TwoColumn, "pdf-2col"),
        };
        let spec = spec::generate(rng, &id, lang, &Requirements::default());
        let (name, bytes, pages) = emit(rng, &spec, format, &format!("resumes/{id}"));
        gold.push(spec.gold(&name, layout_name));
        if let Some(pages) = pages {
            documents.push(DocumentBlocks { file: name.clone(), pages });
        }
        files.push((name, bytes));
    }
    (Manifest { clock: format!("{:04}-{:02}", CLOCK.0, CLOCK.1), resumes: gold }, BlockManifest { documents })
}

fn scenario(rng: &mut ChaCha8Rng, index: usize, files: &mut Vec<(String, Vec<u8>)>) -> Scenario {
    let id = format!("s{:02}", index + 1);
    let lang = if index.is_multiple_of(2) { Lang::Fr } else { Lang::En };
    let all: Vec<&str> = pools::SKILLS.iter().map(|s| s.0).collect();
    let n = rng.gen_range(3..=6);
    let required: Vec<String> = all.choose_multiple(rng, n).map(|s| s.to_string()).collect();
    let months = 12 * rng.gen_range(2..=5);
    let education = rng.gen_range(2..=3u8);
    let city = pools::CITIES.choose(rng).unwrap().to_string();

    let job_file = format!("scenarios/{id}/job.json");
    let job = serde_json::json!({
        "id": id,
        "title": match lang { Lang::En => pools::ROLES_EN.choose(rng), Lang::Fr => pools::ROLES_FR.choose(rng) },
        "required_skills": required.iter().map(|s| pools::skill(s).1).collect::<Vec<_>>(),
        "min_experience_months": months,
        "required_education": education,
        "location": city,
        "language": lang.code(),
    });
    files.push((job_file.clone(), json(&job)));

    let gold_slot = rng.gen_range(0..=DISTRACTORS);
    let full_skill_distractors = rng.gen_range(0..=2);
    let mut candidates = Vec::new();
    let mut gold = String::new();
    let mut distractor = 0;
    for slot in 0..=DISTRACTORS {
        let cid = format!("{id}-c{:02}", slot + 1);
        let lang = if rng.gen_bool(0.5) { Lang::Fr } else { Lang::En };
        let req = if slot == gold_slot {
            gold = cid.clone();
            Requirements {
                skills: Some(required.clone()),
                experience_months: Some(months + 12),
                education: Some((education + rng.gen_range(0..=1)).min(4)),
                city: Some(city.clone()),
            }
        } else {
            distractor += 1;
            if distractor <= full_skill_distractors {
                // Every skill, but clearly short on experience.
                Requirements {
                    skills: Some(required.clone()),
                    experience_months: Some(months / 4),
                    education: Some(rng.gen_range(1..=education)),
                    city: None,
                }
            } else {
                let keep = rng.gen_range(0..required.len());
                Requirements {
                    skills: Some(required.choose_multiple(rng, keep).cloned().collect()),
                    experience_months: Some(rng.gen_range(3..=months * 2)),
                    education: Some(rng.gen_range(1..=4)),
                    city: None,
                }
            }
        };
        let spec = spec::generate(rng, &cid, lang, &req);
        let (file, bytes, _) = emit(rng, &spec, Format::Text, &format!("scenarios/{id}/{cid}"));
        files.push((file.clone(), bytes));
        candidates.push((cid, file));
    }
    Scenario { id, job_file, gold, candidates }
}

pub fn generate(seed: u64) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut files = Vec::new();
    let (manifest, blocks) = resumes(&mut rng, &mut files);
    let scenarios: Vec<Scenario> = (0..SCENARIO_COUNT).map(|i| scenario(&mut rng, i, &mut files)).collect();
    files.push((MANIFEST.to_string(), json(&manifest)));
    files.push((BLOCKS.to_string(), json(&blocks)));
    files.push((SCENARIOS.to_string(), json(&ScenarioManifest { scenarios })));
    Corpus { files }
}

pub fn load_manifest(dir: &Path) -> io::Result<Manifest> {
    Ok(serde_json::from_slice(&fs::read(dir.join(MANIFEST))?)?)
}

pub fn load_blocks(dir: &Path) -> io::Result<BlockManifest> {
    Ok(serde_json::from_slice(&fs::read(dir.join(BLOCKS))?)?)
}

pub fn load_scenarios(dir: &Path) -> io::Result<ScenarioManifest> {
    Ok(serde_json::from_slice(&fs::read(dir.join(SCENARIOS))?)?)
}

/// Committed fixture directory at the workspace root.
pub fn fixture_dir() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/corpus")
}
