use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use cvmatch_core::matching::{Criterion, JobDescription, WeightProfile};
use cvmatch_service::{router, Config, RankingReport, Service};
use tracing_subscriber::EnvFilter;

#[derive(Parser)]
#[command(name = "cvmatch", version, about = "Parse resumes and rank them against job descriptions")]
struct Cli {
    /// JSON config file; CVMATCH_* environment variables override it.
    #[arg(long, global = true, env = "CVMATCH_CONFIG")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse resumes into structured profiles.
    Parse {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Write one `<name>.json` per resume here instead of printing.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rank a directory of resumes against a job description.
    Match {
        #[arg(long)]
        job: PathBuf,
        #[arg(long)]
        resumes: PathBuf,
        /// Criterion weights `skills,experience,education,location`, rescaled to sum to 1.
        #[arg(long, value_parser = parse_weights)]
        weights: Option<WeightProfile>,
        /// Keep only the best `k` candidates.
        #[arg(long)]
        top: Option<usize>,
        /// Where the ranking JSON goes.
        #[arg(long, default_value = "ranking.json")]
        out: PathBuf,
    },
    /// Serve the HTTP API.
    Serve {
        #[arg(long, default_value = "127.0.0.1:8080")]
        addr: String,
        /// Directory store; overrides the configured one.
        #[arg(long)]
        store: Option<PathBuf>,
    },
}

fn parse_weights(s: &str) -> Result<WeightProfile, String> {
    WeightProfile::parse_relative(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    tracing_subscriber::fmt()
        .with_env_filter(EnvFilter::try_from_default_env().unwrap_or_else(|_| EnvFilter::new("warn")))
        .with_writer(std::io::stderr)
        .init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut config = Config::load(cli.config.as_deref())?;
    match cli.command {
        Command::Parse { files, out } => parse(&Service::from_config(config)?, &files, out.as_deref()),
        Command::Match { job, resumes, weights, top, out } => {
            config.store = None;
            let report = rank(&Service::from_config(config)?, &job, &resumes, weights, top)?;
            print_table(&report);
            fs::write(&out, serde_json::to_vec_pretty(&report)?)
                .with_context(|| format!("writing {}", out.display()))?;
            eprintln!("ranking written to {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Serve { addr, store } => {
            if store.is_some() {
                config.store = store;
            }
            serve(Service::from_config(config)?, &addr)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse(service: &Service, files: &[PathBuf], out: Option<&Path>) -> Result<ExitCode> {
    if let Some(dir) = out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let mut failed = 0;
    for file in files {
        let profile = match service.parse_path(file) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("error: {e}");
                failed += 1;
                continue;
            }
        };
        let json = serde_json::to_string_pretty(&profile)?;
        match out {
            Some(dir) => {
                let stem = file.file_stem().map_or("resume".into(), |s| s.to_string_lossy());
                let target = dir.join(format!("{stem}.json"));
                fs::write(&target, json + "\n").with_context(|| format!("writing {}", target.display()))?;
            }
            None => println!("{json}"),
        }
    }
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

/// Files in `dir`, sorted by name; hidden files are skipped.
fn resume_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).with_context(|| format!("reading {}", dir.display()))? {
        let path = entry?.path();
        let hidden = path.file_name().is_some_and(|n| n.to_string_lossy().starts_with('.'));
        if path.is_file() && !hidden {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

fn rank(
    service: &Service,
    job: &Path,
    resumes: &Path,
    weights: Option<WeightProfile>,
    top: Option<usize>,
) -> Result<RankingReport> {
    let text = fs::read_to_string(job).with_context(|| format!("reading {}", job.display()))?;
    let job: JobDescription = serde_json::from_str(&text).with_context(|| format!("parsing {}", job.display()))?;
    let mut profiles = Vec::new();
    for file in resume_files(resumes)? {
        match service.parse_path(&file) {
            Ok(p) => profiles.push((cvmatch_service::service::file_name(&file), p)),
            Err(e) => eprintln!("skipping: {e}"),
        }
    }
    if profiles.is_empty() {
        bail!("no readable resumes in {}", resumes.display());
    }
    let pairs: Vec<(&str, &_)> = profiles.iter().map(|(id, p)| (id.as_str(), p)).collect();
    Ok(service.rank_profiles(&job, &pairs, weights, top)?)
}

fn print_table(report: &RankingReport) {
    let width = report.entries.iter().map(|e| e.candidate_id.len()).max().unwrap_or(9).max(9);
    println!(
        "job {}  weights {}  provider {}  ({} candidates)",
        report.job_id, report.weights, report.provider_id, report.candidate_count
    );
    println!(
        "{:>4}  {:<width$}  {:>7}  {:>6}  {:>6}  {:>6}  {:>6}",
        "rank", "candidate", "total", "skills", "exp", "edu", "loc"
    );
    for e in &report.entries {
        let raw = |c: Criterion| e.breakdown.iter().find(|s| s.criterion == c).map_or(0.0, |s| s.raw);
        println!(
            "{:>4}  {:<width$}  {:>7.4}  {:>6.3}  {:>6.3}  {:>6.3}  {:>6.3}",
            e.rank,
            e.candidate_id,
            e.total,
            raw(Criterion::Skills),
            raw(Criterion::Experience),
            raw(Criterion::Education),
            raw(Criterion::Location)
        );
    }
}

fn serve(service: Service, addr: &str) -> Result<()> {
    let runtime = tokio::runtime::Runtime::new()?;
    runtime.block_on(async {
        let listener = tokio::net::TcpListener::bind(addr).await.with_context(|| format!("binding {addr}"))?;
        let health = service.health();
        tracing::warn!(addr = %listener.local_addr()?, provider = %health.provider_id, store = %health.store, "listening");
        eprintln!("listening on http://{}", listener.local_addr()?);
        axum::serve(listener, router(Arc::new(service)))
            .with_graceful_shutdown(async {
                let _ = tokio::signal::ctrl_c().await;
            })
            .await?;
        Ok(())
    })
}
