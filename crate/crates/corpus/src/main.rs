use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

/// Writes the synthetic resume corpus and its gold manifests.
#[derive(Parser)]
struct Args {
    /// Output directory.
    #[arg(long, default_value = "fixtures/corpus")]
    out: PathBuf,
    #[arg(long, default_value_t = cvmatch_corpus::DEFAULT_SEED)]
    seed: u64,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let corpus = cvmatch_corpus::generate(args.seed);
    match corpus.write_to(&args.out) {
        Ok(()) => {
            println!("wrote {} files to {}", corpus.files.len(), args.out.display());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("gen-corpus: {}: {e}", args.out.display());
            ExitCode::FAILURE
        }
    }
}
