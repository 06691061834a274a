//! `gce`: main-content extraction and evaluation over rendered-DOM snapshots.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 extraction failed.

mod config;
mod corpus;
mod eval;
mod extract;
mod stats;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gce_core::{BandMode, SelectionOrder};

use config::RunConfig;

const EXIT_INPUT: u8 = 1;
const EXIT_FAILED: u8 = 2;

#[derive(Parser)]
#[command(
    name = "gce",
    version,
    about = "Grid-centering-expanding main content extraction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// TOML run configuration.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Extraction band reading used by diagnostics.
    #[arg(long, value_enum)]
    band_mode: Option<BandArg>,
    /// Comma-separated candidate priority, e.g. "3best,2best,1best".
    #[arg(long, value_name = "SLOTS")]
    selection_order: Option<String>,
}

#[derive(Args)]
struct CorpusArgs {
    /// Directory of snapshot JSON files.
    corpus: Option<PathBuf>,
    /// Directory of ground-truth JSON files named like the snapshots.
    truth: Option<PathBuf>,
    /// Worker threads (0 = all cores).
    #[arg(long, short)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BandArg {
    Centers,
    Literal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Baseline {
    Body,
}

#[derive(Subcommand)]
enum Command {
    /// Extract the main content of one snapshot.
    Extract {
        snapshot: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Write the result JSON here instead of stdout.
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Print the candidate table to stderr.
        #[arg(long)]
        explain: bool,
        /// Write the grid, exclusion mask, centers and seeds as JSON.
        #[arg(long, value_name = "FILE")]
        dump_grid: Option<PathBuf>,
    },
    /// Score extraction over a corpus with the LCS and block measures.
    Eval {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        common: Common,
        /// Directory for report.json and report.csv (stdout JSON otherwise).
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Score another extractor's output (<page>.json ids, <page>.txt text).
        #[arg(long, value_name = "DIR", conflicts_with = "baseline")]
        external: Option<PathBuf>,
        /// Score a trivial baseline instead of GCE.
        #[arg(long, value_enum)]
        baseline: Option<Baseline>,
    },
    /// Midpoint-hit and band-overlap rates over a corpus.
    Stats {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        common: Common,
        /// Print the full summary as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print the effective configuration as TOML.
    Config {
        #[command(flatten)]
        common: Common,
    },
}

fn load_config(common: &Common) -> Result<RunConfig> {
    let mut cfg = RunConfig::load_or_default(common.config.as_deref())?;
    if let Some(mode) = common.band_mode {
        cfg.gce.band_mode = match mode {
            BandArg::Centers => BandMode::Centers,
            BandArg::Literal => BandMode::Literal,
        };
    }
    if let Some(order) = &common.selection_order {
        cfg.gce.selection_order = order.parse::<SelectionOrder>()?;
    }
    cfg.gce.validate()?;
    Ok(cfg)
}

fn corpus_paths<'a>(args: &'a CorpusArgs, cfg: &'a RunConfig) -> Result<(&'a Path, &'a Path)> {
    let corpus = args
        .corpus
        .as_deref()
        .or(cfg.corpus.as_deref())
        .context("no corpus directory given")?;
    let truth = args
        .truth
        .as_deref()
        .or(cfg.truth.as_deref())
        .context("no truth directory given")?;
    Ok((corpus, truth))
}

fn report_problems(missing: &[String], errors: &[eval::PageError]) {
    for page in missing {
        eprintln!("missing truth: {page}");
    }
    for e in errors {
        eprintln!("error: {}: {}", e.page, e.error);
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Extract {
            snapshot,
            common,
            out,
            explain,
            dump_grid,
        } => {
            let cfg = load_config(&common)?;
            let opts = extract::Options {
                snapshot: &snapshot,
                out: out.as_deref(),
                explain,
                dump_grid: dump_grid.as_deref(),
            };
            Ok(if extract::run(&opts, &cfg.gce)? {
                0
            } else {
                EXIT_FAILED
            })
        }
        Command::Eval {
            corpus,
            common,
            out,
            external,
            baseline,
        } => {
            let cfg = load_config(&common)?;
            let (dir, truth) = corpus_paths(&corpus, &cfg)?;
            let entries = corpus::scan(dir, truth)?;
            let source = match (external, baseline) {
                (Some(d), _) => eval::Source::External(d),
                (None, Some(Baseline::Body)) => eval::Source::Body,
                (None, None) => eval::Source::Gce(cfg.gce.clone()),
            };
            let report = eval::evaluate(&entries, &source, corpus.jobs.unwrap_or(cfg.jobs))?;
            report_problems(&report.missing_truth, &report.errors);
            anyhow::ensure!(report.pages > 0, "no page could be scored");
            eval::write(&report, out.as_deref().or(cfg.out.as_deref()))?;
            Ok(if report.is_clean() { 0 } else { EXIT_INPUT })
        }
        Command::Stats {
            corpus,
            common,
            json,
        } => {
            let cfg = load_config(&common)?;
            let (dir, truth) = corpus_paths(&corpus, &cfg)?;
            let entries = corpus::scan(dir, truth)?;
            let summary = stats::run(&entries, cfg.gce.band_mode, corpus.jobs.unwrap_or(cfg.jobs))?;
            report_problems(&summary.missing_truth, &summary.errors);
            anyhow::ensure!(summary.pages > 0, "no page could be checked");
            if json {
                println!("{}", serde_json::to_string_pretty(&summary)?);
            } else {
                print!("{}", summary.text());
            }
            Ok(if summary.is_clean() { 0 } else { EXIT_INPUT })
        }
        Command::Config { common } => {
            print!("{}", load_config(&common)?.to_toml()?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
