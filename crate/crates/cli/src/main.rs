use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use altrank_cli::{
    cmd_catalog, cmd_enumerate_rank3, cmd_generate, cmd_reduce, cmd_sweep, cmd_verify, exit,
    GraphFormat,
};
use altrank_core::config::{Config, CONFIG_ENV};
use altrank_core::verifier::VerifyOptions;

#[derive(Parser, Debug)]
#[command(
    name = "altrank",
    version,
    about = "Build and certify string C-group representations of alternating groups"
)]
struct Cli {
    /// TOML config file with intersection_threshold, seed, word_bound, jobs.
    #[arg(long, global = true, env = CONFIG_ENV)]
    config: Option<PathBuf>,
    /// Seed for the giant certificate word search.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Maximum number of words tried by the certificate search.
    #[arg(long, global = true)]
    word_bound: Option<usize>,
    /// Groups up to this order are intersected by enumeration.
    #[arg(long, global = true)]
    intersection_threshold: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Start {
    Simplex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the CPR graph chosen for (n, rank).
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Use the alternate rank-5 family when n = 3 mod 4.
        #[arg(long)]
        alt_rank5: bool,
    },
    /// Certify one (n, rank) instance and print its report.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rank: usize,
        /// Attach a giant certificate and refute cheaply before the exact order.
        #[arg(long)]
        fast_id: bool,
        #[arg(long)]
        alt_rank5: bool,
        #[arg(long)]
        no_timings: bool,
    },
    /// Certify every admissible rank for each n in a range.
    Sweep {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Worker threads; 0 means one per core.
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the result here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        fast_id: bool,
        /// Omit timings so the output is byte-deterministic.
        #[arg(long)]
        no_timings: bool,
    },
    /// Trace repeated rank reduction starting from the simplex.
    Reduce {
        #[arg(long, value_enum, default_value = "simplex")]
        start: Start,
        #[arg(long)]
        n: usize,
    },
    /// Exhaustively search rank-3 representations of A_n for 5 <= n <= 8.
    EnumerateRank3 {
        #[arg(long)]
        n: usize,
    },
    /// List construction families with their admissible instances.
    Catalog {
        #[arg(long, default_value_t = 12)]
        n_min: usize,
        #[arg(long, default_value_t = 24)]
        n_max: usize,
    },
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

/// `Ok(code)` for completed runs; `Err` maps to the usage exit code.
fn run(cli: Cli) -> Result<i32> {
    let mut config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    if let Some(bound) = cli.word_bound {
        config.word_bound = bound;
    }
    if let Some(t) = cli.intersection_threshold {
        config.intersection_threshold = t;
    }
    let base = VerifyOptions::from_config(&config);

    match cli.command {
        Command::Generate {
            n,
            rank,
            format,
            alt_rank5,
        } => {
            let format = match format {
                Format::Dot => GraphFormat::Dot,
                Format::Json => GraphFormat::Json,
            };
            print!("{}", cmd_generate(n, rank, format, alt_rank5)?);
            Ok(exit::PASS)
        }
        Command::Verify {
            n,
            rank,
            fast_id,
            alt_rank5,
            no_timings,
        } => {
            let opts = VerifyOptions {
                fast_id,
                alt_rank5,
                timings: !no_timings,
                ..base
            };
            let report = cmd_verify(n, rank, &opts)?;
            print_json(&report)?;
            Ok(if report.passed {
                exit::PASS
            } else {
                exit::FAIL
            })
        }
        Command::Sweep {
            n_min,
            n_max,
            jobs,
            out,
            fast_id,
            no_timings,
        } => {
            let opts = VerifyOptions {
                fast_id,
                timings: !no_timings,
                ..base
            };
            let result = cmd_sweep(n_min, n_max, jobs.unwrap_or(config.jobs), &opts)?;
            match out {
                Some(path) => {
                    let mut text = serde_json::to_string_pretty(&result)?;
                    text.push('\n');
                    std::fs::write(&path, text)
                        .with_context(|| format!("writing {}", path.display()))?;
                }
                None => print_json(&result)?,
            }
            Ok(if result.passed {
                exit::PASS
            } else {
                exit::FAIL
            })
        }
        Command::Reduce {
            start: Start::Simplex,
            n,
        } => {
            print_json(&cmd_reduce(n)?)?;
            Ok(exit::PASS)
        }
        Command::EnumerateRank3 { n } => {
            if n > 6 {
                eprintln!("note: exhaustive search on {n} points may take a while");
            }
            print_json(&cmd_enumerate_rank3(n)?)?;
            Ok(exit::PASS)
        }
        Command::Catalog { n_min, n_max } => {
            print_json(&cmd_catalog(n_min, n_max))?;
            Ok(exit::PASS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::PASS
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            exit::USAGE
        }
    };
    ExitCode::from(code as u8)
}
