use clap::{Args, Parser, Subcommand};
use commvar::cli::{cache_gc, list_checks, run, LimitsConfig, RunConfig, CACHE_DIR_ENV};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "commvar", version, about = "Exact checks on the commuting variety of sl2 and sl3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks and write a JSON report.
    Verify(VerifyArgs),
    /// Print the check catalog.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Maintain the Gröbner basis cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// Remove entries with a stale format header.
    Gc {
        #[arg(long, env = CACHE_DIR_ENV)]
        cache_dir: PathBuf,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// `sl2`, `sl3` or a path to a JSON algebra.
    #[arg(long, default_value = "sl2")]
    algebra: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sample points for the pointwise checks.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Comma-separated check names, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    checks: Vec<String>,
    /// Gröbner budget per check, in seconds.
    #[arg(long, default_value_t = 600)]
    timeout: u64,
    #[arg(long, default_value_t = 1_000_000)]
    max_pairs: u64,
    #[arg(long, default_value_t = 30)]
    max_degree: u32,
    /// Report destination; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Enable the expensive sl3 checks.
    #[arg(long)]
    heavy: bool,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify(a) => {
            let config = RunConfig {
                algebra: a.algebra,
                seed: a.seed,
                sample_count: a.samples,
                limits: LimitsConfig {
                    max_pairs: a.max_pairs,
                    max_degree: a.max_degree,
                    timeout_s: a.timeout,
                },
                checks: a.checks,
                cache_dir: a.cache_dir,
                output: a.out,
                jobs: a.jobs,
                heavy: a.heavy,
            };
            let report = match run(&config) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("commvar: {e}");
                    return ExitCode::from(2);
                }
            };
            if let Err(e) = report.write(config.output.as_deref()) {
                eprintln!("commvar: {e}");
                return ExitCode::from(2);
            }
            let s = &report.summary;
            eprintln!("passed {}, failed {}, skipped {}", s.passed, s.failed, s.skipped);
            ExitCode::from(report.exit_code() as u8)
        }
        Command::List { json } => {
            if json {
                println!("{}", serde_json::to_string_pretty(list_checks()).expect("catalog serializes"));
            } else {
                for c in list_checks() {
                    println!("{:<24} {:<34} {}", c.name, c.anchor, c.summary);
                }
            }
            ExitCode::SUCCESS
        }
        Command::Cache {
            action: CacheAction::Gc { cache_dir },
        } => match cache_gc(&cache_dir) {
            Ok(stats) => {
                println!("{}", serde_json::to_string_pretty(&stats).expect("stats serialize"));
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("commvar: {e}");
                ExitCode::from(2)
            }
        },
    }
}
