//! `courant-verify`: run property suites from a configuration file.
//!
//! Exit status: 0 when every property holds, 1 when one fails, 2 on a
//! usage or configuration error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use courant_verify::config::{parse_config, SuiteConfig};
use courant_verify::suites::SUITES;

#[derive(Parser, Debug)]
#[command(name = "courant-verify", version, about = "Check Courant and transgression identities on sampled inputs")]
struct Cli {
    /// Configuration file; defaults apply when omitted.
    #[arg(long, short)]
    config: Option<PathBuf>,
    /// Suite to run (repeatable). Overrides the configuration's list.
    #[arg(long = "suite", short = 's')]
    suites: Vec<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Also write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Print the available suites and exit.
    #[arg(long)]
    list_suites: bool,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("courant-verify: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.list_suites {
        for s in SUITES {
            let on = match s.applies {
                courant_verify::suites::Applies::Any => "any",
                courant_verify::suites::Applies::Exact => "exact",
                courant_verify::suites::Applies::Quadratic => "quadratic",
            };
            println!("{:<16} {:<14} {:<10} {}", s.id, s.module, on, s.summary);
        }
        return ExitCode::SUCCESS;
    }
    let mut cfg = match &cli.config {
        None => SuiteConfig::default(),
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return usage_error(format!("{}: {e}", path.display())),
            };
            match parse_config(&text) {
                Ok(c) => c,
                Err(e) => return usage_error(format!("{}: {e}", path.display())),
            }
        }
    };
    if !cli.suites.is_empty() {
        cfg.suites = cli.suites.clone();
    }
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(n) = cli.samples {
        if n == 0 {
            return usage_error("--samples must be at least 1");
        }
        cfg.samples = n;
    }
    let report = match courant_verify::run(&cfg) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, report.to_json() + "\n") {
            return usage_error(format!("{}: {e}", path.display()));
        }
    }
    println!("{report}");
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
