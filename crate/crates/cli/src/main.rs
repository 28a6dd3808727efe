//! `fano-chern`: positivity checks of `ch_k(X)` for example Fano families,
//! parameter censuses, minimal-family lookups and exact verification suites.

mod report;
mod rows;
mod verify;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fano_chern::families::{enumerate, enumerate_ci, FamilyKind, FamilySpec};
use fano_chern::Error;
use rayon::prelude::*;

use report::{emit, render, Format, Report};
use rows::{family_row, pair_item};
use verify::{Bounds, Suite};

#[derive(Parser, Debug)]
#[command(name = "fano-chern", version, about = "Exact Chern-character positivity for Fano manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Write the report to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
    /// Worker threads for censuses and suites (default: all cores).
    #[arg(long, value_name = "N", global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verdict, closed form and minimal pair for one family, e.g. `G[2,5]`.
    Check {
        spec: String,
        #[arg(long, default_value_t = 2)]
        k: u32,
    },
    /// One row per family in the given parameter ranges.
    Census {
        /// CI, G, GH, OG, SG, SGdeg, G2P or PP.
        kind: String,
        #[arg(long, default_value_t = 2)]
        k: u32,
        /// First family parameter (`a` for PP), inclusive `a..b`.
        #[arg(long, value_parser = parse_range)]
        k_range: Option<RangeInclusive<u32>>,
        /// Second family parameter (`b` for PP; ambient `n` for CI), inclusive `a..b`.
        #[arg(long, value_parser = parse_range)]
        n_range: Option<RangeInclusive<u32>>,
        /// Single ambient dimension for CI.
        #[arg(long)]
        n: Option<u32>,
        /// Maximum number of equations for CI.
        #[arg(long, default_value_t = 3)]
        max_c: u32,
    },
    /// The polarized minimal family of lines through a general point.
    MinimalFamily { spec: String },
    /// Exact verification suites.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 10)]
        n_max: u32,
        #[arg(long)]
        d_max: Option<u32>,
        #[arg(long)]
        k_max: Option<u32>,
        #[arg(long, default_value_t = 6)]
        m_max: u32,
        #[arg(long, default_value_t = 3)]
        max_c: u32,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let parse = |x: &str| x.trim().parse::<u32>().map_err(|_| format!("`{x}` is not a non-negative integer"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let a = parse(s)?;
            (a, a)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidParameter(_) | Error::NoClosedForm { .. } | Error::NoMinimalPair(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Failed(other.to_string()),
        }
    }
}

fn output<T: serde::Serialize + report::CsvRow>(cli: &Cli, report: Report<T>) -> Result<bool, Failure> {
    let bytes = render(&report, cli.format).map_err(Failure::Failed)?;
    emit(&bytes, cli.out.as_deref()).map_err(|e| Failure::Failed(e.to_string()))?;
    Ok(report.pass)
}

fn run(cli: &Cli, command: String) -> Result<bool, Failure> {
    match &cli.command {
        Command::Check { spec, k } => {
            let spec: FamilySpec = spec.parse()?;
            let row = family_row(&spec, *k)?;
            let pass = row.agree;
            output(cli, Report::new(command, vec![row], pass))
        }
        Command::Census { kind, k, k_range, n_range, n, max_c } => {
            let kind: FamilyKind = kind.parse()?;
            let specs = match kind {
                FamilyKind::CompleteIntersection => {
                    let ns = n.map(|n| n..=n).or_else(|| n_range.clone()).unwrap_or(1..=12);
                    let mut all: Vec<FamilySpec> = ns.flat_map(|n| enumerate_ci(n, *max_c)).collect();
                    all.sort();
                    all
                }
                _ => enumerate(kind, k_range.clone().unwrap_or(2..=4), n_range.clone().unwrap_or(4..=12)),
            };
            let rows = specs.par_iter().map(|s| family_row(s, *k)).collect::<fano_chern::Result<Vec<_>>>()?;
            let pass = rows.iter().all(|r| r.agree);
            output(cli, Report::new(command, rows, pass))
        }
        Command::MinimalFamily { spec } => {
            let spec: FamilySpec = spec.parse()?;
            output(cli, Report::new(command, vec![pair_item(&spec)?], true))
        }
        Command::Verify { suite, n_max, d_max, k_max, m_max, max_c } => {
            let bounds = Bounds { n_max: *n_max, d_max: *d_max, k_max: *k_max, m_max: *m_max, max_c: *max_c };
            verify::check_bounds(*suite, &bounds).map_err(Failure::Usage)?;
            let items = verify::run(*suite, &bounds)?;
            for it in &items {
                for f in &it.failures {
                    eprintln!("FAILED {} at {}: {} != {} ({})", f.name, f.at, f.lhs, f.rhs, it.at);
                }
            }
            let pass = items.iter().all(|i| i.pass);
            output(cli, Report::new(command, items, pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli, command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::parse_range;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..4"), Ok(2..=4));
        assert_eq!(parse_range("2..=4"), Ok(2..=4));
        assert_eq!(parse_range("7"), Ok(7..=7));
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("a..3").is_err());
    }
}
