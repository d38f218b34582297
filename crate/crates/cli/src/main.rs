// SPDX-License-Identifier: Apache-2.0 OR MIT

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use delannoy_cli::grid::{parse_grid, GridError};
use delannoy_cli::output::{scan_json, scan_text, verify_json, verify_text, Table};
use delannoy_cli::run::{run_plan, scan_parallel};
use delannoy_core::analysis::{
    check_positivity, check_ratio_bound, default_conjecture_grid, default_inequality_grid,
    scan_conjecture, GridSpec, ScanReport,
};
use delannoy_core::dcore::{d_eval_sequence, d_sequence, delannoy_dp};
use delannoy_core::exactnum::parse_rational;
use delannoy_core::verify::{Fault, SuiteConfig};
use delannoy_core::{EvalPoint, ExactRational, Route};

/// Writes one line to stdout; a closed pipe ends the process quietly.
fn emit(args: fmt::Arguments<'_>) {
    if let Err(e) = writeln!(io::stdout().lock(), "{args}") {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: write stdout: {e}");
        std::process::exit(2);
    }
}

macro_rules! out {
    ($($t:tt)*) => { emit(format_args!($($t)*)) };
}

#[derive(Parser)]
#[command(name = "delannoy", version, about = "Exact generalized Delannoy polynomials and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Claim {
    TuranSign,
    RatioLowerBound,
    SignAndPowerBound,
    All,
}

fn rational(s: &str) -> Result<ExactRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn route(s: &str) -> Result<Route, String> {
    Route::from_name(s).ok_or_else(|| {
        let names: Vec<_> = Route::ALL.iter().map(|r| r.name()).collect();
        format!("unknown route {s:?} (expected one of {})", names.join(", "))
    })
}

fn fault(s: &str) -> Result<Fault, String> {
    let (id, n) = s.rsplit_once(':').ok_or("expected ID:N")?;
    let n = n.parse().map_err(|_| format!("bad case index {n:?}"))?;
    Ok(Fault::new(id, n))
}

fn depth_override(s: &str) -> Result<(String, usize), String> {
    let (id, d) = s.split_once('=').ok_or("expected ID=DEPTH")?;
    let d = d.parse().map_err(|_| format!("bad depth {d:?}"))?;
    Ok((id.to_string(), d))
}

#[derive(Subcommand)]
enum Command {
    /// Exact value of d_n^(r)(x).
    Eval {
        #[arg(short)]
        n: usize,
        #[arg(short, allow_hyphen_values = true, value_parser = rational)]
        r: ExactRational,
        #[arg(short, allow_hyphen_values = true, value_parser = rational)]
        x: ExactRational,
    },
    /// Canonical polynomial d_n^(r)(x) in x and r.
    Poly {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value = "direct", value_parser = route)]
        route: Route,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Table of d_n^(r)(x) for n = 0..=n_max at several x.
    Table {
        #[arg(long)]
        n_max: usize,
        #[arg(short, allow_hyphen_values = true, value_parser = rational)]
        r: ExactRational,
        /// Comma separated, e.g. `0,1,-1/2`.
        #[arg(short, allow_hyphen_values = true, value_delimiter = ',', required = true, value_parser = rational)]
        x: Vec<ExactRational>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run identity verifiers; exit 1 if any fails.
    Verify {
        /// Only these ids (comma separated).
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// Depth for every selected family instead of its default.
        #[arg(long)]
        depth: Option<usize>,
        /// Per-family depth, `ID=DEPTH`; may be repeated.
        #[arg(long = "set", value_parser = depth_override)]
        set: Vec<(String, usize)>,
        /// Worker threads (defaults to available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        /// Print the available ids and default depths and exit.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Add 1 to the first sub-identity of case N of family ID.
        #[arg(long, hide = true, value_parser = fault)]
        inject_fault: Option<Fault>,
    },
    /// Exact-sign scans of the inequality claims; exit 1 on a violation.
    Scan {
        /// Grid file; defaults to the built-in grid for the claim.
        #[arg(long)]
        grid: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "turan-sign")]
        claim: Claim,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Delannoy number D(n, m) by lattice-path counting.
    Delannoy {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        m: usize,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("unknown identity id {0:?}")]
    UnknownId(String),
    #[error("grid: {0}")]
    Grid(#[from] GridError),
    #[error("read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("format {0} is not supported by this command")]
    Format(&'static str),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

/// A claim, its scanner, and its built-in grid.
type ClaimScan = (Claim, fn(&GridSpec) -> ScanReport, fn() -> GridSpec);

/// Claim outcome: `true` when every check held.
type Outcome = Result<bool, CliError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            // --help / --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let first = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error");
            eprintln!("{}", first.trim());
            return ExitCode::from(2);
        }
    };
    match dispatch(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Eval { n, r, x } => {
            let v = d_eval_sequence(n, &EvalPoint::new(r, x)).pop().expect("non-empty");
            out!("{v}");
            Ok(true)
        }
        Command::Poly { n, route, format } => {
            let p = d_sequence(route, n).get(n).to_string();
            match format {
                Format::Text => out!("{p}"),
                Format::Json => out!("{}", serde_json::json!({ "n": n, "route": route.name(), "poly": p })),
                Format::Csv => return Err(CliError::Format("csv")),
            }
            Ok(true)
        }
        Command::Table { n_max, r, x, format } => {
            let columns: Vec<Vec<ExactRational>> = x
                .iter()
                .map(|x| d_eval_sequence(n_max, &EvalPoint::new(r.clone(), x.clone())))
                .collect();
            let rows = (0..=n_max).map(|n| columns.iter().map(|c| c[n].clone()).collect()).collect();
            let table = Table { r, xs: x, rows };
            match format {
                Format::Csv => out!("{}", table.csv()?.trim_end()),
                Format::Json => out!("{}", table.json()),
                Format::Text => out!("{}", table.text()),
            }
            Ok(true)
        }
        Command::Verify {
            only,
            depth,
            set,
            jobs,
            list,
            format,
            inject_fault,
        } => {
            let config = SuiteConfig {
                depths: set.into_iter().collect::<BTreeMap<_, _>>(),
                uniform_depth: depth,
                only,
                fault: inject_fault,
            };
            let plan = config.plan().map_err(CliError::UnknownId)?;
            if let Some(f) = &config.fault {
                if !plan.iter().any(|(id, _)| *id == f.identity_id) {
                    return Err(CliError::UnknownId(f.identity_id.clone()));
                }
            }
            if list {
                for (id, d) in &plan {
                    out!("{id} {d}");
                }
                return Ok(true);
            }
            if matches!(format, Format::Csv) {
                return Err(CliError::Format("csv"));
            }
            let reports = run_plan(&plan, config.fault.as_ref(), jobs);
            for r in &reports {
                match format {
                    Format::Json => out!("{}", verify_json(r)),
                    _ => out!("{}", verify_text(r)),
                }
            }
            Ok(reports.iter().all(|r| r.passed()))
        }
        Command::Scan {
            grid,
            claim,
            n_max,
            jobs,
            format,
        } => {
            if matches!(format, Format::Csv) {
                return Err(CliError::Format("csv"));
            }
            let file_grid = match &grid {
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
                        path: path.display().to_string(),
                        source,
                    })?;
                    Some(parse_grid(&text, n_max)?)
                }
                None => None,
            };
            let pick = |default: fn() -> GridSpec| -> GridSpec {
                let mut g = file_grid.clone().unwrap_or_else(default);
                if let Some(n) = n_max {
                    g.n_max = n;
                }
                g
            };
            let scans: [ClaimScan; 3] = [
                (Claim::TuranSign, scan_conjecture, default_conjecture_grid),
                (Claim::RatioLowerBound, check_ratio_bound, default_inequality_grid),
                (Claim::SignAndPowerBound, check_positivity, default_inequality_grid),
            ];
            let mut ok = true;
            for (c, scan, default) in scans {
                if claim != Claim::All && claim != c {
                    continue;
                }
                let report = scan_parallel(&pick(default), scan, jobs);
                ok &= report.passed();
                match format {
                    Format::Json => out!("{}", scan_json(&report)),
                    _ => out!("{}", scan_text(&report)),
                }
            }
            Ok(ok)
        }
        Command::Delannoy { n, m } => {
            out!("{}", delannoy_dp(n, m));
            Ok(true)
        }
    }
}
