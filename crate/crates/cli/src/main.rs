//! `nilcone`: reports on invariant distributions on the sl(2,ℝ) nilpotent cone.
//!
//! Exit codes: 0 when the report's check passes, 1 on bad arguments, 2 when
//! a computed result disagrees with the predicted one.

mod commands;
mod poly;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{CheckKind, ClassifyArgs, Report};
use nilcone::solver::DEFAULT_MAX_DEGREE;
use nilcone::GlobalQuery;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Mismatch(String),
}

impl From<nilcone::Error> for CliError {
    fn from(e: nilcone::Error) -> Self {
        use nilcone::Error as E;
        match e {
            E::NonScalarCasimir { .. } | E::NotInvariant | E::Contradiction(_) | E::NotGenuine(_) => {
                CliError::Mismatch(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<poly::ParseError> for CliError {
    fn from(e: poly::ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "nilcone", version, about = "Invariant distributions on the sl(2,R) nilpotent cone")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Matrices of V_n and its Casimir scalar
    Irrep {
        #[arg(long)]
        n: u32,
    },
    /// Basis of invariant transversal distributions up to a δ-order
    Kernel {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 6)]
        max_order: u32,
    },
    /// Casimir orbit of the seed and its change of basis
    Orbit {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 6)]
        max_order: u32,
    },
    /// Invariant solutions of p(□)φ = 0 near a half-cone
    Solve {
        #[arg(long)]
        n: u32,
        /// Monic polynomial in t, e.g. "t^2-3/2*t+1"
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 8)]
        max_order: u32,
    },
    /// Graded dimensions of the origin-supported invariants
    #[command(name = "supp0-dims")]
    Supp0Dims {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Decision table for an invariant open set given by the orbits it meets
    Classify {
        #[arg(long)]
        n: u32,
        /// The set contains the origin
        #[arg(long, overrides_with = "no_origin")]
        origin: bool,
        #[arg(long = "no-origin", overrides_with = "origin")]
        no_origin: bool,
        /// The set meets the half-cone N+
        #[arg(long)]
        nplus: bool,
        /// The set meets the half-cone N-
        #[arg(long)]
        nminus: bool,
        /// Also decide whether p(□)-finite cone-supported invariants vanish
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_order: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Quadrature checks against the moment-map measure
    Numcheck {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        kind: CheckKind,
        /// Gauss-Legendre points per axis
        #[arg(long, default_value_t = 128)]
        grid: usize,
        /// Gaussian width; 1 for invariance and obstruction, 0.2 for pairing
        #[arg(long)]
        sigma: Option<f64>,
    },
}

fn run(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Irrep { n } => commands::irrep(n),
        Command::Kernel { n, max_order } => commands::kernel(n, max_order),
        Command::Orbit { n, max_order } => commands::orbit(n, max_order),
        Command::Solve { n, poly, max_order } => commands::solve(n, &poly::parse_monic(&poly)?, max_order),
        Command::Supp0Dims { n, max_degree } => commands::supp0_dims(n, max_degree),
        Command::Classify { n, origin, no_origin, nplus, nminus, poly, max_order, max_degree } => {
            let poly = poly.as_deref().map(poly::parse_monic).transpose()?;
            commands::classify(&ClassifyArgs {
                query: GlobalQuery::new(n, origin && !no_origin, nplus, nminus),
                max_degree,
                poly,
                max_order,
            })
        }
        Command::Numcheck { n, kind, grid, sigma } => commands::numcheck(n, kind, grid, sigma),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(report) => {
            let text = match cli.format {
                Format::Table => format!("{}{}\n", report.table, report.verdict_line()),
                Format::Json => serde_json::to_string_pretty(&report.to_json()).expect("json") + "\n",
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Mismatch(msg)) => {
            println!("FAIL: {msg}");
            ExitCode::from(2)
        }
    }
}
