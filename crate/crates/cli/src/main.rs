//! `morikawa`: command-line front end for the inscribed-square toolkit.

mod commands;
mod num;
mod svg;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Default tolerance for `mu`, overridable with `MORIKAWA_TOL`.
const DEFAULT_TOL: f64 = 1e-12;
const TOL_ENV: &str = "MORIKAWA_TOL";

#[derive(Parser)]
#[command(name = "morikawa", version, about = "Minimal squares inscribed between a line and two tangent circles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal side length mu(r) and its minimizer x_m.
    Mu {
        #[arg(long)]
        r: f64,
        /// Bracket width for x_m [default: $MORIKAWA_TOL or 1e-12]
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Side length over the tilt angle and z over (1 - 1/sqrt 2, 1).
    ///
    /// Writes theta,s to OUT and x,z to <stem>_z.<ext> beside it.
    Curve {
        #[arg(long)]
        r: f64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Contact profile of the inscribed square at one tilt angle.
    Classify {
        #[arg(long)]
        r: f64,
        #[arg(long)]
        theta: f64,
        /// Contact tolerance [default: 1e-9 max(1, r)]
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Exact coefficients of p(t, x) and its components at a rational t, as JSON.
    Poly {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exact terms of h(k, x, y), as JSON.
    Hpoly {
        #[arg(long)]
        out: PathBuf,
    },
    /// Frobenius cycle-type statistics of p(k, x) over sampled primes.
    Galois {
        #[arg(long)]
        k: String,
        #[arg(long, default_value_t = 500)]
        primes: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Residual checks for a comma-separated list of radii.
    Verify {
        #[arg(long = "r-list")]
        r_list: String,
    },
}

#[derive(Debug)]
pub enum CliError {
    Core(morikawa::Error),
    Usage(String),
    Io { path: PathBuf, source: std::io::Error },
    ChecksFailed(usize),
}

impl From<morikawa::Error> for CliError {
    fn from(e: morikawa::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if !e.is_input_error() => 1,
            CliError::ChecksFailed(_) => 1,
            _ => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Usage(m) => m.clone(),
            CliError::Io { path, source } => format!("cannot write {}: {source}", path.display()),
            CliError::ChecksFailed(n) => format!("{n} checks failed"),
        }
    }
}

fn default_tol() -> Result<f64, CliError> {
    match std::env::var(TOL_ENV) {
        Ok(v) => match v.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
            _ => Err(CliError::Usage(format!("{TOL_ENV} must be a positive number, got {v:?}"))),
        },
        Err(_) => Ok(DEFAULT_TOL),
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Mu { r, tol } => {
            let tol = match tol {
                Some(t) => t,
                None => default_tol()?,
            };
            commands::mu(r, tol)
        }
        Command::Curve { r, n, out, format } => commands::curve(r, n, &out, format),
        Command::Classify { r, theta, tol } => commands::classify_cmd(r, theta, tol),
        Command::Poly { t, out } => commands::poly(&t, &out),
        Command::Hpoly { out } => commands::hpoly(&out),
        Command::Galois { k, primes, seed, out } => commands::galois(&k, primes, seed, &out),
        Command::Verify { r_list } => {
            let (table, failed) = commands::verify(&r_list)?;
            print!("{table}");
            if failed > 0 {
                Err(CliError::ChecksFailed(failed))
            } else {
                Ok(String::new())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            let _ = std::io::stdout().flush();
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
