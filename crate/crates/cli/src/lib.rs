//! Argument parsing and dispatch for the `affstan` binary.
//!
//! [`run`] never touches the process: it returns the exit code and both
//! output streams, so the golden selftest and the integration tests drive
//! the exact code path the binary uses.

mod commands;
mod selftest;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use commands::Report;

#[derive(Parser, Debug)]
#[command(
    name = "affstan",
    version,
    about = "Affine Stanley symmetric functions, involution atoms and transition formulas"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Period; inferred from a window, required for cycle or word input
    #[arg(short = 'n', global = true)]
    pub n: Option<usize>,
    /// Basis for symmetric function output
    #[arg(long, value_enum, default_value_t = BasisArg::M, global = true)]
    pub basis: BasisArg,
    /// Print JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Override the index range scanned by cover searches
    #[arg(long, global = true, value_name = "B")]
    pub bound: Option<i64>,
    /// Rescan every cover search with a wider range and fail on any difference
    #[arg(long, global = true)]
    pub widen: bool,
    /// Write output to FILE instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Refuse inputs whose length or involution length exceeds this
    #[arg(long, global = true, default_value_t = 14)]
    pub max_length: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisArg {
    /// monomial
    #[value(name = "m")]
    M,
    /// affine Schur
    #[value(name = "F")]
    F,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyKind {
    Covering,
    Toggling,
    Transition,
    ConjectureOmega,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Small,
    Full,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Affine Stanley symmetric function of a permutation
    Stanley { perm: String },
    /// Stanley symmetric function of an affine involution
    InvStanley { inv: String },
    /// Atoms of an involution, one window per line
    Atoms { inv: String },
    /// Hecke atoms of an involution
    HeckeAtoms { inv: String },
    /// Code of a permutation, or involution code and visible descents
    Code {
        input: String,
        #[arg(long)]
        involution: bool,
    },
    /// Shape of a permutation or (with --involution) of an involution
    Shape {
        input: String,
        #[arg(long)]
        involution: bool,
    },
    /// Minimal atom
    AlphaMin { inv: String },
    /// Maximal atom
    AlphaMax { inv: String },
    /// Covering transformation τ_ij
    Tau {
        inv: String,
        #[arg(allow_negative_numbers = true)]
        i: i64,
        #[arg(allow_negative_numbers = true)]
        j: i64,
    },
    /// Both Φ sets of an involution at r
    Phi {
        inv: String,
        #[arg(allow_negative_numbers = true)]
        r: i64,
    },
    /// Both Ψ sets of a permutation at r
    Psi {
        perm: String,
        #[arg(allow_negative_numbers = true)]
        r: i64,
    },
    /// Lam–Shimozono transition identity at r
    Transition {
        perm: String,
        #[arg(short = 'r', allow_negative_numbers = true)]
        r: i64,
    },
    /// Involution transition identity at the cycle starting at p
    InvTransition {
        inv: String,
        #[arg(short = 'p', allow_negative_numbers = true)]
        p: i64,
    },
    /// Toggle an atom across a non-covering extension π ⋖ π t_ij
    Toggle {
        inv: String,
        perm: String,
        #[arg(allow_negative_numbers = true)]
        i: i64,
        #[arg(allow_negative_numbers = true)]
        j: i64,
    },
    /// Rewrite a monomial expansion in the affine Schur basis, or back
    SchurExpand { expansion: String },
    /// Machine verifications
    Verify {
        #[arg(value_enum)]
        what: VerifyKind,
        /// Largest involution length enumerated
        #[arg(long, default_value_t = 4)]
        max_hat: usize,
    },
    /// Golden examples plus the property suites
    Selftest {
        #[arg(value_enum, default_value_t = Scale::Small)]
        scale: Scale,
        /// Golden file to use instead of the built-in one
        #[arg(long, value_name = "FILE")]
        golden: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] affstan::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                code: 0,
                stdout: e.to_string(),
                stderr: String::new(),
            },
            _ => {
                let full = e.to_string();
                let line = full.lines().next().unwrap_or("error: invalid arguments");
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("{line}\n"),
                }
            }
        },
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = commands::dispatch(cli).and_then(|report| {
        match &cli.opts.out {
            Some(path) => {
                std::fs::write(path, &report.text).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                Ok(Report { text: String::new(), ..report })
            }
            None => Ok(report),
        }
    });
    match result {
        Ok(report) => Outcome {
            code: if report.ok { 0 } else { 1 },
            stdout: report.text,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
