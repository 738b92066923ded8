//! Command-line front end: `solve`, `compare` and `bench`.
//!
//! Exit codes:
//!
//! | code | meaning                                                  |
//! |------|----------------------------------------------------------|
//! | 0    | solution produced (`exact`, `converged`)                 |
//! | 2    | iteration failed (`diverged`, `max-iterations`)          |
//! | 3    | no unique solution (`singular`, `inconsistent`, `underdetermined`) |
//! | 4    | input or usage error                                     |

pub mod bench;
mod commands;
pub mod system_file;
pub mod trace;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linsolve_core::{Criterion, Method, SolverConfig, Status};

pub use commands::{run_bench, run_compare, run_solve, CliError, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ITERATION_FAILED: i32 = 2;
pub const EXIT_NO_UNIQUE_SOLUTION: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::Exact | Status::Converged => EXIT_OK,
        Status::Diverged | Status::MaxIterations => EXIT_ITERATION_FAILED,
        Status::Singular | Status::Inconsistent | Status::Underdetermined => {
            EXIT_NO_UNIQUE_SOLUTION
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "linsolve", version, about = "Solve dense linear systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a system with one method
    Solve(SolveArgs),
    /// Run every method and compare against the Cramer reference
    Compare(CompareArgs),
    /// Time every method on seeded random diagonally dominant systems
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CriterionArg {
    Abs,
    Rel,
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    /// Convergence tolerance for iterative methods
    #[arg(long, default_value_t = 0.01)]
    pub epsilon: f64,
    /// Sweep limit for iterative methods
    #[arg(long = "max-iter", default_value_t = 1000)]
    pub max_iter: usize,
    #[arg(long, value_enum, default_value_t = CriterionArg::Abs)]
    pub criterion: CriterionArg,
    /// Initial guess as "g1;g2;..." (overrides the file's guess line)
    #[arg(long, allow_hyphen_values = true)]
    pub guess: Option<String>,
    /// |det(A)| at or below this is treated as singular
    #[arg(long = "singular-tol", default_value_t = 1e-12)]
    pub singular_tol: f64,
}

impl SolverArgs {
    pub fn config(&self) -> SolverConfig {
        SolverConfig {
            epsilon: self.epsilon,
            max_iterations: self.max_iter,
            criterion: match self.criterion {
                CriterionArg::Abs => Criterion::AbsoluteDelta,
                CriterionArg::Rel => Criterion::RelativeError,
            },
            singular_tolerance: self.singular_tol,
            ..SolverConfig::default()
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    /// cramer, gauss-jordan, gauss-seidel or jacobi
    #[arg(long)]
    pub method: Method,
    #[arg(long)]
    pub input: PathBuf,
    /// Write the iteration trace here (iterative methods only)
    #[arg(long)]
    pub trace: Option<PathBuf>,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Comma-separated system sizes
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

/// Parses `args` (including the program name), runs the command and writes
/// its report. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let first = rendered
                    .lines()
                    .next()
                    .unwrap_or("error: invalid arguments");
                let _ = writeln!(err, "{first}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Solve(a) => run_solve(a),
        Command::Compare(a) => run_compare(a),
        Command::Bench(a) => run_bench(a),
    };
    match result {
        Ok(report) => {
            let _ = out.write_all(report.text.as_bytes());
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
