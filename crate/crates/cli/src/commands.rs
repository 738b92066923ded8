use std::fmt::Write as _;
use std::path::Path;

use linsolve_core::{
    classify_dominance, format_column, format_scalar, parse_column, solve_cramer,
    solve_gauss_jordan, solve_iterative, IterationTrace, IterativeMethod, LinearSystem, Method,
    Solution, SolverConfig, Status, Vector,
};
use thiserror::Error;

use crate::bench::{format_bench, BenchRow};
use crate::system_file::{parse_system_file, SystemFile, SystemFileError};
use crate::trace::format_trace;
use crate::{exit_code, BenchArgs, CompareArgs, SolveArgs, EXIT_NO_UNIQUE_SOLUTION, EXIT_OK};

/// Anything that maps to exit code 4.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    SystemFile {
        path: String,
        #[source]
        source: SystemFileError,
    },
    #[error("{0}")]
    Solver(#[from] linsolve_core::Error),
    #[error("--guess: {0}")]
    Guess(linsolve_core::Error),
    #[error("{0}")]
    Usage(String),
}

/// Report text for stdout plus the exit code it implies.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub text: String,
    pub code: i32,
}

fn load(path: &Path) -> Result<SystemFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse_system_file(&text).map_err(|source| CliError::SystemFile {
        path: path.display().to_string(),
        source,
    })
}

fn guess_for(flag: &Option<String>, file: &SystemFile) -> Result<Option<Vector>, CliError> {
    let guess = match flag {
        Some(text) => Some(parse_column(text).map_err(CliError::Guess)?),
        None => file.guess.clone(),
    };
    if let Some(g) = &guess {
        let n = file.system.unknowns();
        if g.len() != n {
            return Err(CliError::Guess(linsolve_core::Error::LengthMismatch {
                expected: n,
                found: g.len(),
            }));
        }
    }
    Ok(guess)
}

fn direct(method: Method, sys: &LinearSystem, cfg: &SolverConfig) -> Result<Solution, CliError> {
    let result = match method {
        Method::Cramer => solve_cramer(sys, cfg),
        Method::GaussJordan => solve_gauss_jordan(sys, cfg),
        _ => unreachable!("{method} is iterative"),
    };
    match result {
        Err(linsolve_core::Error::Singular { .. }) => {
            Ok(Solution::unsolved(method, Status::Singular))
        }
        other => Ok(other?),
    }
}

fn iterative(
    method: Method,
    sys: &LinearSystem,
    guess: Option<&Vector>,
    cfg: &SolverConfig,
) -> Result<(Solution, IterationTrace), linsolve_core::Error> {
    let m = IterativeMethod::try_from(method).expect("iterative method");
    solve_iterative(sys, guess, m, cfg)
}

pub fn run_solve(args: &SolveArgs) -> Result<Report, CliError> {
    let cfg = args.solver.config();
    cfg.validate()?;
    let file = load(&args.input)?;
    let guess = guess_for(&args.solver.guess, &file)?;
    let sys = &file.system;

    let (solution, iterations) = if args.method.is_iterative() {
        let (sol, trace) = iterative(args.method, sys, guess.as_ref(), &cfg)?;
        if let Some(path) = &args.trace {
            std::fs::write(path, format_trace(&trace)).map_err(|source| CliError::Write {
                path: path.display().to_string(),
                source,
            })?;
        }
        (sol, Some(trace.iterations_used))
    } else {
        if args.trace.is_some() {
            return Err(CliError::Usage(format!(
                "--trace requires an iterative method, not {}",
                args.method
            )));
        }
        (direct(args.method, sys, &cfg)?, None)
    };

    let mut text = String::new();
    if let Some(x) = solution.x() {
        for (i, v) in x.iter().enumerate() {
            let _ = writeln!(text, "x[{i}] = {}", format_scalar(*v));
        }
    }
    let _ = writeln!(text, "status: {}", solution.status());
    if let Some(k) = iterations {
        let _ = writeln!(text, "iterations: {k}");
    }
    Ok(Report {
        text,
        code: exit_code(solution.status()),
    })
}

pub fn run_compare(args: &CompareArgs) -> Result<Report, CliError> {
    let cfg = args.solver.config();
    cfg.validate()?;
    let file = load(&args.input)?;
    let guess = guess_for(&args.solver.guess, &file)?;
    let sys = &file.system;
    let dominance = classify_dominance(sys.coefficients())?;

    let mut text = String::new();
    let _ = writeln!(text, "dominance: {}", dominance.classification.name());
    let reference = direct(Method::Cramer, sys, &cfg)?;
    let Some(reference_x) = reference.x().cloned() else {
        let _ = writeln!(text, "reference: cramer {}", reference.status());
        return Ok(Report {
            text,
            code: EXIT_NO_UNIQUE_SOLUTION,
        });
    };
    let _ = writeln!(text, "reference: cramer");
    let _ = writeln!(
        text,
        "{:<14}{:<16}{:<12}{:<12}solution",
        "method", "status", "iterations", "deviation"
    );

    for method in Method::ALL {
        let (status, iterations, x) = if method.is_iterative() {
            match iterative(method, sys, guess.as_ref(), &cfg) {
                Ok((sol, trace)) => (
                    sol.status().name().to_string(),
                    trace.iterations_used.to_string(),
                    sol.x().cloned(),
                ),
                Err(linsolve_core::Error::ZeroDiagonal { .. }) => {
                    ("zero-diagonal".to_string(), "-".to_string(), None)
                }
                Err(e) => return Err(e.into()),
            }
        } else {
            let sol = direct(method, sys, &cfg)?;
            (
                sol.status().name().to_string(),
                "-".to_string(),
                sol.x().cloned(),
            )
        };
        let (deviation, solution) = match &x {
            Some(x) => (
                format!("{:.3e}", x.max_abs_diff(&reference_x)?),
                format_column(x),
            ),
            None => ("-".to_string(), "-".to_string()),
        };
        let _ = writeln!(
            text,
            "{:<14}{:<16}{:<12}{:<12}{}",
            method.name(),
            status,
            iterations,
            deviation,
            solution
        );
    }
    Ok(Report {
        text,
        code: EXIT_OK,
    })
}

pub fn run_bench(args: &BenchArgs) -> Result<Report, CliError> {
    if let Some(bad) = args.sizes.iter().find(|&&n| n == 0) {
        return Err(CliError::Usage(format!(
            "--sizes: sizes must be positive, got {bad}"
        )));
    }
    let rows: Vec<BenchRow> = crate::bench::run_bench(&args.sizes, args.seed);
    Ok(Report {
        text: format_bench(&rows),
        code: EXIT_OK,
    })
}
