//! Dense linear system solvers.
//!
//! Direct methods ([`solve_cramer`], [`solve_gauss_jordan`]) and iterative
//! methods ([`solve_iterative`] with Gauss-Seidel or Jacobi sweeps) over a
//! small row-major [`DenseMatrix`] type, plus the `"a, b ; c, d"` text format
//! used to read and write matrices.
//!
//! ```
//! use linsolve_core::{parse_matrix, solve_cramer, LinearSystem, SolverConfig, Vector};
//!
//! let a = parse_matrix("2, 3, -1 ; 4, 4, -3 ; -2, 3, -1").unwrap();
//! let b = Vector::new(vec![5.0, 3.0, 1.0]).unwrap();
//! let sys = LinearSystem::new(a, b).unwrap();
//! let x = solve_cramer(&sys, &SolverConfig::default()).unwrap();
//! assert!((x.x().unwrap()[1] - 2.0).abs() < 1e-12);
//! ```

pub mod config;
pub mod direct;
pub mod error;
pub mod iterative;
pub mod matrix;
pub mod system;
pub mod text;

pub use config::{Criterion, SolverConfig};
pub use direct::{
    replay_row_ops, solve_cramer, solve_gauss_jordan, to_reduced_row_echelon, RrefResult,
};
pub use error::{Error, Result};
pub use iterative::{
    check_diagonal, classify_dominance, gauss_seidel_sweep, jacobi_sweep, solve_iterative,
    Dominance, DominanceReport, IterationTrace, IterativeMethod, Sweep, TraceRecord,
};
pub use matrix::{
    apply_row_op, determinant, determinant_with_tolerance, replace_column, scaled_determinant,
    DenseMatrix, RowOp, ScaledDeterminant, Vector,
};
pub use system::{AugmentedMatrix, LinearSystem, Method, Solution, Status};
pub use text::{
    format_column, format_matrix, format_scalar, parse_column, parse_matrix, parse_scalar,
};
