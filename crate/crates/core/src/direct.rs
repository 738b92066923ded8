//! Direct solvers: Cramer's rule and Gauss-Jordan elimination.

use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::matrix::{
    apply_row_op_in_place, replace_column, scaled_determinant, DenseMatrix, RowOp, Vector,
};
use crate::system::{AugmentedMatrix, LinearSystem, Method, Solution, Status};

/// Solves a square system by Cramer's rule, `x_i = det(A_i) / det(A)` where
/// `A_i` is `A` with column `i` replaced by `b`.
///
/// Fails with [`Error::Singular`] when `|det(A)| <= cfg.singular_tolerance`.
pub fn solve_cramer(sys: &LinearSystem, cfg: &SolverConfig) -> Result<Solution> {
    cfg.validate()?;
    let a = sys.coefficients();
    let n = a.require_square()?;
    let det = scaled_determinant(a, cfg.pivot_tolerance)?;
    if det.abs_at_most(cfg.singular_tolerance) {
        return Err(Error::Singular {
            det: det.value(),
            tolerance: cfg.singular_tolerance,
        });
    }
    let mut x = Vec::with_capacity(n);
    for i in 0..n {
        let transformed = replace_column(a, i, sys.rhs())?;
        let det_i = scaled_determinant(&transformed, cfg.pivot_tolerance)?;
        let xi = det_i.ratio(&det).expect("determinant checked nonzero");
        if !xi.is_finite() {
            return Err(Error::NonFiniteResult("Cramer quotient"));
        }
        x.push(xi);
    }
    Ok(Solution::solved(
        Vector::new(x)?,
        Method::Cramer,
        Status::Exact,
    ))
}

/// Reduced row-echelon form of an augmented matrix, with the row operations
/// that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct RrefResult {
    pub rref: AugmentedMatrix,
    pub ops: Vec<RowOp>,
    /// Pivots in the coefficient columns.
    pub rank_a: usize,
    /// Pivots in the whole augmented matrix.
    pub rank_augmented: usize,
}

/// Sets entries with magnitude at or below `tol` to exactly zero.
fn flush(values: &mut [f64], tol: f64) {
    for v in values.iter_mut() {
        if v.abs() <= tol {
            *v = 0.0;
        }
    }
}

/// Applies one logged operation followed by the clean-up elimination relies
/// on: residue at or below `tol` in the modified row becomes exactly 0, and
/// a scaled row's leading entry within rounding distance of 1 becomes exactly
/// 1.
fn apply_logged(m: &mut DenseMatrix, op: RowOp, tol: f64) -> Result<()> {
    apply_row_op_in_place(m, op)?;
    match op {
        RowOp::Swap(..) => {}
        RowOp::Scale { row, .. } => {
            let r = m.row_mut(row);
            flush(r, tol);
            if let Some(lead) = r.iter_mut().find(|v| **v != 0.0) {
                if (*lead - 1.0).abs() <= tol.max(4.0 * f64::EPSILON) {
                    *lead = 1.0;
                }
            }
        }
        RowOp::AddScaled { target, .. } => flush(m.row_mut(target), tol),
    }
    Ok(())
}

/// Replays a logged operation sequence on `original` the same way
/// [`to_reduced_row_echelon`] applied it.
pub fn replay_row_ops(
    original: &AugmentedMatrix,
    ops: &[RowOp],
    pivot_tolerance: f64,
) -> Result<AugmentedMatrix> {
    let mut m = original.body().clone();
    flush(m.entries_mut(), pivot_tolerance);
    for op in ops {
        apply_logged(&mut m, *op, pivot_tolerance)?;
    }
    AugmentedMatrix::from_body(m)
}

/// Gauss-Jordan reduction to reduced row-echelon form.
///
/// Columns are processed left to right. The row with the largest magnitude
/// in the column (lowest index on ties) is swapped up, scaled so the pivot is
/// 1, and used to clear the column above and below. Columns whose remaining
/// entries are all at or below `cfg.pivot_tolerance` carry no pivot. Zero
/// rows end up at the bottom.
///
/// Only fails if an intermediate value overflows.
pub fn to_reduced_row_echelon(aug: &AugmentedMatrix, cfg: &SolverConfig) -> Result<RrefResult> {
    let tol = cfg.pivot_tolerance;
    let mut m = aug.body().clone();
    flush(m.entries_mut(), tol);

    let rows = m.row_count();
    let width = m.col_count();
    let unknowns = aug.unknowns();
    let mut ops = Vec::new();
    let mut step = |m: &mut DenseMatrix, op: RowOp| -> Result<()> {
        apply_logged(m, op, tol)?;
        ops.push(op);
        Ok(())
    };

    let mut r = 0;
    let mut rank_a = 0;
    let mut rank_augmented = 0;
    for c in 0..width {
        if r == rows {
            break;
        }
        let mut p = r;
        let mut best = m[(r, c)].abs();
        for i in r + 1..rows {
            let v = m[(i, c)].abs();
            if v > best {
                best = v;
                p = i;
            }
        }
        if best <= tol {
            continue;
        }
        if p != r {
            step(&mut m, RowOp::Swap(r, p))?;
        }
        let pivot = m[(r, c)];
        if pivot != 1.0 {
            step(
                &mut m,
                RowOp::Scale {
                    row: r,
                    factor: 1.0 / pivot,
                },
            )?;
        }
        debug_assert_eq!(m[(r, c)], 1.0);
        for i in 0..rows {
            let f = m[(i, c)];
            if i != r && f != 0.0 {
                step(
                    &mut m,
                    RowOp::AddScaled {
                        target: i,
                        source: r,
                        factor: -f,
                    },
                )?;
            }
        }
        if c < unknowns {
            rank_a += 1;
        }
        rank_augmented += 1;
        r += 1;
    }

    Ok(RrefResult {
        rref: AugmentedMatrix::from_body(m)?,
        ops,
        rank_a,
        rank_augmented,
    })
}

/// Solves any m x n system by Gauss-Jordan elimination.
///
/// The status is `Inconsistent` when the right-hand side adds a pivot,
/// `Underdetermined` when fewer than n pivots exist, and `Exact` otherwise.
pub fn solve_gauss_jordan(sys: &LinearSystem, cfg: &SolverConfig) -> Result<Solution> {
    cfg.validate()?;
    let reduced = to_reduced_row_echelon(&AugmentedMatrix::from_system(sys), cfg)?;
    let n = sys.unknowns();
    if reduced.rank_augmented > reduced.rank_a {
        return Ok(Solution::unsolved(
            Method::GaussJordan,
            Status::Inconsistent,
        ));
    }
    if reduced.rank_a < n {
        return Ok(Solution::unsolved(
            Method::GaussJordan,
            Status::Underdetermined,
        ));
    }
    let body = reduced.rref.body();
    let x = (0..n).map(|j| body[(j, n)]).collect();
    Ok(Solution::solved(
        Vector::new(x)?,
        Method::GaussJordan,
        Status::Exact,
    ))
}
