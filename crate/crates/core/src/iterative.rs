//! Gauss-Seidel (successive displacement) and Jacobi (simultaneous
//! displacement) iteration, with diagonal diagnostics and sweep traces.

use crate::config::{Criterion, SolverConfig, RELATIVE_ERROR_FLOOR};
use crate::error::{Error, Result};
use crate::matrix::{check_len, DenseMatrix, Vector};
use crate::system::{LinearSystem, Method, Solution, Status};

/// Row indices whose diagonal magnitude is at or below `pivot_tolerance`.
///
/// The iterations divide by `a_ii`, so an empty list is required before
/// solving. No reordering is attempted.
pub fn check_diagonal(a: &DenseMatrix, pivot_tolerance: f64) -> Result<Vec<usize>> {
    let n = a.require_square()?;
    Ok((0..n)
        .filter(|&i| a[(i, i)].abs() <= pivot_tolerance)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    /// `|a_ii| > sum_{j != i} |a_ij|` in every row.
    StrictlyDominant,
    /// `>=` in every row, with equality in at least one.
    WeaklyDominant,
    NotDominant,
}

impl Dominance {
    pub fn name(self) -> &'static str {
        match self {
            Dominance::StrictlyDominant => "strictly-dominant",
            Dominance::WeaklyDominant => "weakly-dominant",
            Dominance::NotDominant => "not-dominant",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceReport {
    pub classification: Dominance,
    /// Rows with `a_ii == 0` exactly.
    pub zero_diagonal_indices: Vec<usize>,
}

pub fn classify_dominance(a: &DenseMatrix) -> Result<DominanceReport> {
    let n = a.require_square()?;
    let mut strict_everywhere = true;
    let mut classification = Dominance::StrictlyDominant;
    for i in 0..n {
        let diag = a[(i, i)].abs();
        let off: f64 = (0..n).filter(|&j| j != i).map(|j| a[(i, j)].abs()).sum();
        if diag < off {
            classification = Dominance::NotDominant;
            break;
        }
        if diag == off {
            strict_everywhere = false;
        }
    }
    if classification != Dominance::NotDominant && !strict_everywhere {
        classification = Dominance::WeaklyDominant;
    }
    Ok(DominanceReport {
        classification,
        zero_diagonal_indices: (0..n).filter(|&i| a[(i, i)] == 0.0).collect(),
    })
}

/// Outcome of one sweep: the new iterate and `|x_i_new - x_i_old|` per
/// component.
#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub x: Vector,
    pub deltas: Vector,
}

fn check_sweep_inputs(a: &DenseMatrix, b: &Vector, x: &Vector) -> Result<usize> {
    let n = a.require_square()?;
    check_len(n, b.len())?;
    check_len(n, x.len())?;
    let zeros: Vec<usize> = (0..n).filter(|&i| a[(i, i)] == 0.0).collect();
    if !zeros.is_empty() {
        return Err(Error::ZeroDiagonal { rows: zeros });
    }
    Ok(n)
}

fn finish_sweep(old: &Vector, new: Vec<f64>) -> Result<Sweep> {
    if let Some(i) = new.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteIterate { component: i });
    }
    let deltas: Vec<f64> = new
        .iter()
        .zip(old.iter())
        .map(|(n, o)| (n - o).abs())
        .collect();
    if let Some(i) = deltas.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteIterate { component: i });
    }
    Ok(Sweep {
        x: Vector::new(new)?,
        deltas: Vector::new(deltas)?,
    })
}

/// One Gauss-Seidel sweep. Component `i` is computed from the already
/// updated components `0..i` and the old components `i+1..n`:
/// `x_i = (b_i - sum_{j != i} a_ij x_j) / a_ii`.
pub fn gauss_seidel_sweep(a: &DenseMatrix, b: &Vector, x: &Vector) -> Result<Sweep> {
    let n = check_sweep_inputs(a, b, x)?;
    let mut next = x.as_slice().to_vec();
    for i in 0..n {
        let row = a.row(i);
        let s: f64 = (0..n).filter(|&j| j != i).map(|j| row[j] * next[j]).sum();
        next[i] = (b[i] - s) / row[i];
    }
    finish_sweep(x, next)
}

/// One Jacobi sweep: every component is computed from the old iterate only.
pub fn jacobi_sweep(a: &DenseMatrix, b: &Vector, x: &Vector) -> Result<Sweep> {
    let n = check_sweep_inputs(a, b, x)?;
    let old = x.as_slice();
    let next = (0..n)
        .map(|i| {
            let row = a.row(i);
            let s: f64 = (0..n).filter(|&j| j != i).map(|j| row[j] * old[j]).sum();
            (b[i] - s) / row[i]
        })
        .collect();
    finish_sweep(x, next)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IterativeMethod {
    GaussSeidel,
    Jacobi,
}

impl IterativeMethod {
    pub fn sweep(self, a: &DenseMatrix, b: &Vector, x: &Vector) -> Result<Sweep> {
        match self {
            IterativeMethod::GaussSeidel => gauss_seidel_sweep(a, b, x),
            IterativeMethod::Jacobi => jacobi_sweep(a, b, x),
        }
    }

    pub fn method(self) -> Method {
        match self {
            IterativeMethod::GaussSeidel => Method::GaussSeidel,
            IterativeMethod::Jacobi => Method::Jacobi,
        }
    }
}

impl TryFrom<Method> for IterativeMethod {
    type Error = Method;

    fn try_from(m: Method) -> std::result::Result<Self, Method> {
        match m {
            Method::GaussSeidel => Ok(IterativeMethod::GaussSeidel),
            Method::Jacobi => Ok(IterativeMethod::Jacobi),
            other => Err(other),
        }
    }
}

/// One recorded sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRecord {
    /// 1-based sweep number.
    pub iteration: usize,
    pub x: Vector,
    /// Per-component convergence measure, absolute or relative depending on
    /// the configured criterion.
    pub deltas: Vector,
    pub max_delta: f64,
}

/// Every sweep of one iterative solve.
///
/// A sweep that overflows to a non-finite iterate ends the solve as
/// `Diverged` and is not recorded, so `records.len() == iterations_used`
/// always holds.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationTrace {
    pub records: Vec<TraceRecord>,
    pub final_status: Status,
    pub iterations_used: usize,
    /// Set when the solve stopped because a sweep produced a non-finite value.
    pub non_finite: bool,
}

fn measure(criterion: Criterion, sweep: &Sweep) -> Vector {
    match criterion {
        Criterion::AbsoluteDelta => sweep.deltas.clone(),
        Criterion::RelativeError => {
            let rel = sweep
                .deltas
                .iter()
                .zip(sweep.x.iter())
                .map(|(d, x)| (d / x.abs().max(RELATIVE_ERROR_FLOOR)).min(f64::MAX))
                .collect();
            Vector::new(rel).expect("relative errors clamped to finite")
        }
    }
}

/// Iterates sweeps from `guess` (zero vector when `None`) until the largest
/// per-component measure drops below `cfg.epsilon`, exceeds
/// `cfg.divergence_threshold`, or `cfg.max_iterations` sweeps have run.
pub fn solve_iterative(
    sys: &LinearSystem,
    guess: Option<&Vector>,
    method: IterativeMethod,
    cfg: &SolverConfig,
) -> Result<(Solution, IterationTrace)> {
    cfg.validate()?;
    let a = sys.coefficients();
    let b = sys.rhs();
    let n = a.require_square()?;
    let zeros = check_diagonal(a, cfg.pivot_tolerance)?;
    if !zeros.is_empty() {
        return Err(Error::ZeroDiagonal { rows: zeros });
    }
    let mut x = match guess {
        Some(g) => {
            check_len(n, g.len())?;
            g.clone()
        }
        None => Vector::zeros(n)?,
    };

    let mut records: Vec<TraceRecord> = Vec::new();
    let mut non_finite = false;
    let status = loop {
        let sweep = match method.sweep(a, b, &x) {
            Ok(s) => s,
            Err(Error::NonFiniteIterate { .. }) => {
                non_finite = true;
                break Status::Diverged;
            }
            Err(e) => return Err(e),
        };
        let deltas = measure(cfg.criterion, &sweep);
        let max_delta = deltas.norm_inf();
        x = sweep.x;
        records.push(TraceRecord {
            iteration: records.len() + 1,
            x: x.clone(),
            deltas,
            max_delta,
        });
        if max_delta < cfg.epsilon {
            break Status::Converged;
        }
        if max_delta > cfg.divergence_threshold {
            break Status::Diverged;
        }
        if records.len() >= cfg.max_iterations {
            break Status::MaxIterations;
        }
    };

    let solution = if status == Status::Converged {
        Solution::solved(x, method.method(), status)
    } else {
        Solution::unsolved(method.method(), status)
    };
    let trace = IterationTrace {
        iterations_used: records.len(),
        records,
        final_status: status,
        non_finite,
    };
    Ok((solution, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_matrix;

    fn v(x: &[f64]) -> Vector {
        Vector::new(x.to_vec()).unwrap()
    }

    fn m(text: &str) -> DenseMatrix {
        parse_matrix(text).unwrap()
    }

    fn sample_a() -> DenseMatrix {
        m("2,3,-1;4,4,-3;-2,3,-1")
    }

    #[test]
    fn diagonal_checks() {
        assert!(check_diagonal(&DenseMatrix::identity(3).unwrap(), 1e-12)
            .unwrap()
            .is_empty());
        assert_eq!(check_diagonal(&m("0,1;1,1"), 1e-12).unwrap(), vec![0]);
        assert!(check_diagonal(&sample_a(), 1e-12).unwrap().is_empty());
        assert!(matches!(
            check_diagonal(&m("1,2"), 1e-12),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn dominance_examples() {
        let c = |t: &str| classify_dominance(&m(t)).unwrap().classification;
        assert_eq!(c("4,1,1;1,5,2;0,1,3"), Dominance::StrictlyDominant);
        assert_eq!(c("2,2;1,3"), Dominance::WeaklyDominant);
        assert_eq!(c("2,3,-1;4,4,-3;-2,3,-1"), Dominance::NotDominant);
        let r = classify_dominance(&m("0,0;1,2")).unwrap();
        assert_eq!(r.classification, Dominance::WeaklyDominant);
        assert_eq!(r.zero_diagonal_indices, vec![0]);
    }

    #[test]
    fn gauss_seidel_two_by_two() {
        let s = gauss_seidel_sweep(&m("4,1;1,3"), &v(&[9.0, 5.0]), &v(&[0.0, 0.0])).unwrap();
        assert_eq!(s.x[0], 2.25);
        assert!((s.x[1] - 11.0 / 12.0).abs() < 1e-15);
        assert_eq!(s.deltas.as_slice(), s.x.as_slice());
    }

    #[test]
    fn jacobi_two_by_two() {
        let s = jacobi_sweep(&m("4,1;1,3"), &v(&[9.0, 5.0]), &v(&[0.0, 0.0])).unwrap();
        assert_eq!(s.x[0], 2.25);
        assert!((s.x[1] - 5.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn sample_system_first_sweeps() {
        let b = v(&[5.0, 3.0, 1.0]);
        let s1 = gauss_seidel_sweep(&sample_a(), &b, &v(&[0.0; 3])).unwrap();
        assert_eq!(s1.x.as_slice(), &[2.5, -1.75, -11.25]);
        let s2 = gauss_seidel_sweep(&sample_a(), &b, &s1.x).unwrap();
        assert_eq!(s2.x.as_slice(), &[-0.5, -7.1875, -21.5625]);
    }

    #[test]
    fn fixed_point() {
        let a = m("4,1,1;1,5,2;0,1,3");
        let b = v(&[6.0, 8.0, 4.0]);
        let x = v(&[1.0, 1.0, 1.0]);
        for s in [gauss_seidel_sweep(&a, &b, &x), jacobi_sweep(&a, &b, &x)] {
            let s = s.unwrap();
            assert_eq!(s.x, x);
            assert_eq!(s.deltas.norm_inf(), 0.0);
        }
    }

    #[test]
    fn diagonal_matrix_jacobi_one_sweep() {
        let a = m("2,0,0;0,-4,0;0,0,0.5");
        let b = v(&[1.0, 2.0, 3.0]);
        let s = jacobi_sweep(&a, &b, &v(&[17.0, -3.0, 1e6])).unwrap();
        assert_eq!(s.x.as_slice(), &[0.5, -0.5, 6.0]);
    }

    #[test]
    fn sweep_errors() {
        let b = v(&[1.0, 1.0]);
        let x = v(&[0.0, 0.0]);
        assert!(matches!(
            gauss_seidel_sweep(&m("0,1;1,1"), &b, &x),
            Err(Error::ZeroDiagonal { .. })
        ));
        assert!(matches!(
            jacobi_sweep(&m("1,0;0,1"), &v(&[1.0]), &x),
            Err(Error::LengthMismatch { .. })
        ));
        let huge = m("1e-300,1e300;1,1");
        assert!(matches!(
            gauss_seidel_sweep(&huge, &b, &v(&[0.0, 1e300])),
            Err(Error::NonFiniteIterate { component: 0 })
        ));
    }

    #[test]
    fn identity_converges_on_second_sweep() {
        let sys =
            LinearSystem::new(DenseMatrix::identity(3).unwrap(), v(&[4.0, -7.0, 2.5])).unwrap();
        let guess = v(&[100.0, 0.0, -3.0]);
        let (sol, trace) = solve_iterative(
            &sys,
            Some(&guess),
            IterativeMethod::GaussSeidel,
            &SolverConfig::default(),
        )
        .unwrap();
        assert_eq!(sol.status(), Status::Converged);
        assert_eq!(trace.iterations_used, 2);
        assert_eq!(sol.x().unwrap(), sys.rhs());
    }

    #[test]
    fn two_by_two_converges() {
        let sys = LinearSystem::new(m("4,1;1,3"), v(&[9.0, 5.0])).unwrap();
        let (sol, trace) = solve_iterative(
            &sys,
            None,
            IterativeMethod::GaussSeidel,
            &SolverConfig::default(),
        )
        .unwrap();
        assert_eq!(sol.status(), Status::Converged);
        let x = sol.x().unwrap();
        assert!((x[0] - 2.0).abs() < 0.01 && (x[1] - 1.0).abs() < 0.01);
        assert!(trace.records.last().unwrap().max_delta < 0.01);
    }

    #[test]
    fn sample_system_does_not_converge() {
        let sys = LinearSystem::new(sample_a(), v(&[5.0, 3.0, 1.0])).unwrap();
        let (sol, trace) = solve_iterative(
            &sys,
            None,
            IterativeMethod::GaussSeidel,
            &SolverConfig::default(),
        )
        .unwrap();
        assert_eq!(sol.status(), Status::Diverged);
        assert!(sol.x().is_none());
        assert!(trace.records.last().unwrap().max_delta > 1e12);
    }

    #[test]
    fn max_iterations_status() {
        let sys = LinearSystem::new(m("4,1;1,3"), v(&[9.0, 5.0])).unwrap();
        let cfg = SolverConfig::default()
            .with_epsilon(1e-300)
            .with_max_iterations(7);
        let (sol, trace) = solve_iterative(&sys, None, IterativeMethod::Jacobi, &cfg).unwrap();
        assert_eq!(sol.status(), Status::MaxIterations);
        assert_eq!(trace.iterations_used, 7);
        assert_eq!(trace.records.len(), 7);
    }

    #[test]
    fn relative_criterion() {
        let sys = LinearSystem::new(m("4,1;1,3"), v(&[9000.0, 5000.0])).unwrap();
        let cfg = SolverConfig::default().with_criterion(Criterion::RelativeError);
        let (sol, trace) = solve_iterative(&sys, None, IterativeMethod::GaussSeidel, &cfg).unwrap();
        assert_eq!(sol.status(), Status::Converged);
        let last = trace.records.last().unwrap();
        let abs_max = last
            .deltas
            .iter()
            .zip(last.x.iter())
            .map(|(d, x)| d * x.abs())
            .fold(0.0, f64::max);
        // absolute change is far above epsilon even though the relative one is not
        assert!(abs_max > cfg.epsilon);
    }

    #[test]
    fn solve_rejects_bad_inputs() {
        let cfg = SolverConfig::default();
        let sys = LinearSystem::new(m("0,1;1,1"), v(&[1.0, 1.0])).unwrap();
        assert!(matches!(
            solve_iterative(&sys, None, IterativeMethod::GaussSeidel, &cfg),
            Err(Error::ZeroDiagonal { rows }) if rows == vec![0]
        ));
        let sys = LinearSystem::new(m("2,1;1,2"), v(&[1.0, 1.0])).unwrap();
        assert!(matches!(
            solve_iterative(&sys, Some(&v(&[0.0])), IterativeMethod::Jacobi, &cfg),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
