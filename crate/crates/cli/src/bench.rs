//! Wall-clock comparison of the four solvers on seeded random systems.

use std::time::{Duration, Instant};

use linsolve_core::{
    solve_cramer, solve_gauss_jordan, solve_iterative, DenseMatrix, IterativeMethod, LinearSystem,
    Method, SolverConfig, Status, Vector,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Repetitions per measurement; the fastest one is reported.
pub const RUNS: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub method: Method,
    pub status: Status,
    pub millis: f64,
    /// `millis` divided by Gauss-Jordan's time at the same size.
    pub ratio_vs_gauss_jordan: f64,
}

/// Random strictly diagonally dominant n x n system: off-diagonals uniform
/// in [-1, 1], `a_ii = sum_{j != i} |a_ij| + 1 + U[0, 1]`, `b` uniform in
/// [-10, 10].
pub fn dominant_system<R: Rng>(n: usize, rng: &mut R) -> LinearSystem {
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        let mut off = 0.0;
        for j in (0..n).filter(|&j| j != i) {
            let v: f64 = rng.gen_range(-1.0..=1.0);
            data[i * n + j] = v;
            off += v.abs();
        }
        data[i * n + i] = off + 1.0 + rng.gen_range(0.0..=1.0);
    }
    let b = (0..n).map(|_| rng.gen_range(-10.0..=10.0)).collect();
    LinearSystem::new(
        DenseMatrix::from_row_major(n, n, data).expect("finite entries"),
        Vector::new(b).expect("finite entries"),
    )
    .expect("b matches A")
}

fn run_once(method: Method, sys: &LinearSystem, cfg: &SolverConfig) -> Status {
    let result = match method {
        Method::Cramer => solve_cramer(sys, cfg),
        Method::GaussJordan => solve_gauss_jordan(sys, cfg),
        Method::GaussSeidel => {
            solve_iterative(sys, None, IterativeMethod::GaussSeidel, cfg).map(|(s, _)| s)
        }
        Method::Jacobi => solve_iterative(sys, None, IterativeMethod::Jacobi, cfg).map(|(s, _)| s),
    };
    match result {
        Ok(sol) => sol.status(),
        Err(linsolve_core::Error::Singular { .. }) => Status::Singular,
        Err(e) => panic!("{method} failed on a generated system: {e}"),
    }
}

fn best_of(method: Method, sys: &LinearSystem, cfg: &SolverConfig) -> (Status, Duration) {
    let mut best = Duration::MAX;
    let mut status = Status::Exact;
    for _ in 0..RUNS {
        let start = Instant::now();
        status = run_once(method, sys, cfg);
        best = best.min(start.elapsed());
    }
    (status, best)
}

/// Times every method at every size. Sizes must be positive.
pub fn run_bench(sizes: &[usize], seed: u64) -> Vec<BenchRow> {
    let cfg = SolverConfig::default()
        .with_epsilon(1e-8)
        .with_max_iterations(10_000);
    let mut rows = Vec::new();
    for &n in sizes {
        assert!(n > 0, "bench sizes must be positive");
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let sys = dominant_system(n, &mut rng);
        let timed: Vec<(Method, Status, Duration)> = Method::ALL
            .into_iter()
            .map(|m| {
                let (s, d) = best_of(m, &sys, &cfg);
                (m, s, d)
            })
            .collect();
        let gj = timed
            .iter()
            .find(|(m, ..)| *m == Method::GaussJordan)
            .map(|(_, _, d)| d.as_secs_f64())
            .expect("gauss-jordan is always timed");
        for (method, status, d) in timed {
            rows.push(BenchRow {
                n,
                method,
                status,
                millis: d.as_secs_f64() * 1e3,
                ratio_vs_gauss_jordan: d.as_secs_f64() / gj.max(f64::MIN_POSITIVE),
            });
        }
    }
    rows
}

pub fn format_bench(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:>6}  {:<14}{:<16}{:>12}  {:>10}\n",
        "n", "method", "status", "ms", "vs-gj"
    );
    for r in rows {
        out.push_str(&format!(
            "{:>6}  {:<14}{:<16}{:>12.3}  {:>10.2}\n",
            r.n,
            r.method.name(),
            r.status.name(),
            r.millis,
            r.ratio_vs_gauss_jordan
        ));
    }
    out
}
