use crate::error::{Error, Result};
use crate::matrix::DEFAULT_PIVOT_TOLERANCE;

/// How an iterative solver measures progress after each sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Criterion {
    /// `max_i |x_i_new - x_i_old|`
    #[default]
    AbsoluteDelta,
    /// `max_i |x_i_new - x_i_old| / max(|x_i_new|, 1e-30)`
    RelativeError,
}

/// Floor on the relative-error denominator.
pub const RELATIVE_ERROR_FLOOR: f64 = 1e-30;

/// Tolerances and limits shared by the direct and iterative solvers.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    /// Convergence tolerance for the iterative solvers.
    pub epsilon: f64,
    pub max_iterations: usize,
    pub criterion: Criterion,
    /// A sweep whose measure exceeds this is declared divergent.
    pub divergence_threshold: f64,
    /// Pivot and diagonal magnitudes at or below this count as zero.
    pub pivot_tolerance: f64,
    /// Cramer's rule treats `|det(A)|` at or below this as singular.
    pub singular_tolerance: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            epsilon: 0.01,
            max_iterations: 1000,
            criterion: Criterion::AbsoluteDelta,
            divergence_threshold: 1e12,
            pivot_tolerance: DEFAULT_PIVOT_TOLERANCE,
            singular_tolerance: 1e-12,
        }
    }
}

impl SolverConfig {
    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn with_max_iterations(mut self, max_iterations: usize) -> Self {
        self.max_iterations = max_iterations;
        self
    }

    pub fn with_criterion(mut self, criterion: Criterion) -> Self {
        self.criterion = criterion;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.epsilon) {
            return Err(Error::InvalidConfig("epsilon must be positive and finite"));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidConfig("max_iterations must be at least 1"));
        }
        if self.divergence_threshold.is_nan() || self.divergence_threshold <= self.epsilon {
            return Err(Error::InvalidConfig(
                "divergence_threshold must exceed epsilon",
            ));
        }
        if !positive(self.pivot_tolerance) || !positive(self.singular_tolerance) {
            return Err(Error::InvalidConfig(
                "tolerances must be positive and finite",
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let cfg = SolverConfig::default();
        assert_eq!(cfg.epsilon, 0.01);
        assert_eq!(cfg.max_iterations, 1000);
        assert_eq!(cfg.criterion, Criterion::AbsoluteDelta);
        assert!(cfg.validate().is_ok());
    }

    #[test]
    fn rejects_invalid() {
        let base = SolverConfig::default();
        assert!(base.clone().with_epsilon(0.0).validate().is_err());
        assert!(base.clone().with_epsilon(f64::NAN).validate().is_err());
        assert!(base.clone().with_max_iterations(0).validate().is_err());
        let mut cfg = base.clone();
        cfg.divergence_threshold = 0.001;
        assert!(cfg.validate().is_err());
        let mut cfg = base;
        cfg.singular_tolerance = -1.0;
        assert!(cfg.validate().is_err());
    }
}
