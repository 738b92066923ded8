use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::{check_len, DenseMatrix, Vector};

/// `A x = b` with `A` of shape m x n and `b` of length m.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearSystem {
    a: DenseMatrix,
    b: Vector,
}

impl LinearSystem {
    pub fn new(a: DenseMatrix, b: Vector) -> Result<Self> {
        check_len(a.row_count(), b.len())?;
        Ok(LinearSystem { a, b })
    }

    pub fn coefficients(&self) -> &DenseMatrix {
        &self.a
    }

    pub fn rhs(&self) -> &Vector {
        &self.b
    }

    pub fn equations(&self) -> usize {
        self.a.row_count()
    }

    pub fn unknowns(&self) -> usize {
        self.a.col_count()
    }

    /// `||A x - b||_inf`.
    pub fn residual_inf(&self, x: &Vector) -> Result<f64> {
        self.a.mul_vec(x)?.max_abs_diff(&self.b)
    }
}

/// The coefficient matrix with the right-hand side appended as its last
/// column.
#[derive(Debug, Clone, PartialEq)]
pub struct AugmentedMatrix {
    body: DenseMatrix,
}

impl AugmentedMatrix {
    pub fn from_system(sys: &LinearSystem) -> Self {
        let (m, n) = (sys.equations(), sys.unknowns());
        let mut data = Vec::with_capacity(m * (n + 1));
        for (row, b) in sys.a.rows().zip(sys.b.iter()) {
            data.extend_from_slice(row);
            data.push(*b);
        }
        let body = DenseMatrix::from_row_major(m, n + 1, data)
            .expect("entries of a valid system are finite");
        AugmentedMatrix { body }
    }

    /// Wraps a matrix whose last column is the right-hand side.
    pub fn from_body(body: DenseMatrix) -> Result<Self> {
        if body.col_count() < 2 {
            return Err(Error::InvalidDimensions {
                rows: body.row_count(),
                cols: body.col_count(),
                reason: "an augmented matrix needs at least two columns",
            });
        }
        Ok(AugmentedMatrix { body })
    }

    pub fn body(&self) -> &DenseMatrix {
        &self.body
    }

    pub fn into_body(self) -> DenseMatrix {
        self.body
    }

    /// Number of unknowns, i.e. the width of the coefficient part.
    pub fn unknowns(&self) -> usize {
        self.body.col_count() - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Cramer,
    GaussJordan,
    GaussSeidel,
    Jacobi,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Cramer,
        Method::GaussJordan,
        Method::GaussSeidel,
        Method::Jacobi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Cramer => "cramer",
            Method::GaussJordan => "gauss-jordan",
            Method::GaussSeidel => "gauss-seidel",
            Method::Jacobi => "jacobi",
        }
    }

    pub fn is_iterative(self) -> bool {
        matches!(self, Method::GaussSeidel | Method::Jacobi)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// How a solve terminated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Exact,
    Converged,
    Diverged,
    MaxIterations,
    Singular,
    Inconsistent,
    Underdetermined,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Exact => "exact",
            Status::Converged => "converged",
            Status::Diverged => "diverged",
            Status::MaxIterations => "max-iterations",
            Status::Singular => "singular",
            Status::Inconsistent => "inconsistent",
            Status::Underdetermined => "underdetermined",
        }
    }

    /// Whether this status carries a solution vector.
    pub fn has_solution(self) -> bool {
        matches!(self, Status::Exact | Status::Converged)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result vector plus the method that produced it and how it ended.
///
/// `x` is present exactly when `status` is `Exact` or `Converged`.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    x: Option<Vector>,
    method: Method,
    status: Status,
}

impl Solution {
    pub(crate) fn solved(x: Vector, method: Method, status: Status) -> Self {
        debug_assert!(status.has_solution());
        Solution {
            x: Some(x),
            method,
            status,
        }
    }

    /// A solution without a vector. Panics if `status` normally carries one.
    pub fn unsolved(method: Method, status: Status) -> Self {
        assert!(
            !status.has_solution(),
            "{status} requires a solution vector"
        );
        Solution {
            x: None,
            method,
            status,
        }
    }

    pub fn x(&self) -> Option<&Vector> {
        self.x.as_ref()
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn status(&self) -> Status {
        self.status
    }
}
