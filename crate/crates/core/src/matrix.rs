//! Dense row-major matrices, vectors, elementary row operations and
//! determinants.
//!
//! Every value type here holds only finite entries. Operations that would
//! produce an infinity or NaN fail instead of storing it.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// Default absolute threshold below which a pivot counts as zero.
pub const DEFAULT_PIVOT_TOLERANCE: f64 = 1e-12;

/// A real vector with at least one entry, all finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector(Vec<f64>);

impl Vector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidDimensions {
                rows: 0,
                cols: 1,
                reason: "a vector needs at least one entry",
            });
        }
        if let Some(i) = entries.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteEntry { row: i, col: 0 });
        }
        Ok(Vector(entries))
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::new(vec![0.0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.0.iter()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    /// Largest absolute entry.
    pub fn norm_inf(&self) -> f64 {
        self.0.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// `max_i |self_i - other_i|`.
    pub fn max_abs_diff(&self, other: &Vector) -> Result<f64> {
        check_len(self.len(), other.len())?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs())))
    }
}

impl Index<usize> for Vector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl TryFrom<Vec<f64>> for Vector {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Vector::new(v)
    }
}

/// Elementary row operation. Row indices are zero-based.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RowOp {
    /// Exchange two rows.
    Swap(usize, usize),
    /// Multiply row `row` by a nonzero `factor`.
    Scale { row: usize, factor: f64 },
    /// `R_target <- R_target + factor * R_source`.
    AddScaled {
        target: usize,
        source: usize,
        factor: f64,
    },
}

/// Dense real matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    /// Builds a matrix from row-major `data`.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidDimensions {
                rows,
                cols,
                reason: "row and column counts must be positive",
            });
        }
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if let Some(k) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteEntry {
                row: k / cols,
                col: k % cols,
            });
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let first = rows.first().ok_or(Error::EmptyInput)?.as_ref().len();
        let mut data = Vec::with_capacity(rows.len() * first);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != first {
                return Err(Error::RaggedRows {
                    row: i,
                    expected: first,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Self::from_row_major(rows.len(), first, data)
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        Self::from_row_major(n, n, data)
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        (i < self.rows && j < self.cols).then(|| self.data[i * self.cols + j])
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.cols)
    }

    pub fn column(&self, j: usize) -> Result<Vector> {
        if j >= self.cols {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.cols,
            });
        }
        Vector::new(self.rows().map(|r| r[j]).collect())
    }

    pub fn as_row_major(&self) -> &[f64] {
        &self.data
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        self.rows()
            .map(|r| r.iter().map(|v| v.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Matrix-vector product `self * x`.
    pub fn mul_vec(&self, x: &Vector) -> Result<Vector> {
        check_len(self.cols, x.len())?;
        let out = self
            .rows()
            .map(|r| r.iter().zip(x.iter()).map(|(a, b)| a * b).sum())
            .collect();
        Vector::new(out).map_err(|_| Error::NonFiniteResult("matrix-vector product overflowed"))
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub(crate) fn into_row_major(self) -> Vec<f64> {
        self.data
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub(crate) fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &self.data[i * self.cols + j]
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_matrix(self))
    }
}

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, found })
    }
}

fn check_row(index: usize, len: usize) -> Result<()> {
    if index < len {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index, len })
    }
}

/// Returns a copy of `m` with column `j` replaced by `v`.
pub fn replace_column(m: &DenseMatrix, j: usize, v: &Vector) -> Result<DenseMatrix> {
    let n = m.require_square()?;
    check_row(j, n)?;
    check_len(n, v.len())?;
    let mut out = m.clone();
    for (i, value) in v.iter().enumerate() {
        out.data[i * n + j] = *value;
    }
    Ok(out)
}

/// Applies one elementary row operation, returning a new matrix.
pub fn apply_row_op(m: &DenseMatrix, op: RowOp) -> Result<DenseMatrix> {
    let mut out = m.clone();
    apply_row_op_in_place(&mut out, op)?;
    Ok(out)
}

pub(crate) fn apply_row_op_in_place(m: &mut DenseMatrix, op: RowOp) -> Result<()> {
    let cols = m.cols;
    match op {
        RowOp::Swap(a, b) => {
            check_row(a, m.rows)?;
            check_row(b, m.rows)?;
            if a != b {
                for j in 0..cols {
                    m.data.swap(a * cols + j, b * cols + j);
                }
            }
        }
        RowOp::Scale { row, factor } => {
            check_row(row, m.rows)?;
            if factor == 0.0 {
                return Err(Error::ZeroScaleFactor);
            }
            if !factor.is_finite() {
                return Err(Error::NonFiniteResult("row scale factor"));
            }
            let scaled: Vec<f64> = m.row(row).iter().map(|v| v * factor).collect();
            if scaled.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFiniteResult("row scaling overflowed"));
            }
            m.data[row * cols..(row + 1) * cols].copy_from_slice(&scaled);
        }
        RowOp::AddScaled {
            target,
            source,
            factor,
        } => {
            check_row(target, m.rows)?;
            check_row(source, m.rows)?;
            if target == source {
                return Err(Error::IndexOutOfRange {
                    index: source,
                    len: m.rows,
                });
            }
            if !factor.is_finite() {
                return Err(Error::NonFiniteResult("row combination factor"));
            }
            let updated: Vec<f64> = m
                .row(target)
                .iter()
                .zip(m.row(source))
                .map(|(t, s)| t + factor * s)
                .collect();
            if updated.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFiniteResult("row combination overflowed"));
            }
            m.data[target * cols..(target + 1) * cols].copy_from_slice(&updated);
        }
    }
    Ok(())
}

/// A determinant held as `mantissa * 2^exponent`, so that products of many
/// pivots neither overflow nor underflow before a ratio is taken.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledDeterminant {
    mantissa: f64,
    exponent: i32,
}

impl ScaledDeterminant {
    const ZERO: Self = ScaledDeterminant {
        mantissa: 0.0,
        exponent: 0,
    };

    pub fn is_zero(&self) -> bool {
        self.mantissa == 0.0
    }

    /// The determinant as a plain float. May be infinite or zero when the
    /// true value is outside the `f64` range.
    pub fn value(&self) -> f64 {
        ldexp(self.mantissa, self.exponent)
    }

    /// `log2 |det|`, or negative infinity for a zero determinant.
    pub fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.mantissa.abs().log2() + f64::from(self.exponent)
        }
    }

    /// `self / other`; `None` when `other` is zero.
    pub fn ratio(&self, other: &ScaledDeterminant) -> Option<f64> {
        if other.is_zero() {
            return None;
        }
        let diff = i64::from(self.exponent) - i64::from(other.exponent);
        let diff = diff.clamp(i64::from(i32::MIN / 2), i64::from(i32::MAX / 2)) as i32;
        Some(ldexp(self.mantissa / other.mantissa, diff))
    }

    /// Whether `|det| <= tolerance`, evaluated without overflow.
    pub fn abs_at_most(&self, tolerance: f64) -> bool {
        if self.is_zero() {
            return true;
        }
        self.log2_abs() <= tolerance.log2()
    }

    fn mul(&mut self, factor: f64) {
        let (fm, fe) = frexp(factor);
        let (m, e) = frexp(self.mantissa * fm);
        self.mantissa = m;
        self.exponent = self.exponent.saturating_add(fe).saturating_add(e);
    }
}

/// Splits a finite `x` into `(m, e)` with `x = m * 2^e` and `0.5 <= |m| < 1`.
fn frexp(x: f64) -> (f64, i32) {
    if x == 0.0 || !x.is_finite() {
        return (x, 0);
    }
    let bits = x.to_bits();
    let raw_exp = ((bits >> 52) & 0x7ff) as i32;
    if raw_exp == 0 {
        // subnormal: bring into the normal range first
        let (m, e) = frexp(x * 2f64.powi(64));
        return (m, e - 64);
    }
    let e = raw_exp - 1022;
    let m = f64::from_bits((bits & !(0x7ffu64 << 52)) | (1022u64 << 52));
    (m, e)
}

fn ldexp(mut x: f64, mut e: i32) -> f64 {
    // powers of two applied in steps that stay inside the normal range
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
        if x.is_infinite() {
            return x;
        }
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
        if x == 0.0 {
            return x;
        }
    }
    x * 2f64.powi(e)
}

/// Determinant by LU factorization with partial pivoting, in scaled form.
///
/// Returns exactly zero as soon as a pivot magnitude is at or below
/// `pivot_tolerance`.
pub fn scaled_determinant(m: &DenseMatrix, pivot_tolerance: f64) -> Result<ScaledDeterminant> {
    let n = m.require_square()?;
    let mut a = m.data.clone();
    let mut det = ScaledDeterminant {
        mantissa: 1.0,
        exponent: 0,
    };
    for k in 0..n {
        let mut p = k;
        let mut best = a[k * n + k].abs();
        for i in k + 1..n {
            let v = a[i * n + k].abs();
            if v > best {
                best = v;
                p = i;
            }
        }
        if best <= pivot_tolerance {
            return Ok(ScaledDeterminant::ZERO);
        }
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            det.mantissa = -det.mantissa;
        }
        let pivot = a[k * n + k];
        det.mul(pivot);
        for i in k + 1..n {
            let f = a[i * n + k] / pivot;
            if f == 0.0 {
                continue;
            }
            for j in k + 1..n {
                a[i * n + j] -= f * a[k * n + j];
            }
        }
    }
    Ok(det)
}

/// Determinant with the default pivot tolerance.
pub fn determinant(m: &DenseMatrix) -> Result<f64> {
    determinant_with_tolerance(m, DEFAULT_PIVOT_TOLERANCE)
}

pub fn determinant_with_tolerance(m: &DenseMatrix, pivot_tolerance: f64) -> Result<f64> {
    let v = scaled_determinant(m, pivot_tolerance)?.value();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFiniteResult("determinant overflowed"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_a() -> DenseMatrix {
        DenseMatrix::from_rows(&[[2.0, 3.0, -1.0], [4.0, 4.0, -3.0], [-2.0, 3.0, -1.0]]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_shapes() {
        assert!(DenseMatrix::from_row_major(0, 3, vec![]).is_err());
        assert!(matches!(
            DenseMatrix::from_row_major(2, 2, vec![1.0; 3]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            DenseMatrix::from_row_major(1, 2, vec![1.0, f64::NAN]),
            Err(Error::NonFiniteEntry { row: 0, col: 1 })
        ));
        assert!(Vector::new(vec![]).is_err());
        assert!(Vector::new(vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(
            determinant(&DenseMatrix::identity(3).unwrap()).unwrap(),
            1.0
        );
        assert!((determinant(&sample_a()).unwrap() - 20.0).abs() < 1e-12);
        let dep = DenseMatrix::from_rows(&[[1.0, 2.0], [2.0, 4.0]]).unwrap();
        assert_eq!(determinant(&dep).unwrap(), 0.0);
        let rect = DenseMatrix::from_rows(&[[1.0, 2.0, 3.0]]).unwrap();
        assert!(matches!(determinant(&rect), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn tiny_pivot_is_zero() {
        let m = DenseMatrix::from_rows(&[[1e-13, 0.0], [0.0, 1e-13]]).unwrap();
        assert_eq!(determinant(&m).unwrap(), 0.0);
        assert!(determinant_with_tolerance(&m, 1e-14).unwrap() > 0.0);
    }

    #[test]
    fn scaled_determinant_survives_overflow() {
        let n = 40;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1e20;
        }
        let m = DenseMatrix::from_row_major(n, n, data).unwrap();
        let d = scaled_determinant(&m, 1e-12).unwrap();
        assert!(d.value().is_infinite());
        assert!(determinant(&m).is_err());
        let b = replace_column(&m, 3, &Vector::new(vec![2e20; n]).unwrap()).unwrap();
        let db = scaled_determinant(&b, 1e-12).unwrap();
        assert!((db.ratio(&d).unwrap() - 2.0).abs() < 1e-12);
        assert!(!d.abs_at_most(1e-12));
    }

    #[test]
    fn frexp_round_trips() {
        for x in [1.0, -3.5, 1e-310, 7e300, 0.75] {
            let (m, e) = frexp(x);
            assert!((0.5..1.0).contains(&m.abs()), "{x}");
            assert_eq!(ldexp(m, e), x);
        }
    }

    #[test]
    fn replace_column_examples() {
        let b = Vector::new(vec![5.0, 3.0, 1.0]).unwrap();
        let a0 = replace_column(&sample_a(), 0, &b).unwrap();
        assert_eq!(
            a0,
            DenseMatrix::from_rows(&[[5.0, 3.0, -1.0], [3.0, 4.0, -3.0], [1.0, 3.0, -1.0]])
                .unwrap()
        );
        let a = sample_a();
        for j in 0..3 {
            assert_eq!(replace_column(&a, j, &a.column(j).unwrap()).unwrap(), a);
        }
        assert!(matches!(
            replace_column(&a, 3, &b),
            Err(Error::IndexOutOfRange { .. })
        ));
        let short = Vector::new(vec![1.0]).unwrap();
        assert!(matches!(
            replace_column(&a, 0, &short),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn row_op_examples() {
        let m = DenseMatrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        let swapped = apply_row_op(&m, RowOp::Swap(0, 1)).unwrap();
        assert_eq!(
            swapped,
            DenseMatrix::from_rows(&[[3.0, 4.0], [1.0, 2.0]]).unwrap()
        );
        assert_eq!(m.row(0), &[1.0, 2.0]);
        assert_eq!(determinant(&swapped).unwrap(), -determinant(&m).unwrap());

        let m = DenseMatrix::from_rows(&[[2.0, 3.0], [4.0, 5.0]]).unwrap();
        let op = RowOp::AddScaled {
            target: 1,
            source: 0,
            factor: -2.0,
        };
        assert_eq!(
            apply_row_op(&m, op).unwrap(),
            DenseMatrix::from_rows(&[[2.0, 3.0], [0.0, -1.0]]).unwrap()
        );
    }

    #[test]
    fn row_op_errors() {
        let m = DenseMatrix::identity(2).unwrap();
        assert!(matches!(
            apply_row_op(
                &m,
                RowOp::Scale {
                    row: 0,
                    factor: 0.0
                }
            ),
            Err(Error::ZeroScaleFactor)
        ));
        assert!(matches!(
            apply_row_op(&m, RowOp::Swap(0, 2)),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        ));
        assert!(apply_row_op(
            &m,
            RowOp::AddScaled {
                target: 1,
                source: 1,
                factor: 1.0
            }
        )
        .is_err());
        let big = DenseMatrix::from_rows(&[[1e300, 0.0], [0.0, 1.0]]).unwrap();
        assert!(apply_row_op(
            &big,
            RowOp::Scale {
                row: 0,
                factor: 1e10
            }
        )
        .is_err());
    }
}
