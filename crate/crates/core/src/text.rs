//! Text serialization of matrices: entries separated by `,`, rows by `;`.
//!
//! ```text
//! MATRIX := ROW (';' ROW)*
//! ROW    := NUMBER (',' NUMBER)*
//! NUMBER := [+-]? DIGITS ('.' DIGITS)? ([eE] [+-]? DIGITS)?
//! ```
//!
//! Spaces, tabs, carriage returns and newlines may surround any token.
//! Output always uses `.` as the decimal separator and the shortest decimal
//! form that parses back to the same bits.

use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, Vector};

fn is_space(c: char) -> bool {
    matches!(c, ' ' | '\t' | '\n' | '\r')
}

fn trim(s: &str) -> &str {
    s.trim_matches(is_space)
}

fn digits(bytes: &[u8], mut i: usize) -> usize {
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    i
}

/// Whether `token` matches the NUMBER production exactly.
fn is_number(token: &str) -> bool {
    let b = token.as_bytes();
    let mut i = 0;
    if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
        i += 1;
    }
    let j = digits(b, i);
    if j == i {
        return false;
    }
    i = j;
    if i < b.len() && b[i] == b'.' {
        let j = digits(b, i + 1);
        if j == i + 1 {
            return false;
        }
        i = j;
    }
    if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
        i += 1;
        if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
            i += 1;
        }
        let j = digits(b, i);
        if j == i {
            return false;
        }
        i = j;
    }
    i == b.len()
}

/// Parses a single NUMBER token. `row` and `col` only label errors.
pub fn parse_scalar(token: &str, row: usize, col: usize) -> Result<f64> {
    let t = trim(token);
    if !is_number(t) {
        return Err(Error::BadNumber {
            row,
            col,
            token: t.to_string(),
        });
    }
    let v: f64 = t.parse().map_err(|_| Error::BadNumber {
        row,
        col,
        token: t.to_string(),
    })?;
    if !v.is_finite() {
        return Err(Error::NonFiniteEntry { row, col });
    }
    Ok(v)
}

/// Parses `"a, b, c ; d, e, f"` into a 2x3 matrix.
pub fn parse_matrix(text: &str) -> Result<DenseMatrix> {
    if trim(text).is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut width = None;
    let mut data = Vec::new();
    let mut rows = 0;
    for (i, row) in text.split(';').enumerate() {
        let mut count = 0;
        for (j, token) in row.split(',').enumerate() {
            data.push(parse_scalar(token, i, j)?);
            count += 1;
        }
        match width {
            None => width = Some(count),
            Some(w) if w != count => {
                return Err(Error::RaggedRows {
                    row: i,
                    expected: w,
                    found: count,
                })
            }
            Some(_) => {}
        }
        rows += 1;
    }
    DenseMatrix::from_row_major(rows, width.unwrap_or(0), data)
}

/// Parses a column vector written as `"v1; v2; ..."`.
pub fn parse_column(text: &str) -> Result<Vector> {
    let m = parse_matrix(text)?;
    if m.col_count() != 1 {
        return Err(Error::InvalidDimensions {
            rows: m.row_count(),
            cols: m.col_count(),
            reason: "expected a column of ';'-separated values",
        });
    }
    Vector::new(m.into_row_major())
}

/// Shortest round-tripping decimal form of `v`.
///
/// Plain notation is used for moderate magnitudes and exponent notation
/// outside `[1e-5, 1e16)`, so huge or tiny values stay compact.
pub fn format_scalar(v: f64) -> String {
    let a = v.abs();
    if a == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

pub fn format_matrix(m: &DenseMatrix) -> String {
    m.rows()
        .map(|r| {
            r.iter()
                .map(|v| format_scalar(*v))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}

/// Formats a vector as a column: `"v1;v2;..."`.
pub fn format_column(v: &Vector) -> String {
    v.iter()
        .map(|x| format_scalar(*x))
        .collect::<Vec<_>>()
        .join(";")
}
