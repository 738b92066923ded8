//! System files: labeled lines holding a linear system and an optional
//! initial guess.
//!
//! ```text
//! # sample example
//! A: 2, 3, -1 ; 4, 4, -3 ; -2, 3, -1
//! b: 5; 3; 1
//! guess: 0; 0; 0
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. Labels may appear in
//! any order but only once each.

use linsolve_core::{parse_column, parse_matrix, LinearSystem, Vector};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SystemFileError {
    #[error("line {line}: expected `label: value`")]
    MalformedLine { line: usize },

    #[error("line {line}: unknown label {label:?} (expected A, b or guess)")]
    UnknownLabel { line: usize, label: String },

    #[error("line {line}: duplicate label {label:?}")]
    DuplicateLabel { line: usize, label: &'static str },

    #[error("missing `{0}:` line")]
    MissingLabel(&'static str),

    #[error("line {line}: {source}")]
    Value {
        line: usize,
        #[source]
        source: linsolve_core::Error,
    },

    #[error("b has {found} entries but A has {expected} rows")]
    RhsLength { expected: usize, found: usize },

    #[error("guess has {found} entries but A has {expected} columns")]
    GuessLength { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SystemFile {
    pub system: LinearSystem,
    pub guess: Option<Vector>,
}

pub fn parse_system_file(text: &str) -> Result<SystemFile, SystemFileError> {
    let mut a = None;
    let mut b = None;
    let mut guess = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (label, value) = trimmed
            .split_once(':')
            .ok_or(SystemFileError::MalformedLine { line })?;
        let value_err = |source| SystemFileError::Value { line, source };
        match label.trim() {
            "A" => {
                if a.is_some() {
                    return Err(SystemFileError::DuplicateLabel { line, label: "A" });
                }
                a = Some(parse_matrix(value).map_err(value_err)?);
            }
            "b" => {
                if b.is_some() {
                    return Err(SystemFileError::DuplicateLabel { line, label: "b" });
                }
                b = Some(parse_column(value).map_err(value_err)?);
            }
            "guess" => {
                if guess.is_some() {
                    return Err(SystemFileError::DuplicateLabel {
                        line,
                        label: "guess",
                    });
                }
                guess = Some(parse_column(value).map_err(value_err)?);
            }
            other => {
                return Err(SystemFileError::UnknownLabel {
                    line,
                    label: other.to_string(),
                })
            }
        }
    }
    let a = a.ok_or(SystemFileError::MissingLabel("A"))?;
    let b = b.ok_or(SystemFileError::MissingLabel("b"))?;
    if b.len() != a.row_count() {
        return Err(SystemFileError::RhsLength {
            expected: a.row_count(),
            found: b.len(),
        });
    }
    if let Some(g) = &guess {
        if g.len() != a.col_count() {
            return Err(SystemFileError::GuessLength {
                expected: a.col_count(),
                found: g.len(),
            });
        }
    }
    let system = LinearSystem::new(a, b).expect("lengths checked above");
    Ok(SystemFile { system, guess })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "# sample example\nA: 2, 3, -1 ; 4, 4, -3 ; -2, 3, -1\n\nb: 5; 3; 1\n";

    #[test]
    fn parses_sample_file() {
        let f = parse_system_file(SAMPLE).unwrap();
        assert_eq!(f.system.unknowns(), 3);
        assert_eq!(f.system.rhs().as_slice(), &[5.0, 3.0, 1.0]);
        assert!(f.guess.is_none());
    }

    #[test]
    fn labels_in_any_order() {
        let f = parse_system_file("guess: 1;2\r\nb: 3; 4\r\n  A : 1,0;0,1\r\n").unwrap();
        assert_eq!(f.guess.unwrap().as_slice(), &[1.0, 2.0]);
    }

    #[test]
    fn errors() {
        use SystemFileError::*;
        let e = |t: &str| parse_system_file(t).unwrap_err();
        assert_eq!(
            e("A: 1\nA: 2\nb: 1"),
            DuplicateLabel {
                line: 2,
                label: "A"
            }
        );
        assert_eq!(e("A: 1"), MissingLabel("b"));
        assert_eq!(e("b: 1"), MissingLabel("A"));
        assert!(matches!(
            e("A: 1\nb: 1\nc: 2"),
            UnknownLabel { line: 3, .. }
        ));
        assert!(matches!(e("A 1"), MalformedLine { line: 1 }));
        assert!(matches!(e("A: 1,2;3\nb: 1;2"), Value { line: 1, .. }));
        assert!(matches!(e("A: 1,2;3,4\nb: 1,2"), Value { line: 2, .. }));
        assert_eq!(
            e("A: 1,2;3,4\nb: 1"),
            RhsLength {
                expected: 2,
                found: 1
            }
        );
        assert_eq!(
            e("A: 1,2,3;3,4,5\nb: 1;2\nguess: 0;0"),
            GuessLength {
                expected: 3,
                found: 2
            }
        );
    }
}
