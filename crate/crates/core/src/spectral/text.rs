//! Plain-text matrix and spectrum formats.
//!
//! Matrix: one row per line, entries separated by whitespace. A real entry is a
//! decimal literal (`-1.5`, `2e-3`); a complex entry is `a+bi` or `a-bi`
//! without internal spaces. Spectrum: one real per line. Blank lines are
//! ignored in both; reported line numbers are 1-based physical lines.

use std::fmt::Write as _;

use num_complex::Complex64;

use super::matrix::{CMatrix, HermitianMatrix, Spectrum};
use crate::error::{Error, Result};

fn bad(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_real(token: &str) -> Option<f64> {
    let v: f64 = token.parse().ok()?;
    v.is_finite().then_some(v)
}

/// Parses one entry: `3`, `-2.5e1`, `1+2i`, `0.5-1e-3i`, `2i`.
pub fn parse_entry(token: &str) -> Option<Complex64> {
    let Some(body) = token.strip_suffix('i') else {
        return parse_real(token).map(|re| Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    // split at the last sign that is neither leading nor part of an exponent
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (parse_real(&body[..k])?, &body[k..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => parse_real(s)?,
    };
    Some(Complex64::new(re, im))
}

pub fn parse_matrix(text: &str) -> Result<CMatrix> {
    let mut rows: Vec<Vec<Complex64>> = Vec::new();
    let mut width = None;
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| parse_entry(tok).ok_or_else(|| bad(line_no, format!("cannot parse entry `{tok}`"))))
            .collect::<Result<Vec<_>>>()?;
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(bad(line_no, format!("row has {} entries, expected {w}", row.len())));
            }
            Some(_) => {}
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(bad(1, "matrix file contains no rows"));
    }
    CMatrix::from_rows(rows)
}

/// Parses a spectrum; complex values are rejected since no Hermitian matrix has them.
pub fn parse_spectrum(text: &str) -> Result<Spectrum> {
    let mut values = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let token = line.trim();
        if token.is_empty() {
            continue;
        }
        if token.split_whitespace().count() > 1 {
            return Err(bad(line_no, "expected exactly one eigenvalue per line"));
        }
        let z = parse_entry(token).ok_or_else(|| bad(line_no, format!("cannot parse eigenvalue `{token}`")))?;
        if z.im != 0.0 {
            let err = Error::ComplexTarget {
                index: values.len(),
                re: z.re,
                im: z.im,
            };
            return Err(bad(line_no, err.to_string()));
        }
        values.push(z.re);
    }
    if values.is_empty() {
        return Err(bad(1, "spectrum file contains no values"));
    }
    Spectrum::new(values)
}

fn format_real(out: &mut String, v: f64) {
    let a = v.abs();
    if a == 0.0 || (1e-5..1e16).contains(&a) {
        write!(out, "{v}").unwrap();
    } else {
        write!(out, "{v:e}").unwrap();
    }
}

pub fn format_entry(z: Complex64) -> String {
    let mut s = String::new();
    format_real(&mut s, z.re);
    if z.im != 0.0 {
        s.push(if z.im.is_sign_negative() { '-' } else { '+' });
        format_real(&mut s, z.im.abs());
        s.push('i');
    }
    s
}

/// Formats with shortest round-trip decimals; real matrices print real entries.
pub fn format_matrix(m: &CMatrix) -> String {
    let mut s = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| format_entry(m[(i, j)])).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

pub fn format_hermitian(m: &HermitianMatrix) -> String {
    format_matrix(m.as_matrix())
}

pub fn format_spectrum(s: &Spectrum) -> String {
    let mut out = String::new();
    for &v in s.values() {
        format_real(&mut out, v);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries() {
        assert_eq!(parse_entry("3"), Some(Complex64::new(3.0, 0.0)));
        assert_eq!(parse_entry("-2.5e1"), Some(Complex64::new(-25.0, 0.0)));
        assert_eq!(parse_entry("1+2i"), Some(Complex64::new(1.0, 2.0)));
        assert_eq!(parse_entry("1-2i"), Some(Complex64::new(1.0, -2.0)));
        assert_eq!(parse_entry("-1e-3+4.5e2i"), Some(Complex64::new(-1e-3, 450.0)));
        assert_eq!(parse_entry("2i"), Some(Complex64::new(0.0, 2.0)));
        assert_eq!(parse_entry("-i"), Some(Complex64::new(0.0, -1.0)));
        assert_eq!(parse_entry("1+i"), Some(Complex64::new(1.0, 1.0)));
        assert_eq!(parse_entry("abc"), None);
        assert_eq!(parse_entry("1+2j"), None);
        assert_eq!(parse_entry("nan"), None);
    }

    #[test]
    fn matrix_with_blank_lines() {
        let m = parse_matrix("0 1\n\n1 0\n").unwrap();
        assert_eq!(m, CMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap());
    }

    #[test]
    fn ragged_matrix_names_line() {
        let err = parse_matrix("1 2\n3\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 2, message: "row has 1 entries, expected 2".into() });
        let err = parse_matrix("1 2\n3 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn complex_spectrum_is_rejected() {
        let err = parse_spectrum("1\n1+2i\n").unwrap_err();
        let Error::Parse { line, message } = err else { panic!() };
        assert_eq!(line, 2);
        assert!(message.contains("only have real eigenvalues"), "{message}");
    }

    #[test]
    fn formatting() {
        assert_eq!(format_entry(Complex64::new(1.0, 0.0)), "1");
        assert_eq!(format_entry(Complex64::new(0.5, -2.0)), "0.5-2i");
        assert_eq!(format_entry(Complex64::new(1e-20, 3e20)), "1e-20+3e20i");
        let m = CMatrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        assert_eq!(format_matrix(&m), "1 1\n1 1\n");
        let s = Spectrum::new(vec![0.0, 2.0]).unwrap();
        assert_eq!(format_spectrum(&s), "0\n2\n");
    }
}
