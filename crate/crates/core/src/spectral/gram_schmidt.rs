use num_complex::Complex64;

use super::matrix::CMatrix;
use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

fn dot(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Orthonormalizes `columns` in order with modified Gram–Schmidt.
///
/// Column `k` of the result spans the same nested subspace as the first `k`
/// inputs. Each column gets a second projection pass, which keeps the output
/// orthonormal to working precision even for badly conditioned input.
pub fn gram_schmidt_orthonormalize(columns: &[Vec<Complex64>]) -> Result<CMatrix> {
    gram_schmidt_orthonormalize_with(columns, &Tolerances::default())
}

pub fn gram_schmidt_orthonormalize_with(columns: &[Vec<Complex64>], tol: &Tolerances) -> Result<CMatrix> {
    let n = columns.len();
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for (k, col) in columns.iter().enumerate() {
        if col.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: col.len(),
            });
        }
        let original = norm(col);
        let mut w = col.clone();
        for _pass in 0..2 {
            for q in &basis {
                let r = dot(q, &w);
                for (wi, qi) in w.iter_mut().zip(q) {
                    *wi -= r * qi;
                }
            }
        }
        let residual = norm(&w);
        if original == 0.0 || residual <= tol.rank * original {
            return Err(Error::RankDeficient {
                column: k,
                residual,
            });
        }
        for wi in &mut w {
            *wi /= residual;
        }
        basis.push(w);
    }
    CMatrix::from_columns(&basis)
}
