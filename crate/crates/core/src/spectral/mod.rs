//! Dense Hermitian linear algebra: matrix types, sorted spectral
//! decomposition, re-orthonormalization and the operator 2-norm.
//!
//! Storage convention: the columns of [`SortedSpectralDecomposition::eigenvectors`]
//! are eigenvectors, so `M = U · diag(μ) · U*` with `μ` ascending.

mod gram_schmidt;
mod jacobi;
mod matrix;
pub mod text;

use num_complex::Complex64;

pub use gram_schmidt::{gram_schmidt_orthonormalize, gram_schmidt_orthonormalize_with};
pub use matrix::{CMatrix, HermitianMatrix, Spectrum};

use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

/// Replaces a nearly Hermitian matrix by its Hermitian part `(raw + raw*)/2`.
pub fn symmetrize(raw: &CMatrix) -> Result<HermitianMatrix> {
    symmetrize_with(raw, &Tolerances::default())
}

pub fn symmetrize_with(raw: &CMatrix, tol: &Tolerances) -> Result<HermitianMatrix> {
    if !raw.is_square() {
        return Err(Error::NonSquare {
            rows: raw.rows(),
            cols: raw.cols(),
        });
    }
    let n = raw.rows();
    let mut asymmetry = 0.0_f64;
    for i in 0..n {
        for j in i..n {
            asymmetry = asymmetry.max((raw[(i, j)] - raw[(j, i)].conj()).norm());
        }
    }
    let tolerance = tol.hermitian_input_for(raw.max_abs());
    if asymmetry > tolerance {
        return Err(Error::NotNearHermitian { asymmetry, tolerance });
    }
    Ok(HermitianMatrix::from_upper(n, |i, j| {
        if i == j {
            raw[(i, i)]
        } else {
            (raw[(i, j)] + raw[(j, i)].conj()) * 0.5
        }
    }))
}

/// Unitary eigenvectors (columns) paired with ascending eigenvalues.
#[derive(Debug, Clone)]
pub struct SortedSpectralDecomposition {
    eigenvectors: CMatrix,
    eigenvalues: Spectrum,
}

impl SortedSpectralDecomposition {
    pub fn eigenvectors(&self) -> &CMatrix {
        &self.eigenvectors
    }

    pub fn eigenvalues(&self) -> &Spectrum {
        &self.eigenvalues
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `U · diag(values) · U*` for an arbitrary replacement spectrum, in the
    /// order of the stored eigenvectors.
    pub fn reassemble(&self, values: &[f64]) -> HermitianMatrix {
        HermitianMatrix::from_eigenpairs(&self.eigenvectors, values)
    }

    pub fn reconstruct(&self) -> HermitianMatrix {
        self.reassemble(self.eigenvalues.values())
    }
}

/// Diagonalizes `m` with ascending eigenvalues.
///
/// Ties are broken by the Jacobi output index, and every eigenvector is
/// rotated so that its largest-magnitude entry is real and positive. Within a
/// repeated eigenvalue the basis is some orthonormal basis of the eigenspace.
pub fn sorted_eig(m: &HermitianMatrix) -> Result<SortedSpectralDecomposition> {
    sorted_eig_with(m, &Tolerances::default())
}

pub fn sorted_eig_with(m: &HermitianMatrix, tol: &Tolerances) -> Result<SortedSpectralDecomposition> {
    let n = m.dim();
    let raw = jacobi::jacobi_eigen(m, true, tol)?;
    let vectors = raw.vectors.expect("eigenvectors requested");
    let orthonormal = gram_schmidt_orthonormalize_with(&vectors.columns(), tol)?;

    let order = ascending_order(&raw.values);
    let mut eigenvectors = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let phase = column_phase(&orthonormal, src);
        for i in 0..n {
            eigenvectors[(i, dst)] = orthonormal[(i, src)] * phase;
        }
    }
    let eigenvalues = Spectrum::new(order.iter().map(|&k| raw.values[k]).collect())?;
    Ok(SortedSpectralDecomposition {
        eigenvectors,
        eigenvalues,
    })
}

/// Ascending eigenvalues only; skips eigenvector accumulation.
pub fn eigenvalues(m: &HermitianMatrix) -> Result<Spectrum> {
    eigenvalues_with(m, &Tolerances::default())
}

pub fn eigenvalues_with(m: &HermitianMatrix, tol: &Tolerances) -> Result<Spectrum> {
    let raw = jacobi::jacobi_eigen(m, false, tol)?;
    let mut values = raw.values;
    values.sort_by(f64::total_cmp);
    Spectrum::new(values)
}

/// Operator 2-norm of a Hermitian matrix: its largest absolute eigenvalue.
pub fn operator_two_norm(m: &HermitianMatrix) -> Result<f64> {
    operator_two_norm_with(m, &Tolerances::default())
}

pub fn operator_two_norm_with(m: &HermitianMatrix, tol: &Tolerances) -> Result<f64> {
    Ok(eigenvalues_with(m, tol)?.max_abs())
}

fn ascending_order(values: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    // stable: equal eigenvalues keep their original index order
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    order
}

/// Unit factor making the first largest-magnitude entry of column `j` real positive.
fn column_phase(u: &CMatrix, j: usize) -> Complex64 {
    let mut best = Complex64::new(0.0, 0.0);
    for i in 0..u.rows() {
        if u[(i, j)].norm() > best.norm() {
            best = u[(i, j)];
        }
    }
    if best.norm() == 0.0 {
        Complex64::new(1.0, 0.0)
    } else if best.im == 0.0 {
        Complex64::new(best.re.signum(), 0.0)
    } else {
        best.conj() / best.norm()
    }
}
