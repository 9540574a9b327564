//! Closed-form nearest Hermitian matrix with a prescribed spectrum.
//!
//! Given Hermitian `M = U diag(μ) U*` with `μ` ascending and a real target
//! spectrum `λ`, the matrix `A = U diag(sort(λ)) U*` minimizes `‖A − M‖` in
//! the operator 2-norm over all Hermitian matrices with spectrum `λ`. The
//! distance it attains, `max_i |λ_i − μ_i|`, is also a lower bound for every
//! such `A` (Weyl), and [`certify`] checks that the two coincide.

use crate::error::{Error, Result};
use crate::spectral::{
    eigenvalues_with, operator_two_norm_with, sorted_eig_with, symmetrize_with, HermitianMatrix, Spectrum,
};
use crate::tolerance::Tolerances;

/// Output of [`solve_nhiep`].
#[derive(Debug, Clone)]
pub struct NhiepSolution {
    /// The corrected matrix `A`.
    pub corrected: HermitianMatrix,
    /// The input matrix `M`.
    pub source: HermitianMatrix,
    /// `‖A − M‖`.
    pub achieved_distance: f64,
    /// `max_i |λ_i − μ_i|`.
    pub lower_bound: f64,
    /// Ascending eigenvalues `μ` of the source.
    pub source_spectrum: Spectrum,
    /// Ascending target `λ`.
    pub target_spectrum: Spectrum,
}

/// `max_i |sort(target)_i − sort(source)_i|`: a lower bound on `‖A − B‖` for
/// Hermitian `A`, `B` with these spectra.
pub fn weyl_lower_bound(target: &Spectrum, source: &Spectrum) -> Result<f64> {
    if target.len() != source.len() {
        return Err(Error::LengthMismatch {
            expected: source.len(),
            found: target.len(),
        });
    }
    let (t, s) = (target.sorted(), source.sorted());
    Ok(t.values()
        .iter()
        .zip(s.values())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}

pub fn solve_nhiep(m: &HermitianMatrix, target: &Spectrum) -> Result<NhiepSolution> {
    solve_nhiep_with(m, target, &Tolerances::default())
}

pub fn solve_nhiep_with(m: &HermitianMatrix, target: &Spectrum, tol: &Tolerances) -> Result<NhiepSolution> {
    if target.len() != m.dim() {
        return Err(Error::LengthMismatch {
            expected: m.dim(),
            found: target.len(),
        });
    }
    let decomposition = sorted_eig_with(m, tol)?;
    let lambda = target.sorted();
    let corrected = symmetrize_with(decomposition.reassemble(lambda.values()).as_matrix(), tol)?;
    let achieved_distance = operator_two_norm_with(&(&corrected - m), tol)?;
    let lower_bound = weyl_lower_bound(&lambda, decomposition.eigenvalues())?;
    Ok(NhiepSolution {
        corrected,
        source: m.clone(),
        achieved_distance,
        lower_bound,
        source_spectrum: decomposition.eigenvalues().clone(),
        target_spectrum: lambda,
    })
}

/// Residuals recomputed by [`certify`].
#[derive(Debug, Clone, PartialEq)]
pub struct CertificateReport {
    pub passed: bool,
    pub achieved_distance: f64,
    pub lower_bound: f64,
    /// `|achieved − bound|`
    pub optimality_gap: f64,
    pub optimality_tolerance: f64,
    /// `max_i |eig(A)_i − λ_i|`
    pub spectrum_residual: f64,
    pub spectrum_tolerance: f64,
}

impl std::fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "certified={} distance={} bound={} gap={:e} gap_tol={:e} spectrum_residual={:e} spectrum_tol={:e}",
            self.passed,
            self.achieved_distance,
            self.lower_bound,
            self.optimality_gap,
            self.optimality_tolerance,
            self.spectrum_residual,
            self.spectrum_tolerance
        )
    }
}

/// Re-measures a solution independently of the values stored in it.
///
/// Failures are reported in the returned report; an eigensolver failure
/// inside the check counts as a failed certificate with infinite residuals.
pub fn certify(solution: &NhiepSolution) -> CertificateReport {
    certify_with(solution, &Tolerances::default())
}

pub fn certify_with(solution: &NhiepSolution, tol: &Tolerances) -> CertificateReport {
    let n = solution.source.dim();
    let target = solution.target_spectrum.sorted();
    let optimality_tolerance = tol.certificate_for(n, solution.source.max_abs());
    let spectrum_tolerance = tol.spectrum_for(n, target.max_abs());
    let measured = (|| -> Result<(f64, f64, f64)> {
        let achieved = operator_two_norm_with(&(&solution.corrected - &solution.source), tol)?;
        let mu = eigenvalues_with(&solution.source, tol)?;
        let bound = weyl_lower_bound(&target, &mu)?;
        let restored = eigenvalues_with(&solution.corrected, tol)?;
        let residual = weyl_lower_bound(&restored, &target)?;
        Ok((achieved, bound, residual))
    })();
    let (achieved_distance, lower_bound, spectrum_residual) = measured.unwrap_or((f64::INFINITY, 0.0, f64::INFINITY));
    let optimality_gap = (achieved_distance - lower_bound).abs();
    CertificateReport {
        passed: optimality_gap <= optimality_tolerance && spectrum_residual <= spectrum_tolerance,
        achieved_distance,
        lower_bound,
        optimality_gap,
        optimality_tolerance,
        spectrum_residual,
        spectrum_tolerance,
    }
}
