//! Numerical tolerances.
//!
//! Every threshold is a dimensionless coefficient; the accessor methods apply
//! the scaling by dimension and magnitude used throughout the crate.

/// Tolerance coefficients, with defaults sized for double precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative asymmetry accepted by `symmetrize`.
    pub hermitian_input: f64,
    /// Per-dimension bound on `‖U*U − I‖_max`.
    pub orthonormality: f64,
    /// Per-dimension bound on the reconstruction residual.
    pub residual: f64,
    /// Relative residual below which a Gram–Schmidt column counts as dependent.
    pub rank: f64,
    /// Per-dimension bound on unitary-invariance drift of the 2-norm.
    pub norm: f64,
    /// Jacobi stopping threshold, relative to `‖m‖_F`.
    pub off_diagonal: f64,
    /// Per-dimension bound on `|achieved − lower bound|`.
    pub certificate: f64,
    /// Per-dimension bound on the spectrum restoration error.
    pub spectrum: f64,
    /// Maximum number of full Jacobi sweeps.
    pub max_sweeps: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            hermitian_input: 1e-8,
            orthonormality: 1e-10,
            residual: 1e-10,
            rank: 1e-12,
            norm: 1e-10,
            off_diagonal: 1e-14,
            certificate: 1e-8,
            spectrum: 1e-8,
            max_sweeps: 30,
        }
    }
}

impl Tolerances {
    pub fn hermitian_input_for(&self, max_abs: f64) -> f64 {
        self.hermitian_input * max_abs.max(1.0)
    }

    pub fn orthonormality_for(&self, n: usize) -> f64 {
        self.orthonormality * n as f64
    }

    /// Reconstruction bound `τ_resid·(1 + scale)`.
    pub fn residual_for(&self, n: usize, scale: f64) -> f64 {
        self.residual * n as f64 * (1.0 + scale)
    }

    pub fn norm_for(&self, n: usize, max_abs: f64) -> f64 {
        self.norm * n as f64 * max_abs
    }

    /// `τ_cert = c·n·(1 + ‖m‖_max)`.
    pub fn certificate_for(&self, n: usize, max_abs: f64) -> f64 {
        self.certificate * n as f64 * (1.0 + max_abs)
    }

    /// `τ_spec = c·n·(1 + max|λ|)`.
    pub fn spectrum_for(&self, n: usize, max_abs_target: f64) -> f64 {
        self.spectrum * n as f64 * (1.0 + max_abs_target)
    }
}
