//! Nearest Hermitian matrix with a prescribed spectrum in the operator 2-norm.
//!
//! For Hermitian `M = U diag(μ) U*` (μ ascending) and real targets `λ`, the
//! minimizer of `‖A − M‖` over Hermitian `A` with spectrum `λ` is
//! `A = U diag(sort(λ)) U*`, and its distance `max_i |λ_i − μ_i|` matches the
//! Weyl lower bound. The crate provides:
//!
//! - [`spectral`]: Hermitian matrices, Jacobi-based sorted eigendecomposition,
//!   Gram–Schmidt, operator 2-norm and the plain-text matrix format.
//! - [`solver`]: [`solve_nhiep`], [`weyl_lower_bound`] and [`certify`].
//! - [`experiments`]: the improvement-ratio Monte Carlo sweep.
//! - [`image`]: symmetric-split correction of grayscale images and PGM I/O.
//!
//! ```
//! use nhiep_core::{solve_nhiep, certify, HermitianMatrix, Spectrum};
//!
//! let m = HermitianMatrix::from_real_upper(2, |i, j| if i == j { 0.0 } else { 1.0 });
//! let sol = solve_nhiep(&m, &Spectrum::new(vec![0.0, 2.0]).unwrap()).unwrap();
//! assert!((sol.achieved_distance - 1.0).abs() < 1e-12);
//! assert!(certify(&sol).passed);
//! ```

pub mod error;
pub mod experiments;
pub mod image;
pub mod solver;
pub mod spectral;
pub mod tolerance;

pub use error::{Error, Result};
pub use experiments::{improvement_ratio, run_sweep, write_csv, SweepConfig, SweepResult};
pub use image::{correct_image, merge_symmetric, split_symmetric, tone_map, GrayImage, HalfSpectra, SymmetricPair};
pub use num_complex::Complex64;
pub use solver::{certify, solve_nhiep, weyl_lower_bound, CertificateReport, NhiepSolution};
pub use spectral::{
    gram_schmidt_orthonormalize, operator_two_norm, sorted_eig, symmetrize, CMatrix, HermitianMatrix,
    SortedSpectralDecomposition, Spectrum,
};
pub use tolerance::Tolerances;
