#![allow(dead_code)]

use nhiep_core::experiments::rng::ExperimentRng;
use nhiep_core::{gram_schmidt_orthonormalize, CMatrix, Complex64, HermitianMatrix, Spectrum};
use rand::Rng;
use rand_distr::StandardNormal;

pub fn normal(rng: &mut ExperimentRng) -> f64 {
    rng.sample(StandardNormal)
}

pub fn random_real_symmetric(n: usize, rng: &mut ExperimentRng) -> HermitianMatrix {
    HermitianMatrix::from_real_upper(n, |_, _| normal(rng))
}

pub fn random_complex_hermitian(n: usize, rng: &mut ExperimentRng) -> HermitianMatrix {
    HermitianMatrix::from_upper(n, |i, j| {
        if i == j {
            Complex64::new(normal(rng), 0.0)
        } else {
            Complex64::new(normal(rng), normal(rng))
        }
    })
}

pub fn random_spectrum(n: usize, scale: f64, rng: &mut ExperimentRng) -> Spectrum {
    Spectrum::new((0..n).map(|_| scale * normal(rng)).collect()).unwrap()
}

/// Haar-like unitary from Gram–Schmidt of a complex Gaussian matrix.
pub fn random_unitary(n: usize, rng: &mut ExperimentRng) -> CMatrix {
    let cols: Vec<Vec<Complex64>> = (0..n)
        .map(|_| (0..n).map(|_| Complex64::new(normal(rng), normal(rng))).collect())
        .collect();
    gram_schmidt_orthonormalize(&cols).unwrap()
}

pub fn random_orthogonal(n: usize, rng: &mut ExperimentRng) -> CMatrix {
    let cols: Vec<Vec<Complex64>> = (0..n)
        .map(|_| (0..n).map(|_| Complex64::new(normal(rng), 0.0)).collect())
        .collect();
    gram_schmidt_orthonormalize(&cols).unwrap()
}

/// Spectral radius of the real symmetric 2×2 `[[a, b], [b, c]]` from its
/// characteristic polynomial.
pub fn sym2_norm(a: f64, b: f64, c: f64) -> f64 {
    let mean = 0.5 * (a + c);
    let radius = (0.25 * (a - c) * (a - c) + b * b).sqrt();
    mean.abs() + radius
}

/// Closed-form ascending eigenvalues of `[[a, b], [b, c]]`.
pub fn sym2_eigenvalues(a: f64, b: f64, c: f64) -> (f64, f64) {
    let mean = 0.5 * (a + c);
    let radius = (0.25 * (a - c) * (a - c) + b * b).sqrt();
    (mean - radius, mean + radius)
}

/// `max_i |sort(x)_i − sort(y)_i|` written out independently of the crate.
pub fn sorted_max_gap(x: &[f64], y: &[f64]) -> f64 {
    let mut x = x.to_vec();
    let mut y = y.to_vec();
    x.sort_by(f64::total_cmp);
    y.sort_by(f64::total_cmp);
    x.iter().zip(&y).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}
