//! Improvement-ratio Monte Carlo experiment.
//!
//! A random symmetric `A` is distorted to `M = A + d·X` and corrected with the
//! spectrum of `A`. The improvement ratio
//!
//! ```text
//! ip(A, M) = 1 − ‖A − Ψ(M, λ)‖ / ‖A − M‖
//! ```
//!
//! is averaged per `(n, d)` cell.

pub mod rng;

use std::fmt::Write as _;

use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::solver::solve_nhiep_with;
use crate::spectral::{eigenvalues_with, operator_two_norm_with, HermitianMatrix, Spectrum};
use crate::tolerance::Tolerances;

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 20_200_908;

/// CSV header written by [`write_csv`].
pub const CSV_HEADER: &str = "dim,distortion,samples,mean_ip,std_ip,failures";

/// Real symmetric matrix with independent standard-normal entries on and
/// above the diagonal, drawn row by row.
pub fn random_symmetric<R: Rng + ?Sized>(n: usize, rng: &mut R) -> HermitianMatrix {
    HermitianMatrix::from_real_upper(n, |_, _| rng.sample(StandardNormal))
}

/// `a + d·X` with a fresh `X` from [`random_symmetric`]. `d == 0` returns `a`
/// unchanged without drawing.
///
/// Panics if `d` is negative or not finite.
pub fn distort<R: Rng + ?Sized>(a: &HermitianMatrix, d: f64, rng: &mut R) -> HermitianMatrix {
    assert!(d.is_finite() && d >= 0.0, "distortion must be finite and non-negative, got {d}");
    if d == 0.0 {
        return a.clone();
    }
    let x = random_symmetric(a.dim(), rng);
    a + &x.scale(d)
}

/// `1 − ‖a − Ψ(m, target)‖ / ‖a − m‖`, defined as 0 when `m == a`.
pub fn improvement_ratio(a: &HermitianMatrix, m: &HermitianMatrix, target: &Spectrum) -> Result<f64> {
    improvement_ratio_with(a, m, target, &Tolerances::default())
}

pub fn improvement_ratio_with(
    a: &HermitianMatrix,
    m: &HermitianMatrix,
    target: &Spectrum,
    tol: &Tolerances,
) -> Result<f64> {
    let raw = operator_two_norm_with(&(a - m), tol)?;
    if raw == 0.0 {
        return Ok(0.0);
    }
    let corrected = solve_nhiep_with(m, target, tol)?.corrected;
    let remaining = operator_two_norm_with(&(a - &corrected), tol)?;
    Ok(1.0 - remaining / raw)
}

/// Eigenvalue count over the degrees of freedom of a symmetric matrix:
/// `n / (n(n+1)/2) = 2/(n+1)`.
pub fn dof_ratio(n: usize) -> f64 {
    2.0 / (n as f64 + 1.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub dims: Vec<usize>,
    pub distortions: Vec<f64>,
    pub samples: usize,
    pub seed: u64,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if let Some(&n) = self.dims.iter().find(|&&n| n < 2) {
            return Err(Error::Config(format!("dimension {n} is below 2")));
        }
        if let Some(&d) = self.distortions.iter().find(|d| !(d.is_finite() && **d >= 0.0)) {
            return Err(Error::Config(format!("distortion {d} is not a finite non-negative number")));
        }
        if self.samples == 0 {
            return Err(Error::Config("samples must be at least 1".into()));
        }
        if self.dims.is_empty() || self.distortions.is_empty() {
            return Err(Error::Config("sweep needs at least one dimension and one distortion".into()));
        }
        Ok(())
    }

    /// Cells in output order, sorted by `(dim, distortion)`.
    pub fn cells(&self) -> Vec<(usize, f64)> {
        let mut dims = self.dims.clone();
        dims.sort_unstable();
        dims.dedup();
        let mut ds = self.distortions.clone();
        ds.sort_by(f64::total_cmp);
        ds.dedup();
        dims.iter()
            .flat_map(|&n| ds.iter().map(move |&d| (n, d)))
            .collect()
    }
}

/// Aggregate over one `(dim, distortion)` cell.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub dim: usize,
    pub distortion: f64,
    /// Samples attempted.
    pub samples: usize,
    /// Mean over successful samples.
    pub mean_ip: f64,
    /// Sample standard deviation over successful samples.
    pub std_ip: f64,
    pub failures: usize,
}

/// One Monte Carlo draw: returns `ip` for sample `index` of the cell.
pub fn sample_ip(seed: u64, dim: usize, distortion: f64, index: usize, tol: &Tolerances) -> Result<f64> {
    let mut rng = rng::sample_stream(seed, dim, distortion, index);
    let a = random_symmetric(dim, &mut rng);
    let lambda = eigenvalues_with(&a, tol)?;
    let m = distort(&a, distortion, &mut rng);
    improvement_ratio_with(&a, &m, &lambda, tol)
}

fn aggregate(dim: usize, distortion: f64, outcomes: &[Result<f64>]) -> SweepResult {
    let ok: Vec<f64> = outcomes.iter().filter_map(|r| r.as_ref().ok().copied()).collect();
    let count = ok.len();
    let mean = if count == 0 { f64::NAN } else { ok.iter().sum::<f64>() / count as f64 };
    let std = if count < 2 {
        0.0
    } else {
        (ok.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (count - 1) as f64).sqrt()
    };
    SweepResult {
        dim,
        distortion,
        samples: outcomes.len(),
        mean_ip: mean,
        std_ip: std,
        failures: outcomes.len() - count,
    }
}

pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepResult>> {
    run_sweep_with(config, &Tolerances::default(), |_| {})
}

/// Runs every cell, calling `progress` after each one in output order.
///
/// Samples are evaluated in parallel and reduced in index order, so the
/// results are bitwise independent of scheduling.
pub fn run_sweep_with(
    config: &SweepConfig,
    tol: &Tolerances,
    mut progress: impl FnMut(&SweepResult),
) -> Result<Vec<SweepResult>> {
    config.validate()?;
    let mut results = Vec::new();
    for (dim, distortion) in config.cells() {
        let outcomes: Vec<Result<f64>> = (0..config.samples)
            .into_par_iter()
            .map(|i| sample_ip(config.seed, dim, distortion, i, tol))
            .collect();
        let row = aggregate(dim, distortion, &outcomes);
        progress(&row);
        results.push(row);
    }
    Ok(results)
}

fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

/// Renders results as CSV, one row per cell, floats with 17 significant digits.
pub fn write_csv(rows: &[SweepResult]) -> String {
    let mut rows: Vec<&SweepResult> = rows.iter().collect();
    rows.sort_by(|a, b| a.dim.cmp(&b.dim).then(a.distortion.total_cmp(&b.distortion)));
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.dim,
            sci(r.distortion),
            r.samples,
            sci(r.mean_ip),
            sci(r.std_ip),
            r.failures
        )
        .unwrap();
    }
    out
}
