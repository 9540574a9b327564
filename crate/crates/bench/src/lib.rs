//! Seeded fixtures shared by the benchmarks.

use nhiep_core::experiments::distort;
use nhiep_core::experiments::random_symmetric;
use nhiep_core::experiments::rng::substream;
use nhiep_core::{HermitianMatrix, Spectrum};

pub const SEED: u64 = 0x5eed;

/// A random real symmetric matrix of dimension `n`.
pub fn matrix(n: usize) -> HermitianMatrix {
    random_symmetric(n, &mut substream(SEED, &[n as u64]))
}

/// A random symmetric target `A` and its distorted copy `A + dX`.
pub fn problem(n: usize, d: f64) -> (Spectrum, HermitianMatrix) {
    let mut rng = substream(SEED, &[n as u64, d.to_bits()]);
    let a = random_symmetric(n, &mut rng);
    let m = distort(&a, d, &mut rng);
    let lambda = nhiep_core::spectral::eigenvalues(&a).expect("symmetric input");
    (lambda, m)
}
