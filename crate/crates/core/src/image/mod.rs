//! Eigenvalue correction of grayscale images.
//!
//! A square image is split into two symmetric matrices by reflecting its
//! upper and lower triangles. Each half keeps its original spectrum as side
//! data; after distortion both halves are corrected towards those spectra and
//! merged back.

pub mod pgm;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::experiments::rng::{substream, ExperimentRng};
use crate::solver::solve_nhiep_with;
use crate::spectral::{eigenvalues_with, operator_two_norm_with, HermitianMatrix, Spectrum};
use crate::tolerance::Tolerances;

/// Row-major image of real intensities. Loaded images lie in `[0, 1]`;
/// processed ones may leave that range until [`tone_map`] is applied on save.
#[derive(Debug, Clone, PartialEq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<f64>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, pixels: Vec<f64>) -> Result<Self> {
        if pixels.len() != width * height {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} image needs {} pixels, got {}",
                width,
                height,
                width * height,
                pixels.len()
            )));
        }
        Ok(Self { width, height, pixels })
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let pixels = (0..height)
            .flat_map(|r| (0..width).map(move |c| (r, c)))
            .map(|(r, c)| f(r, c))
            .collect();
        Self { width, height, pixels }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[f64] {
        &self.pixels
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.pixels[row * self.width + col]
    }

    fn square_dim(&self) -> Result<usize> {
        if self.width != self.height {
            return Err(Error::NonSquareImage {
                width: self.width,
                height: self.height,
            });
        }
        Ok(self.width)
    }
}

/// The two reflected halves of a square image.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricPair {
    pub upper: HermitianMatrix,
    pub lower: HermitianMatrix,
}

impl SymmetricPair {
    pub fn dim(&self) -> usize {
        self.upper.dim()
    }
}

/// Spectra of the original halves, carried next to the distorted image.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfSpectra {
    pub upper: Spectrum,
    pub lower: Spectrum,
}

pub fn split_symmetric(img: &GrayImage) -> Result<SymmetricPair> {
    let n = img.square_dim()?;
    Ok(SymmetricPair {
        upper: HermitianMatrix::from_real_upper(n, |i, j| img.get(i, j)),
        lower: HermitianMatrix::from_real_upper(n, |i, j| img.get(j, i)),
    })
}

/// Strict upper triangle from `upper`, strict lower from `lower`, diagonal averaged.
pub fn merge_symmetric(pair: &SymmetricPair) -> Result<GrayImage> {
    let n = pair.upper.dim();
    if pair.lower.dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "upper half is {n}x{n}, lower half is {m}x{m}",
            m = pair.lower.dim()
        )));
    }
    Ok(GrayImage::from_fn(n, n, |i, j| {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => pair.upper.get(i, j).re,
            Greater => pair.lower.get(i, j).re,
            Equal => (pair.upper.get(i, i).re + pair.lower.get(i, i).re) / 2.0,
        }
    }))
}

pub fn half_spectra(img: &GrayImage) -> Result<HalfSpectra> {
    half_spectra_with(img, &Tolerances::default())
}

pub fn half_spectra_with(img: &GrayImage, tol: &Tolerances) -> Result<HalfSpectra> {
    let pair = split_symmetric(img)?;
    let (upper, lower) = rayon::join(|| eigenvalues_with(&pair.upper, tol), || eigenvalues_with(&pair.lower, tol));
    Ok(HalfSpectra {
        upper: upper?,
        lower: lower?,
    })
}

/// Corrects each half of `distorted` towards the carried spectra and merges.
pub fn correct_image(original_spectra: &HalfSpectra, distorted: &GrayImage) -> Result<GrayImage> {
    correct_image_with(original_spectra, distorted, &Tolerances::default())
}

pub fn correct_image_with(original_spectra: &HalfSpectra, distorted: &GrayImage, tol: &Tolerances) -> Result<GrayImage> {
    let pair = split_symmetric(distorted)?;
    let (upper, lower) = rayon::join(
        || solve_nhiep_with(&pair.upper, &original_spectra.upper, tol),
        || solve_nhiep_with(&pair.lower, &original_spectra.lower, tol),
    );
    merge_symmetric(&SymmetricPair {
        upper: upper?.corrected,
        lower: lower?.corrected,
    })
}

/// Generator for the pixel noise of [`distort_image`].
pub fn noise_stream(seed: u64, d: f64) -> ExperimentRng {
    // tag keeps image streams apart from sweep streams
    substream(seed, &[0x1a6e, d.to_bits()])
}

/// Adds `(d/255)·N(0,1)` independently to every pixel, `d` in 8-bit units.
/// Each reflected half then sees a standard-normal symmetric distortion.
pub fn distort_image<R: Rng + ?Sized>(img: &GrayImage, d: f64, rng: &mut R) -> GrayImage {
    assert!(d.is_finite() && d >= 0.0, "distortion must be finite and non-negative, got {d}");
    if d == 0.0 {
        return img.clone();
    }
    let scale = d / 255.0;
    GrayImage {
        pixels: img
            .pixels
            .iter()
            .map(|&p| p + scale * rng.sample::<f64, _>(StandardNormal))
            .collect(),
        ..img.clone()
    }
}

/// Operator 2-norm distances between the matching halves of two images.
pub fn half_distances(a: &GrayImage, b: &GrayImage) -> Result<(f64, f64)> {
    let (pa, pb) = (split_symmetric(a)?, split_symmetric(b)?);
    if pa.dim() != pb.dim() {
        return Err(Error::DimensionMismatch(format!("{} vs {}", pa.dim(), pb.dim())));
    }
    let tol = Tolerances::default();
    Ok((
        operator_two_norm_with(&(&pa.upper - &pb.upper), &tol)?,
        operator_two_norm_with(&(&pa.lower - &pb.lower), &tol)?,
    ))
}

/// Periodic black-white-black map with period 2: `1 − |(v mod 2) − 1|`.
pub fn tone_map(v: f64) -> f64 {
    1.0 - (v.rem_euclid(2.0) - 1.0).abs()
}

/// Deterministic `n×n` test pattern quantized to 8 bits: a diagonal gradient
/// with a bright disc and a dark square.
pub fn synthetic_image(n: usize) -> GrayImage {
    let denom = (2 * n.saturating_sub(1)).max(1);
    GrayImage::from_fn(n, n, |r, c| {
        let (x, y) = (c * 64 / n.max(1), r * 64 / n.max(1));
        let dx = x as i64 - 40;
        let dy = y as i64 - 20;
        let level = if dx * dx + dy * dy < 100 {
            230
        } else if (10..30).contains(&y) && (5..25).contains(&x) {
            51
        } else {
            (r + c) * 255 / denom
        };
        level as f64 / 255.0
    })
}
