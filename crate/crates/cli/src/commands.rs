use std::fs;
use std::path::Path;

use nhiep_core::experiments::{run_sweep_with, write_csv, SweepConfig};
use nhiep_core::image::pgm::{read_pgm, write_pgm, PgmEncoding};
use nhiep_core::image::{correct_image, distort_image, half_distances, half_spectra, noise_stream};
use nhiep_core::solver::{certify_with, solve_nhiep_with};
use nhiep_core::spectral::symmetrize_with;
use nhiep_core::spectral::text::{format_hermitian, parse_matrix, parse_spectrum};
use nhiep_core::{weyl_lower_bound, Error, Tolerances};

use crate::ranges;

pub const EXIT_OUTPUT: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CERTIFICATE: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

fn in_file(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| Failure::input(format!("{}: {e}", path.display()))
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, bytes: impl AsRef<[u8]>) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| Failure {
        code: EXIT_OUTPUT,
        message: format!("cannot write {}: {e}", path.display()),
    })
}

pub fn solve(matrix: &Path, spectrum: &Path, out: &Path, tol: &Tolerances) -> Result<(), Failure> {
    let raw = parse_matrix(&read_text(matrix)?).map_err(in_file(matrix))?;
    let target = parse_spectrum(&read_text(spectrum)?).map_err(in_file(spectrum))?;
    let m = symmetrize_with(&raw, tol).map_err(in_file(matrix))?;
    if target.len() != m.dim() {
        return Err(Failure::input(format!(
            "{} has {} eigenvalues but the matrix is {}x{}",
            spectrum.display(),
            target.len(),
            m.dim(),
            m.dim()
        )));
    }
    let solution = solve_nhiep_with(&m, &target, tol).map_err(|e| Failure::input(e.to_string()))?;
    write_file(out, format_hermitian(&solution.corrected))?;
    let report = certify_with(&solution, tol);
    println!(
        "distance={} bound={} certified={} gap={:e} spectrum_residual={:e}",
        solution.achieved_distance, solution.lower_bound, report.passed, report.optimality_gap, report.spectrum_residual
    );
    if report.passed {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_CERTIFICATE,
            message: format!("certificate failed: {report}"),
        })
    }
}

pub fn bound(a: &Path, b: &Path) -> Result<(), Failure> {
    let sa = parse_spectrum(&read_text(a)?).map_err(in_file(a))?;
    let sb = parse_spectrum(&read_text(b)?).map_err(in_file(b))?;
    let value = weyl_lower_bound(&sa, &sb).map_err(|e| Failure::input(e.to_string()))?;
    println!("{value}");
    Ok(())
}

pub fn sweep(
    dims: &str,
    distortions: &str,
    samples: usize,
    seed: u64,
    out: Option<&Path>,
    tol: &Tolerances,
) -> Result<(), Failure> {
    let config = SweepConfig {
        dims: ranges::parse_dims(dims).map_err(|e| Failure::input(format!("--dims: {e}")))?,
        distortions: ranges::parse_distortions(distortions).map_err(|e| Failure::input(format!("--distortions: {e}")))?,
        samples,
        seed,
    };
    config.validate().map_err(|e| Failure::input(e.to_string()))?;
    let total = config.cells().len();
    let mut done = 0;
    let rows = run_sweep_with(&config, tol, |row| {
        done += 1;
        eprintln!(
            "[{done}/{total}] dim={} distortion={} mean_ip={:.6} std_ip={:.6} failures={}",
            row.dim, row.distortion, row.mean_ip, row.std_ip, row.failures
        );
    })
    .map_err(|e| Failure::input(e.to_string()))?;
    let csv = write_csv(&rows);
    match out {
        Some(path) => write_file(path, csv),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

pub fn image(
    input: &Path,
    distortion: f64,
    seed: u64,
    out_distorted: &Path,
    out_corrected: &Path,
    ascii: bool,
) -> Result<(), Failure> {
    if !(distortion.is_finite() && distortion >= 0.0) {
        return Err(Failure::input(format!("--distortion must be non-negative, got {distortion}")));
    }
    let bytes = fs::read(input).map_err(|e| Failure::input(format!("cannot read {}: {e}", input.display())))?;
    let original = read_pgm(&bytes).map_err(in_file(input))?;
    let spectra = half_spectra(&original).map_err(in_file(input))?;
    let distorted = distort_image(&original, distortion, &mut noise_stream(seed, distortion));
    let corrected = correct_image(&spectra, &distorted).map_err(|e| Failure::input(e.to_string()))?;
    let encoding = if ascii { PgmEncoding::Ascii } else { PgmEncoding::Binary };
    write_file(out_distorted, write_pgm(&distorted, encoding))?;
    write_file(out_corrected, write_pgm(&corrected, encoding))?;
    let measure = |img| half_distances(img, &original).map_err(|e| Failure::input(e.to_string()));
    let (du, dl) = measure(&distorted)?;
    let (cu, cl) = measure(&corrected)?;
    println!(
        "distortion={distortion} upper_distorted={du} upper_corrected={cu} lower_distorted={dl} lower_corrected={cl}"
    );
    Ok(())
}
