//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line.
//!
//! Run with `cargo test -p nhiep-core --test acceptance -- --nocapture`.

mod common;

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use common::*;
use nhiep_core::experiments::rng::substream;
use nhiep_core::experiments::{run_sweep, write_csv, SweepConfig, SweepResult};
use nhiep_core::image::pgm::{read_pgm, write_pgm, Binary};
use nhiep_core::image::{
    correct_image, distort_image, half_distances, half_spectra, merge_symmetric, noise_stream, split_symmetric,
    synthetic_image, tone_map,
};
use nhiep_core::spectral::eigenvalues;
use nhiep_core::{operator_two_norm, solve_nhiep, GrayImage, HermitianMatrix};

const SEED: u64 = 20_200_908;

fn report(id: u32, name: &str, passed: bool, detail: String) {
    let tag = if passed { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {id}: {name}: {detail}");
}

struct Instance {
    m: HermitianMatrix,
    gap: f64,
    gap_tol: f64,
    spectrum_residual: f64,
    spectrum_tol: f64,
}

/// 500 real-symmetric and 500 complex-Hermitian instances, n ∈ {2..12}.
fn certificate_instances() -> &'static (Vec<Instance>, Duration) {
    static CELL: OnceLock<(Vec<Instance>, Duration)> = OnceLock::new();
    CELL.get_or_init(|| {
        let start = Instant::now();
        let mut rng = substream(SEED, &[1]);
        let mut out = Vec::with_capacity(1000);
        for k in 0..1000 {
            let n = 2 + (k % 11);
            let m = if k < 500 {
                random_real_symmetric(n, &mut rng)
            } else {
                random_complex_hermitian(n, &mut rng)
            };
            let target = random_spectrum(n, 2.0, &mut rng);
            let sol = solve_nhiep(&m, &target).unwrap();
            let achieved = operator_two_norm(&(&sol.corrected - &m)).unwrap();
            let mu = eigenvalues(&m).unwrap();
            let bound = sorted_max_gap(target.values(), mu.values());
            let restored = eigenvalues(&sol.corrected).unwrap();
            let max_target = target.values().iter().fold(0.0f64, |a, v| a.max(v.abs()));
            out.push(Instance {
                gap: (achieved - bound).abs(),
                gap_tol: 1e-8 * n as f64 * (1.0 + m.max_abs()),
                spectrum_residual: sorted_max_gap(restored.values(), target.values()),
                spectrum_tol: 1e-8 * n as f64 * (1.0 + max_target),
                m,
            });
        }
        (out, start.elapsed())
    })
}

#[test]
fn criterion_1_optimality_certificate() {
    let (instances, elapsed) = certificate_instances();
    let violations = instances.iter().filter(|i| i.gap > i.gap_tol).count();
    let worst = instances.iter().map(|i| i.gap / i.gap_tol).fold(0.0, f64::max);
    let complex = instances.iter().filter(|i| !i.m.is_real()).count();
    let passed = violations == 0 && complex == 500 && *elapsed < Duration::from_secs(30);
    report(
        1,
        "optimality certificate",
        passed,
        format!(
            "{} instances ({complex} complex), {violations} violations, worst gap/tol {worst:.2e}, {:.2?}",
            instances.len(),
            elapsed
        ),
    );
    assert!(passed);
}

#[test]
fn criterion_2_weyl_lower_bound() {
    let start = Instant::now();
    let mut rng = substream(SEED, &[2]);
    let mut violations = 0;
    let mut tightest = f64::INFINITY;
    for pair in 0..100 {
        let n = 1 + pair % 8;
        let lambda = random_spectrum(n, 2.0, &mut rng).sorted();
        let mu = random_spectrum(n, 2.0, &mut rng).sorted();
        let bound = sorted_max_gap(lambda.values(), mu.values());
        let d_lambda = HermitianMatrix::diagonal(lambda.values());
        let d_mu = HermitianMatrix::diagonal(mu.values());
        for _ in 0..1000 {
            let t = random_unitary(n, &mut rng);
            let q = &d_lambda.congruence(&t) - &d_mu;
            let norm = operator_two_norm(&q).unwrap();
            if norm < bound - 1e-8 {
                violations += 1;
            }
            tightest = tightest.min(norm - bound);
        }
    }
    let elapsed = start.elapsed();
    let passed = violations == 0 && elapsed < Duration::from_secs(60);
    report(
        2,
        "Weyl lower bound",
        passed,
        format!("100 pairs x 1000 unitaries, {violations} violations, min(norm - bound) {tightest:.3e}, {elapsed:.2?}"),
    );
    assert!(passed);
}

#[test]
fn criterion_3_brute_force_oracle() {
    const GRID: usize = 100_000;
    let mut rng = substream(SEED, &[3]);
    let (mut worst_above, mut worst_below) = (0.0f64, 0.0f64);
    for _ in 0..200 {
        let m = random_real_symmetric(2, &mut rng);
        let target = random_spectrum(2, 2.0, &mut rng);
        let sol = solve_nhiep(&m, &target).unwrap();
        let (l1, l2) = (target.values()[0], target.values()[1]);
        let (a, b, c) = (m.get(0, 0).re, m.get(0, 1).re, m.get(1, 1).re);
        let mut grid_min = f64::INFINITY;
        for k in 0..GRID {
            let theta = std::f64::consts::PI * k as f64 / GRID as f64;
            let (s, co) = theta.sin_cos();
            // R(θ)ᵀ diag(l1, l2) R(θ) with R = [[c, −s], [s, c]]
            let x11 = co * co * l1 + s * s * l2;
            let x12 = -co * s * l1 + s * co * l2;
            let x22 = s * s * l1 + co * co * l2;
            grid_min = grid_min.min(sym2_norm(x11 - a, x12 - b, x22 - c));
        }
        worst_above = worst_above.max(grid_min - sol.achieved_distance);
        worst_below = worst_below.max(sol.achieved_distance - grid_min);
    }
    let passed = worst_above <= 1e-4 && worst_below <= 1e-6;
    report(
        3,
        "brute-force oracle",
        passed,
        format!("200 instances, max(grid - solver) {worst_above:.3e}, max(solver - grid) {worst_below:.3e}"),
    );
    assert!(passed);
}

#[test]
fn criterion_4_spectrum_restoration() {
    let (instances, _) = certificate_instances();
    let violations = instances.iter().filter(|i| i.spectrum_residual > i.spectrum_tol).count();
    let worst = instances.iter().map(|i| i.spectrum_residual / i.spectrum_tol).fold(0.0, f64::max);
    let passed = violations == 0;
    report(
        4,
        "spectrum restoration",
        passed,
        format!("{} instances, {violations} violations, worst residual/tol {worst:.2e}", instances.len()),
    );
    assert!(passed);
}

fn trend_config() -> SweepConfig {
    SweepConfig {
        dims: (2..=20).collect(),
        distortions: vec![0.0, 25.0, 100.0, 200.0],
        samples: 500,
        seed: SEED,
    }
}

fn trend_sweep() -> &'static (Vec<SweepResult>, Duration) {
    static CELL: OnceLock<(Vec<SweepResult>, Duration)> = OnceLock::new();
    CELL.get_or_init(|| {
        let start = Instant::now();
        let rows = run_sweep(&trend_config()).unwrap();
        (rows, start.elapsed())
    })
}

#[test]
fn criterion_5_improvement_ratio_trend() {
    let (rows, elapsed) = trend_sweep();
    let mut problems = Vec::new();
    let control: Vec<&SweepResult> = rows.iter().filter(|r| r.distortion == 0.0).collect();
    if control.len() != 19 || control.iter().any(|r| r.mean_ip != 0.0) {
        problems.push("d=0 control column is not exactly 0".to_string());
    }
    for d in [25.0, 100.0, 200.0] {
        let column: Vec<&SweepResult> = rows.iter().filter(|r| r.distortion == d).collect();
        let inversions = column.windows(2).filter(|w| w[1].mean_ip > w[0].mean_ip).count();
        if inversions > 1 {
            problems.push(format!("d={d}: {inversions} inversions"));
        }
        let outside: Vec<String> = column
            .iter()
            .filter(|r| {
                let band = 2.0 / (r.dim as f64 + 1.0);
                !(0.5 * band..=1.5 * band).contains(&r.mean_ip)
            })
            .map(|r| format!("n={} ip={:.4} (2/(n+1)={:.4})", r.dim, r.mean_ip, 2.0 / (r.dim as f64 + 1.0)))
            .collect();
        if !outside.is_empty() {
            problems.push(format!("d={d}: {} of {} cells outside band, e.g. {}", outside.len(), column.len(), outside[0]));
        }
        if column.iter().any(|r| r.failures > 0) {
            problems.push(format!("d={d}: failed samples"));
        }
    }
    if *elapsed > Duration::from_secs(600) {
        problems.push(format!("runtime {elapsed:.2?} over 10 min"));
    }
    let passed = problems.is_empty();
    let detail = if passed {
        format!("19 dims x 4 distortions x 500 samples, {elapsed:.2?}")
    } else {
        problems.join("; ")
    };
    report(5, "improvement-ratio trend", passed, detail);
    for r in rows.iter().filter(|r| r.dim % 6 == 2) {
        println!("    n={:>2} d={:>5} mean_ip={:.4} std_ip={:.4}", r.dim, r.distortion, r.mean_ip, r.std_ip);
    }
    assert!(passed);
}

fn bundled_image() -> GrayImage {
    read_pgm(include_bytes!("data/synthetic64.pgm")).unwrap()
}

/// Distorted and corrected PGM bytes plus per-half distances for each d.
type ImageRun = (f64, Vec<u8>, Vec<u8>, (f64, f64), (f64, f64));

fn image_pipeline(original: &GrayImage) -> Vec<ImageRun> {
    let spectra = half_spectra(original).unwrap();
    [10.0, 20.0, 30.0, 40.0]
        .into_iter()
        .map(|d| {
            let distorted = distort_image(original, d, &mut noise_stream(SEED, d));
            let corrected = correct_image(&spectra, &distorted).unwrap();
            (
                d,
                write_pgm(&distorted, Binary),
                write_pgm(&corrected, Binary),
                half_distances(&distorted, original).unwrap(),
                half_distances(&corrected, original).unwrap(),
            )
        })
        .collect()
}

#[test]
fn criterion_6_image_pipeline() {
    let original = bundled_image();
    let mut problems = Vec::new();
    if original != synthetic_image(64) {
        problems.push("bundled image differs from generator".to_string());
    }
    let round_trip = merge_symmetric(&split_symmetric(&original).unwrap()).unwrap();
    if round_trip.pixels().iter().zip(original.pixels()).any(|(a, b)| a.to_bits() != b.to_bits()) {
        problems.push("split/merge round trip not bit-exact".to_string());
    }
    for (v, want) in [(0.0, 0.0), (1.0, 1.0), (1.5, 0.5), (2.0, 0.0)] {
        if (tone_map(v) - want).abs() > 1e-12 {
            problems.push(format!("tone_map({v}) = {}", tone_map(v)));
        }
    }
    let mut lines = Vec::new();
    for (d, _, _, (du, dl), (cu, cl)) in image_pipeline(&original) {
        lines.push(format!("d={d}: upper {du:.4}->{cu:.4}, lower {dl:.4}->{cl:.4}"));
        if !(cu < du && cl < dl) {
            problems.push(format!("d={d}: correction did not reduce distance"));
        }
    }
    let passed = problems.is_empty();
    report(6, "image pipeline", passed, if passed { lines.join("; ") } else { problems.join("; ") });
    assert!(passed);
}

#[test]
fn criterion_7_determinism() {
    let (first, _) = trend_sweep();
    let again = run_sweep(&trend_config()).unwrap();
    let csv_equal = write_csv(first) == write_csv(&again);
    let original = bundled_image();
    let a = image_pipeline(&original);
    let b = image_pipeline(&original);
    let pgm_equal = a.iter().zip(&b).all(|(x, y)| x.1 == y.1 && x.2 == y.2);
    let passed = csv_equal && pgm_equal;
    report(
        7,
        "determinism",
        passed,
        format!("sweep CSV identical: {csv_equal}, PGM outputs identical: {pgm_equal}"),
    );
    assert!(passed);
}
