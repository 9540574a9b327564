//! `nhiep`: nearest Hermitian matrix with prescribed eigenvalues.
//!
//! Exit status: 0 on success, 2 on invalid input, 3 when a solution fails its
//! optimality certificate, 1 when an output file cannot be written.

mod commands;
mod ranges;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nhiep_core::experiments::DEFAULT_SEED;
use nhiep_core::Tolerances;

#[derive(Debug, Parser)]
#[command(name = "nhiep", version, about = "Nearest Hermitian matrix with a prescribed spectrum (operator 2-norm)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Correct a Hermitian matrix towards a target spectrum.
    Solve {
        /// Matrix text file: one row per line, entries `x` or `a+bi`.
        #[arg(long)]
        matrix: PathBuf,
        /// Spectrum file: one real eigenvalue per line.
        #[arg(long)]
        spectrum: PathBuf,
        /// Where to write the corrected matrix.
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        tolerances: ToleranceArgs,
    },
    /// Print the lower bound max_i |sort(a)_i - sort(b)_i| for two spectra.
    Bound { a: PathBuf, b: PathBuf },
    /// Improvement-ratio Monte Carlo sweep, written as CSV.
    Sweep {
        /// Dimensions: `2..20`, `2,3,5` or `2,4,...,20`.
        #[arg(long, default_value = "2..20")]
        dims: String,
        /// Distortion factors: `0,25,...,200` or a comma list.
        #[arg(long, default_value = "0,25,...,200")]
        distortions: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// CSV destination; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        tolerances: ToleranceArgs,
    },
    /// Distort a square PGM image and correct it from the original's half spectra.
    Image {
        #[arg(long)]
        input: PathBuf,
        /// Noise level in 8-bit units; pixels receive (d/255)·N(0,1).
        #[arg(long, default_value_t = 20.0)]
        distortion: f64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out_distorted: PathBuf,
        #[arg(long)]
        out_corrected: PathBuf,
        /// Write ASCII (P2) instead of binary (P5) PGM.
        #[arg(long)]
        ascii: bool,
    },
}

#[derive(Debug, Args)]
struct ToleranceArgs {
    /// Optimality certificate coefficient.
    #[arg(long)]
    tol_cert: Option<f64>,
    /// Spectrum restoration coefficient.
    #[arg(long)]
    tol_spectrum: Option<f64>,
    /// Accepted relative asymmetry of the input matrix.
    #[arg(long)]
    tol_hermitian: Option<f64>,
    /// Jacobi stopping threshold relative to the Frobenius norm.
    #[arg(long)]
    tol_offdiag: Option<f64>,
    /// Jacobi sweep budget.
    #[arg(long)]
    max_sweeps: Option<usize>,
}

impl ToleranceArgs {
    fn resolve(&self) -> Tolerances {
        let mut t = Tolerances::default();
        if let Some(v) = self.tol_cert {
            t.certificate = v;
        }
        if let Some(v) = self.tol_spectrum {
            t.spectrum = v;
        }
        if let Some(v) = self.tol_hermitian {
            t.hermitian_input = v;
        }
        if let Some(v) = self.tol_offdiag {
            t.off_diagonal = v;
        }
        if let Some(v) = self.max_sweeps {
            t.max_sweeps = v;
        }
        t
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("NHIEP_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // only fails if a pool already exists, which cannot happen this early
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let result = match cli.command {
        Command::Solve {
            matrix,
            spectrum,
            out,
            tolerances,
        } => commands::solve(&matrix, &spectrum, &out, &tolerances.resolve()),
        Command::Bound { a, b } => commands::bound(&a, &b),
        Command::Sweep {
            dims,
            distortions,
            samples,
            seed,
            out,
            tolerances,
        } => commands::sweep(&dims, &distortions, samples, seed, out.as_deref(), &tolerances.resolve()),
        Command::Image {
            input,
            distortion,
            seed,
            out_distorted,
            out_corrected,
            ascii,
        } => commands::image(&input, distortion, seed, &out_distorted, &out_corrected, ascii),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
