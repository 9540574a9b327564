use thiserror::Error;

/// Errors raised by the spectral, solver, experiment and image layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: {rows} rows, {cols} columns")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: asymmetry {asymmetry:e} exceeds tolerance {tolerance:e}")]
    NotNearHermitian { asymmetry: f64, tolerance: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal mass {off_diagonal:e})")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    #[error("column {column} is linearly dependent on its predecessors (residual {residual:e})")]
    RankDeficient { column: usize, residual: f64 },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error(
        "target eigenvalue {index} is not real ({re}{im:+}i): a Hermitian matrix can only have real eigenvalues"
    )]
    ComplexTarget { index: usize, re: f64, im: f64 },

    #[error("target eigenvalue {index} is not finite ({value})")]
    NonFiniteTarget { index: usize, value: f64 },

    #[error("image is not square: {width}x{height}")]
    NonSquareImage { width: usize, height: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid PGM data: {0}")]
    Pgm(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
