use std::fmt;
use std::ops::{Add, Index, IndexMut, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense row-major complex matrix with no structural invariant.
#[derive(Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n_cols {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("row has {} entries, expected {}", row.len(), n_cols),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: n_rows,
            cols: n_cols,
            data,
        })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    /// Builds a square matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<Complex64>]) -> Result<Self> {
        let n = columns.len();
        for c in columns {
            if c.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: c.len(),
                });
            }
        }
        Ok(Self::from_fn(n, n, |i, j| columns[j][i]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Complex64>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn matmul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.data[k * rhs.cols + j];
                }
            }
        }
        out
    }

    /// Largest entry magnitude `‖·‖_max`.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|z| z.im == 0.0)
    }

    /// `‖self − other‖_max`.
    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `‖U*U − I‖_max`.
    pub fn orthonormality_defect(&self) -> f64 {
        self.adjoint()
            .matmul(self)
            .max_abs_diff(&CMatrix::identity(self.cols))
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:>12.6} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Dense Hermitian matrix. `entries[i][j] == conj(entries[j][i])` holds exactly.
#[derive(Clone, PartialEq)]
pub struct HermitianMatrix {
    inner: CMatrix,
}

impl HermitianMatrix {
    /// Wraps a matrix that is already exactly Hermitian.
    pub fn new(m: CMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NonSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        for i in 0..n {
            for j in i..n {
                if m[(i, j)] != m[(j, i)].conj() {
                    return Err(Error::NotNearHermitian {
                        asymmetry: (m[(i, j)] - m[(j, i)].conj()).norm(),
                        tolerance: 0.0,
                    });
                }
            }
        }
        Ok(Self { inner: m })
    }

    /// Builds a matrix from its upper triangle; `f(i, j)` is called for `i <= j` only
    /// and the imaginary part of diagonal values is discarded.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(f(i, i).re, 0.0);
            for j in i + 1..n {
                let z = f(i, j);
                m[(i, j)] = z;
                m[(j, i)] = z.conj();
            }
        }
        Self { inner: m }
    }

    pub fn from_real_upper(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        Self::from_upper(n, |i, j| Complex64::new(f(i, j), 0.0))
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            inner: CMatrix::zeros(n, n),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            inner: CMatrix::identity(n),
        }
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let n = values.len();
        Self::from_real_upper(n, |i, j| if i == j { values[i] } else { 0.0 })
    }

    /// `U · diag(values) · U*`, evaluated on the upper triangle and mirrored.
    pub fn from_eigenpairs(u: &CMatrix, values: &[f64]) -> Self {
        let n = values.len();
        assert!(u.is_square() && u.rows() == n, "eigenvector matrix must be n x n");
        Self::from_upper(n, |i, j| {
            (0..n)
                .map(|k| u[(i, k)] * values[k] * u[(j, k)].conj())
                .sum()
        })
    }

    /// `U* · self · U`
    pub fn congruence(&self, u: &CMatrix) -> Self {
        let raw = u.adjoint().matmul(&self.inner).matmul(u);
        Self::from_upper(raw.rows(), |i, j| (raw[(i, j)] + raw[(j, i)].conj()) * 0.5)
    }

    pub fn dim(&self) -> usize {
        self.inner.rows()
    }

    pub fn as_matrix(&self) -> &CMatrix {
        &self.inner
    }

    pub fn into_matrix(self) -> CMatrix {
        self.inner
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.inner[(i, j)]
    }

    pub fn max_abs(&self) -> f64 {
        self.inner.max_abs()
    }

    pub fn is_real(&self) -> bool {
        self.inner.is_real()
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            inner: CMatrix {
                data: self.inner.data.iter().map(|z| z * factor).collect(),
                ..self.inner.clone()
            },
        }
    }

    /// Real parts in row-major order.
    pub fn real_parts(&self) -> Vec<f64> {
        self.inner.data.iter().map(|z| z.re).collect()
    }

    fn zip_with(&self, rhs: &Self, op: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(self.dim(), rhs.dim(), "Hermitian dimension mismatch");
        // Entry-wise ops commute with conjugation bit-exactly, so the invariant survives.
        Self {
            inner: CMatrix {
                data: self
                    .inner
                    .data
                    .iter()
                    .zip(&rhs.inner.data)
                    .map(|(&a, &b)| op(a, b))
                    .collect(),
                ..self.inner.clone()
            },
        }
    }
}

impl Sub for &HermitianMatrix {
    type Output = HermitianMatrix;

    fn sub(self, rhs: &HermitianMatrix) -> HermitianMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Add for &HermitianMatrix {
    type Output = HermitianMatrix;

    fn add(self, rhs: &HermitianMatrix) -> HermitianMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl fmt::Debug for HermitianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hermitian{:?}", self.inner)
    }
}

/// A list of real eigenvalues. Entries are always finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFiniteTarget { index, value });
        }
        Ok(Self { values })
    }

    /// Accepts complex candidates only when every imaginary part is exactly zero.
    pub fn from_complex(values: &[Complex64]) -> Result<Self> {
        if let Some((index, z)) = values.iter().enumerate().find(|(_, z)| z.im != 0.0) {
            return Err(Error::ComplexTarget {
                index,
                re: z.re,
                im: z.im,
            });
        }
        Self::new(values.iter().map(|z| z.re).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Ascending copy.
    pub fn sorted(&self) -> Spectrum {
        let mut values = self.values.clone();
        values.sort_by(f64::total_cmp);
        Spectrum { values }
    }

    pub fn is_sorted(&self) -> bool {
        self.values.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).fold(0.0, f64::max)
    }
}

impl From<Spectrum> for Vec<f64> {
    fn from(s: Spectrum) -> Self {
        s.values
    }
}
