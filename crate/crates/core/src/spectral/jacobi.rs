//! Cyclic Jacobi eigenvalue iteration for Hermitian matrices.
//!
//! Each step applies a plane rotation `A ← J* A J` that zeroes one
//! off-diagonal pair `(p, q)`. For complex input the rotation carries the
//! phase of `a_pq`:
//!
//! ```text
//! J_pp = c        J_pq = s·e^{iφ}
//! J_qp = −s·e^{−iφ}   J_qq = c          a_pq = |a_pq|·e^{iφ}
//! ```
//!
//! so the `(p, q)` block reduces to the real symmetric case with
//! off-diagonal `|a_pq|`. Accumulating `V ← V J` yields unitary eigenvectors
//! in the columns of `V`. Real symmetric input runs a separate `f64` path.

use num_complex::Complex64;

use super::matrix::{CMatrix, HermitianMatrix};
use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

/// Unsorted eigenpairs; `vectors` is `None` when only values were requested.
pub(crate) struct RawEigen {
    pub values: Vec<f64>,
    pub vectors: Option<CMatrix>,
}

/// Rotation parameters `(t, c, s)` annihilating `g` in `[[app, g], [g, aqq]]`.
fn rotation(app: f64, aqq: f64, g: f64) -> (f64, f64, f64) {
    let h = aqq - app;
    let t = if h.abs() + g.abs() == h.abs() {
        g / h
    } else {
        let theta = 0.5 * h / g;
        let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
        if theta < 0.0 {
            -t
        } else {
            t
        }
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    (t, c, t * c)
}

pub(crate) fn jacobi_eigen(m: &HermitianMatrix, want_vectors: bool, tol: &Tolerances) -> Result<RawEigen> {
    if m.is_real() {
        jacobi_real(m, want_vectors, tol)
    } else {
        jacobi_complex(m, want_vectors, tol)
    }
}

fn jacobi_real(m: &HermitianMatrix, want_vectors: bool, tol: &Tolerances) -> Result<RawEigen> {
    let n = m.dim();
    let mut a = m.real_parts();
    let mut v = want_vectors.then(|| {
        let mut v = vec![0.0; n * n];
        for i in 0..n {
            v[i * n + i] = 1.0;
        }
        v
    });
    let threshold = tol.off_diagonal * a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off_mass = off(&a);
        if off_mass <= threshold {
            break;
        }
        if sweeps == tol.max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                off_diagonal: off_mass,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // Late sweeps: drop entries below the diagonal's rounding level.
                let g = 100.0 * apq.abs();
                if sweeps > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let (t, c, s) = rotation(app, aqq, apq);
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        sweeps += 1;
    }

    Ok(RawEigen {
        values: (0..n).map(|i| a[i * n + i]).collect(),
        vectors: v.map(|v| CMatrix::from_fn(n, n, |i, j| Complex64::new(v[i * n + j], 0.0))),
    })
}

fn jacobi_complex(m: &HermitianMatrix, want_vectors: bool, tol: &Tolerances) -> Result<RawEigen> {
    let n = m.dim();
    let mut a = m.as_matrix().clone();
    let mut v = want_vectors.then(|| CMatrix::identity(n));
    let threshold = tol.off_diagonal * a.frobenius_norm();
    let off = |a: &CMatrix| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[(i, j)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };
    let zero = Complex64::new(0.0, 0.0);

    let mut sweeps = 0;
    loop {
        let off_mass = off(&a);
        if off_mass <= threshold {
            break;
        }
        if sweeps == tol.max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                off_diagonal: off_mass,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let g = apq.norm();
                if g == 0.0 {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let g100 = 100.0 * g;
                if sweeps > 3 && app.abs() + g100 == app.abs() && aqq.abs() + g100 == aqq.abs() {
                    a[(p, q)] = zero;
                    a[(q, p)] = zero;
                    continue;
                }
                let phase = apq / g;
                let (t, c, s) = rotation(app, aqq, g);
                let s_pq = phase * s; // J_pq
                let s_qp = -phase.conj() * s; // J_qp
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * c + akq * s_qp;
                    a[(k, q)] = akp * s_pq + akq * c;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk * c + aqk * s_qp.conj();
                    a[(q, k)] = apk * s_pq.conj() + aqk * c;
                }
                a[(p, p)] = Complex64::new(app - t * g, 0.0);
                a[(q, q)] = Complex64::new(aqq + t * g, 0.0);
                a[(p, q)] = zero;
                a[(q, p)] = zero;
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[(k, p)];
                        let vkq = v[(k, q)];
                        v[(k, p)] = vkp * c + vkq * s_qp;
                        v[(k, q)] = vkp * s_pq + vkq * c;
                    }
                }
            }
        }
        sweeps += 1;
    }

    Ok(RawEigen {
        values: (0..n).map(|i| a[(i, i)].re).collect(),
        vectors: v,
    })
}
