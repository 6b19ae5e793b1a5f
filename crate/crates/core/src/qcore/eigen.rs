//! Cyclic Jacobi eigensolver for small complex Hermitian matrices.

use super::matrix::{Complex, ComplexMatrix, ZERO};
use crate::error::{Error, Result};

/// Hermiticity tolerance accepted by the eigensolver.
pub const EIGEN_HERMITIAN_TOL: f64 = 1e-10;
/// Sweeps stop once the off-diagonal Frobenius norm drops below this.
pub const JACOBI_OFF_TOL: f64 = 1e-14;
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues below this are treated as roundoff and clamped to zero.
pub const CLAMP_TOL: f64 = 1e-10;
/// Eigenvalues below this make a PSD square root fail.
pub const NEGATIVE_REJECT_TOL: f64 = 1e-8;

/// Eigenvalues in descending order; `vectors` holds the matching eigenvectors
/// as columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    /// `V diag(f(λ)) V†`
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.values.len();
        let mut out = ComplexMatrix::zeros(n, n);
        for (k, &lambda) in self.values.iter().enumerate() {
            let w = f(lambda);
            if w == 0.0 {
                continue;
            }
            for i in 0..n {
                let vik = self.vectors[(i, k)] * w;
                for j in 0..n {
                    out[(i, j)] += vik * self.vectors[(j, k)].conj();
                }
            }
        }
        out
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.reconstruct_with(|x| x)
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Diagonalizes a Hermitian matrix with cyclic Jacobi rotations.
///
/// Each rotation zeroes one off-diagonal pair exactly; structural zeros in the
/// input therefore stay exact zeros, which keeps rank-deficient density
/// matrices clean.
pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<HermitianEigen> {
    if !h.is_square() {
        return Err(Error::DimensionMismatch {
            expected: "square matrix".into(),
            actual: format!("{}x{}", h.rows(), h.cols()),
        });
    }
    if !h.is_finite() {
        return Err(Error::InvalidInput("matrix has non-finite entries".into()));
    }
    let deviation = h.hermiticity_error();
    if deviation > EIGEN_HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }

    let n = h.rows();
    let mut a = h.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let tol = JACOBI_OFF_TOL * h.frobenius_norm().max(1.0);

    let mut converged = off_diagonal_norm(&a) < tol;
    let mut sweeps = 0;
    while !converged && sweeps < JACOBI_MAX_SWEEPS {
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        converged = off_diagonal_norm(&a) < tol;
    }
    if !converged {
        return Err(Error::Numerical(format!(
            "Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps"
        )));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors[(row, col)] = v[(row, src)];
        }
    }
    Ok(HermitianEigen { values, vectors })
}

/// One complex Jacobi rotation annihilating `a[p][q]`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let b = apq.norm();
    if b == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let phase = apq / b;

    let theta = (aqq - app) / (2.0 * b);
    let t = if theta.is_infinite() {
        0.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // J = Φ P Φ† with Φ = diag(1, e^{-iθ}) on (p, q) and P the real rotation
    let jpp = Complex::new(c, 0.0);
    let jqq = jpp;
    let jpq = phase * s;
    let jqp = -phase.conj() * s;

    let n = a.rows();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = Complex::new(app - t * b, 0.0);
    a[(q, q)] = Complex::new(aqq + t * b, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * jpp + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * jqq;
    }
}

/// Principal square root of a Hermitian positive semidefinite matrix.
///
/// Eigenvalues in `[-1e-8, 0)` are clamped to zero; anything more negative
/// is rejected.
pub fn matrix_sqrt_psd(h: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eigen(h)?;
    let min = eig.values.last().copied().unwrap_or(0.0);
    if min < -NEGATIVE_REJECT_TOL {
        return Err(Error::NotPositive { eigenvalue: min });
    }
    Ok(eig.reconstruct_with(|x| x.max(0.0).sqrt()))
}

/// Singular values of a square complex matrix, descending.
///
/// Uses the Hermitian embedding `[[0, T], [T†, 0]]`, whose eigenvalues are
/// `±σ_i`; the values come out with absolute (not square-rooted) accuracy.
pub fn singular_values(t: &ComplexMatrix) -> Result<Vec<f64>> {
    if !t.is_square() {
        return Err(Error::DimensionMismatch {
            expected: "square matrix".into(),
            actual: format!("{}x{}", t.rows(), t.cols()),
        });
    }
    let n = t.rows();
    let mut embed = ComplexMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            embed[(i, n + j)] = t[(i, j)];
            embed[(n + j, i)] = t[(i, j)].conj();
        }
    }
    let eig = hermitian_eigen(&embed)?;
    Ok(eig.values[..n].iter().map(|&x| x.max(0.0)).collect())
}
