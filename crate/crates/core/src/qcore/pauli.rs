//! Pauli matrices and two-qubit Pauli parametrizations.

use super::matrix::{tensor, Complex, ComplexMatrix, I, ONE, ZERO};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    pub fn matrix(self) -> ComplexMatrix {
        match self {
            Pauli::X => ComplexMatrix::from_rows(&[[ZERO, ONE], [ONE, ZERO]]),
            Pauli::Y => ComplexMatrix::from_rows(&[[ZERO, -I], [I, ZERO]]),
            Pauli::Z => ComplexMatrix::from_rows(&[[ONE, ZERO], [ZERO, -ONE]]),
        }
    }
}

pub fn sigma_x() -> ComplexMatrix {
    Pauli::X.matrix()
}

pub fn sigma_y() -> ComplexMatrix {
    Pauli::Y.matrix()
}

pub fn sigma_z() -> ComplexMatrix {
    Pauli::Z.matrix()
}

/// Coefficients of `ρ = ¼[I⊗I + c·σ⊗I + I⊗d·σ + Σ γ_jk σ_j⊗σ_k]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PauliCoefficients {
    pub c: [f64; 3],
    pub d: [f64; 3],
    pub gamma: [[f64; 3]; 3],
}

impl PauliCoefficients {
    /// The local-unitary normal form: correlations only on `σ_i ⊗ σ_i`.
    pub fn with_diagonal_correlations(a: [f64; 3], b: [f64; 3], corr: [f64; 3]) -> Self {
        let mut gamma = [[0.0; 3]; 3];
        for i in 0..3 {
            gamma[i][i] = corr[i];
        }
        Self { c: a, d: b, gamma }
    }

    pub fn has_diagonal_correlations(&self, tol: f64) -> bool {
        (0..3).all(|j| (0..3).all(|k| j == k || self.gamma[j][k].abs() <= tol))
    }

    /// Reassembles the 4×4 matrix.
    pub fn to_matrix(&self) -> ComplexMatrix {
        let id = ComplexMatrix::identity(2);
        let mut acc = ComplexMatrix::identity(4);
        for (i, p) in Pauli::ALL.iter().enumerate() {
            let s = p.matrix();
            if self.c[i] != 0.0 {
                acc = &acc + &tensor(&s, &id).scale_real(self.c[i]);
            }
            if self.d[i] != 0.0 {
                acc = &acc + &tensor(&id, &s).scale_real(self.d[i]);
            }
            for (k, q) in Pauli::ALL.iter().enumerate() {
                if self.gamma[i][k] != 0.0 {
                    acc = &acc + &tensor(&s, &q.matrix()).scale_real(self.gamma[i][k]);
                }
            }
        }
        acc.scale_real(0.25)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            worst = worst
                .max((self.c[i] - other.c[i]).abs())
                .max((self.d[i] - other.d[i]).abs());
            for k in 0..3 {
                worst = worst.max((self.gamma[i][k] - other.gamma[i][k]).abs());
            }
        }
        worst
    }
}

/// Imaginary parts larger than this mean the input was not Hermitian.
const REAL_COEFF_TOL: f64 = 1e-12;

/// Expands a Hermitian two-qubit matrix in the Pauli basis:
/// `c_i = Tr(ρ σ_i⊗I)`, `d_k = Tr(ρ I⊗σ_k)`, `γ_jk = Tr(ρ σ_j⊗σ_k)`.
pub fn pauli_decompose(rho: &ComplexMatrix) -> Result<PauliCoefficients> {
    rho.require_shape(4, 4)?;
    let id = ComplexMatrix::identity(2);
    let coeff = |op: &ComplexMatrix| -> Result<f64> {
        let z: Complex = (rho * op).trace();
        if z.im.abs() > REAL_COEFF_TOL {
            return Err(Error::NotHermitian {
                deviation: z.im.abs(),
            });
        }
        Ok(z.re)
    };
    let mut out = PauliCoefficients::default();
    for (i, p) in Pauli::ALL.iter().enumerate() {
        let s = p.matrix();
        out.c[i] = coeff(&tensor(&s, &id))?;
        out.d[i] = coeff(&tensor(&id, &s))?;
        for (k, q) in Pauli::ALL.iter().enumerate() {
            out.gamma[i][k] = coeff(&tensor(&s, &q.matrix()))?;
        }
    }
    Ok(out)
}
