//! Small dense complex linear algebra: Kronecker products, partial traces
//! over the momentum/spin split, a Jacobi eigensolver and Pauli algebra.

mod eigen;
mod matrix;
mod pauli;

pub use eigen::{
    hermitian_eigen, matrix_sqrt_psd, singular_values, HermitianEigen, CLAMP_TOL,
    EIGEN_HERMITIAN_TOL, JACOBI_MAX_SWEEPS, JACOBI_OFF_TOL, NEGATIVE_REJECT_TOL,
};
pub use matrix::{tensor, tensor_all, Complex, ComplexMatrix, DENSITY_TOL};
pub use pauli::{pauli_decompose, sigma_x, sigma_y, sigma_z, Pauli, PauliCoefficients};

use crate::error::Result;

/// Which half of the (momentum ⊗ spin) register to trace out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subsystem {
    Momentum,
    Spin,
}

/// Traces a 16×16 density matrix over one half of the register.
///
/// Basis order is (momA, momB, spinA, spinB) with momentum indices slowest,
/// so the flat index is `4 * mom + spin`.
pub fn partial_trace(rho: &ComplexMatrix, traced: Subsystem) -> Result<ComplexMatrix> {
    rho.require_shape(16, 16)?;
    let rho = rho.clone().into_density()?;
    let mut out = ComplexMatrix::zeros(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            out[(i, j)] = (0..4)
                .map(|k| match traced {
                    Subsystem::Momentum => rho[(4 * k + i, 4 * k + j)],
                    Subsystem::Spin => rho[(4 * i + k, 4 * j + k)],
                })
                .sum();
        }
    }
    Ok(out.hermitian_part())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn ket(v: &[f64]) -> Vec<Complex> {
        v.iter().map(|&x| Complex::new(x, 0.0)).collect()
    }

    #[test]
    fn product_state_traces_back_to_factors() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let mom = ket(&[h, 0.0, 0.0, h]);
        let spin = ket(&[0.0, 0.6, 0.8, 0.0]);
        let rho_m = ComplexMatrix::outer(&mom, &mom);
        let rho_s = ComplexMatrix::outer(&spin, &spin);
        let joint = tensor(&rho_m, &rho_s);
        let s = partial_trace(&joint, Subsystem::Momentum).unwrap();
        let m = partial_trace(&joint, Subsystem::Spin).unwrap();
        assert!(s.approx_eq(&rho_s, 1e-15));
        assert!(m.approx_eq(&rho_m, 1e-15));
        // pure product: reduced state is a rank-1 projector
        assert!((&m * &m).approx_eq(&m, 1e-15));
    }

    #[test]
    fn rejects_wrong_dimension() {
        let err = partial_trace(&ComplexMatrix::identity(4), Subsystem::Spin).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }
}
