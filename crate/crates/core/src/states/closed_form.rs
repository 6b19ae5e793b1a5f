//! Closed-form reduced density matrices for each scenario, as explicit 4×4
//! matrices and as Pauli-basis coefficients.
//!
//! Matrices use the two-qubit basis |00⟩, |01⟩, |10⟩, |11⟩ (first index is
//! particle A). The rest-frame forms are the boosted forms at `phi = 0`.

use super::{ScenarioKind, ScenarioSpec, Sign};
use crate::error::Result;
use crate::qcore::{Complex, ComplexMatrix, PauliCoefficients, Subsystem};

fn re(x: f64) -> Complex {
    Complex::new(x, 0.0)
}

/// Matrix supported on the |01⟩, |10⟩ block: `[[a, z], [z̄, b]]`.
fn middle_block(a: f64, z: Complex, b: f64) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    m[(1, 1)] = re(a);
    m[(1, 2)] = z;
    m[(2, 1)] = z.conj();
    m[(2, 2)] = re(b);
    m
}

/// Matrix supported on the |00⟩, |11⟩ corners: `[[a, z], [z̄, b]]`.
fn corner_block(a: f64, z: Complex, b: f64) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    m[(0, 0)] = re(a);
    m[(0, 3)] = z;
    m[(3, 0)] = z.conj();
    m[(3, 3)] = re(b);
    m
}

/// Identical-particle spin state after the boost:
/// `½[[0],[0, 1, (1−2η)cos2φ, 0],[0, (1−2η)cos2φ, 1, 0],[0]]`.
pub fn eta_spin_matrix(eta: f64, phi: f64) -> ComplexMatrix {
    let k = (1.0 - 2.0 * eta) * (2.0 * phi).cos();
    middle_block(0.5, re(0.5 * k), 0.5)
}

/// Identical-particle momentum state after the boost; same shape as the spin
/// matrix with the off-diagonal sign reversed.
pub fn eta_momentum_matrix(eta: f64, phi: f64) -> ComplexMatrix {
    let k = (2.0 * eta - 1.0) * (2.0 * phi).cos();
    middle_block(0.5, re(0.5 * k), 0.5)
}

/// `ρ_ψ±(ξ) = |ψ±(ξ)⟩⟨ψ±(ξ)|` in the rest frame.
pub fn psi_projector(xi: f64, sign: Sign) -> ComplexMatrix {
    xi_spin_matrix(xi, sign, 0.0)
}

/// Boosted electron–muon spin state:
/// `[[0],[0, 1−ξ, ±√(ξ(1−ξ))cos2φ, 0],[0, ±√(ξ(1−ξ))cos2φ, ξ, 0],[0]]`.
pub fn xi_spin_matrix(xi: f64, sign: Sign, phi: f64) -> ComplexMatrix {
    let off = sign.value() * (xi * (1.0 - xi)).sqrt() * (2.0 * phi).cos();
    middle_block(1.0 - xi, re(off), xi)
}

/// Boosted electron–muon momentum state, `½[[1, w],[w̄, 1]]` on the corners
/// with `w = cos2φ − i(1−2ξ)sin2φ`. Independent of the ± sign.
pub fn xi_momentum_matrix(xi: f64, phi: f64) -> ComplexMatrix {
    let (s2, c2) = (2.0 * phi).sin_cos();
    let w = Complex::new(c2, -(1.0 - 2.0 * xi) * s2);
    corner_block(0.5, w * 0.5, 0.5)
}

/// Spin state of the antisymmetric-branch electron–muon pair; identical to
/// the aligned-branch result.
pub fn appendix_d_spin_matrix(xi: f64, sign: Sign, phi: f64) -> ComplexMatrix {
    xi_spin_matrix(xi, sign, phi)
}

/// Momentum state of the antisymmetric-branch electron–muon pair:
/// `½[[1, −σz],[−σz̄, 1]]` on |01⟩,|10⟩ with `z = cos2φ + i(1−2ξ)sin2φ`
/// and σ = ±1.
pub fn appendix_d_momentum_matrix(xi: f64, sign: Sign, phi: f64) -> ComplexMatrix {
    let (s2, c2) = (2.0 * phi).sin_cos();
    let z = Complex::new(c2, (1.0 - 2.0 * xi) * s2);
    middle_block(0.5, z * (-0.5 * sign.value()), 0.5)
}

/// Closed-form reduced matrix of `which` degree of freedom after a boost by
/// `phi` (`phi = 0` gives the rest frame).
pub fn closed_form_matrix(spec: &ScenarioSpec, which: Subsystem, phi: f64) -> ComplexMatrix {
    let p = spec.parameter;
    match (spec.kind, which) {
        (ScenarioKind::IndistinguishableEta, Subsystem::Spin) => eta_spin_matrix(p, phi),
        (ScenarioKind::IndistinguishableEta, Subsystem::Momentum) => eta_momentum_matrix(p, phi),
        (ScenarioKind::DistinguishableXi, Subsystem::Spin) => xi_spin_matrix(p, spec.sign, phi),
        (ScenarioKind::DistinguishableXi, Subsystem::Momentum) => xi_momentum_matrix(p, phi),
        (ScenarioKind::AppendixD, Subsystem::Spin) => appendix_d_spin_matrix(p, spec.sign, phi),
        (ScenarioKind::AppendixD, Subsystem::Momentum) => {
            appendix_d_momentum_matrix(p, spec.sign, phi)
        }
    }
}

/// Pauli coefficients of the boosted electron–muon spin state:
/// `c = (0,0,1−2ξ)`, `d = (0,0,−(1−2ξ))`,
/// `γ = diag(±2√(ξ(1−ξ))cos2φ, ±2√(ξ(1−ξ))cos2φ, −1)`.
pub fn xi_spin_pauli(xi: f64, sign: Sign, phi: f64) -> PauliCoefficients {
    let a = 1.0 - 2.0 * xi;
    let t = sign.value() * 2.0 * (xi * (1.0 - xi)).sqrt() * (2.0 * phi).cos();
    PauliCoefficients::with_diagonal_correlations([0.0, 0.0, a], [0.0, 0.0, -a], [t, t, -1.0])
}

/// Pauli coefficients of the boosted electron–muon momentum state, assembled
/// from the branch overlaps: `¼[I + σ̃_z⊗σ̃_z + a(σ̃_x⊗σ̃_x − σ̃_y⊗σ̃_y)
/// − b(σ̃_x⊗σ̃_y + σ̃_y⊗σ̃_x)]` with `⟨2|1⟩ = a + ib`.
pub fn xi_momentum_pauli(xi: f64, phi: f64) -> PauliCoefficients {
    let (s2, c2) = (2.0 * phi).sin_cos();
    let (a, b) = (c2, (2.0 * xi - 1.0) * s2);
    PauliCoefficients {
        c: [0.0; 3],
        d: [0.0; 3],
        gamma: [[a, -b, 0.0], [-b, -a, 0.0], [0.0, 0.0, 1.0]],
    }
}

/// Pauli coefficients of the antisymmetric-branch momentum state:
/// `¼[I − σ̃_z⊗σ̃_z − σ cos2φ(σ̃_x⊗σ̃_x + σ̃_y⊗σ̃_y)
/// − σ(1−2ξ)sin2φ(σ̃_x⊗σ̃_y − σ̃_y⊗σ̃_x)]`.
pub fn appendix_d_momentum_pauli(xi: f64, sign: Sign, phi: f64) -> PauliCoefficients {
    let (s2, c2) = (2.0 * phi).sin_cos();
    let s = sign.value();
    let u = -s * c2;
    let v = -s * (1.0 - 2.0 * xi) * s2;
    PauliCoefficients {
        c: [0.0; 3],
        d: [0.0; 3],
        gamma: [[u, v, 0.0], [-v, u, 0.0], [0.0, 0.0, -1.0]],
    }
}

/// Pauli coefficients of the identical-particle spin (`which = Spin`) or
/// momentum state: `¼[I − σ_z⊗σ_z + k(σ_x⊗σ_x + σ_y⊗σ_y)]` with
/// `k = ±(1−2η)cos2φ`.
pub fn eta_pauli(eta: f64, which: Subsystem, phi: f64) -> PauliCoefficients {
    let mut k = (1.0 - 2.0 * eta) * (2.0 * phi).cos();
    if which == Subsystem::Momentum {
        k = -k;
    }
    PauliCoefficients::with_diagonal_correlations([0.0; 3], [0.0; 3], [k, k, -1.0])
}

/// Pauli coefficients of any scenario's closed-form reduced matrix.
pub fn closed_form_pauli(spec: &ScenarioSpec, which: Subsystem, phi: f64) -> PauliCoefficients {
    let p = spec.parameter;
    match (spec.kind, which) {
        (ScenarioKind::IndistinguishableEta, w) => eta_pauli(p, w, phi),
        (_, Subsystem::Spin) => xi_spin_pauli(p, spec.sign, phi),
        (ScenarioKind::DistinguishableXi, Subsystem::Momentum) => xi_momentum_pauli(p, phi),
        (ScenarioKind::AppendixD, Subsystem::Momentum) => {
            appendix_d_momentum_pauli(p, spec.sign, phi)
        }
    }
}

/// The boosted spin state written as a mixture of the two rest-frame sign
/// choices: `cos²φ ρ_ψ±(ξ) + sin²φ ρ_ψ∓(ξ)`.
pub fn spin_mixture(xi: f64, sign: Sign, phi: f64) -> ComplexMatrix {
    let (s, c) = phi.sin_cos();
    &psi_projector(xi, sign).scale_real(c * c)
        + &psi_projector(xi, sign.flipped()).scale_real(s * s)
}

/// Momentum matrix assembled from branch projectors and spin overlaps,
/// `½ Σ_kl ⟨l|k⟩ |k⟩⟨l|` over the two momentum branches of the electron–muon
/// pair.
pub fn momentum_from_overlaps(spec: &ScenarioSpec, phi: f64) -> Result<ComplexMatrix> {
    use super::{inner_products_12_21, momentum_projector, MomentumLabel as L, Particle};
    use crate::qcore::tensor;
    let (i12, i21) = inner_products_12_21(spec, phi)?;
    let map = spec.basis_map();
    let term = |k: L, l: L, overlap: Complex| {
        tensor(
            &momentum_projector(Particle::A, k, l, map),
            &momentum_projector(Particle::B, k, l, map),
        )
        .scale(overlap * 0.5)
    };
    let sum = &(&term(L::P1, L::P1, re(1.0)) + &term(L::P1, L::P2, i21))
        + &(&term(L::P2, L::P1, i12) + &term(L::P2, L::P2, re(1.0)));
    Ok(sum)
}
