//! Rest-frame two-particle states, their transformation under a boost, and
//! the reduced spin and momentum density matrices.
//!
//! Each particle carries a momentum qubit (two sharp momentum values) and a
//! spin qubit. The 16-dimensional register is ordered
//! (momA, momB, spinA, spinB), momentum slowest. A boost leaves momentum
//! labels in place and rotates each spin about ẑ by a Wigner angle whose sign
//! depends on which of the two momentum values the particle carries.

pub mod closed_form;

use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::qcore::{partial_trace, sigma_z, tensor, tensor_all, Complex, ComplexMatrix, Subsystem};

pub const STATE_NORM_TOL: f64 = 1e-12;

/// Which rest-frame family a scenario belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScenarioKind {
    /// Identical fermions; spins in an η-weighted mix of the Bell states φ±.
    IndistinguishableEta,
    /// Electron–muon pair, maximally entangled momenta, spins in ψ±(ξ).
    DistinguishableXi,
    /// Electron–muon pair with antisymmetric-sign momentum branches.
    AppendixD,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 3] = [
        ScenarioKind::IndistinguishableEta,
        ScenarioKind::DistinguishableXi,
        ScenarioKind::AppendixD,
    ];

    /// Symbol of the entangling parameter.
    pub fn parameter_name(self) -> &'static str {
        match self {
            ScenarioKind::IndistinguishableEta => "eta",
            _ => "xi",
        }
    }

    pub fn parameter_in_range(self, p: f64) -> bool {
        match self {
            ScenarioKind::IndistinguishableEta => (0.0..=1.0).contains(&p),
            _ => p > 0.0 && p < 1.0,
        }
    }

    pub fn basis_map(self) -> MomentumBasisMap {
        match self {
            ScenarioKind::DistinguishableXi => MomentumBasisMap::ALIGNED,
            _ => MomentumBasisMap::CROSSED,
        }
    }
}

/// Sign choice of the ψ±(ξ) spin family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A scenario family plus its entangling parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScenarioSpec {
    pub kind: ScenarioKind,
    pub parameter: f64,
    pub sign: Sign,
}

impl ScenarioSpec {
    pub fn new(kind: ScenarioKind, parameter: f64, sign: Sign) -> Result<Self> {
        let range = match kind {
            ScenarioKind::IndistinguishableEta => "[0, 1]",
            _ => "(0, 1)",
        };
        check_range(
            kind.parameter_name(),
            parameter,
            range,
            kind.parameter_in_range(parameter),
        )?;
        Ok(Self {
            kind,
            parameter,
            sign,
        })
    }

    pub fn eta(eta: f64) -> Result<Self> {
        Self::new(ScenarioKind::IndistinguishableEta, eta, Sign::Plus)
    }

    pub fn xi(xi: f64, sign: Sign) -> Result<Self> {
        Self::new(ScenarioKind::DistinguishableXi, xi, sign)
    }

    pub fn appendix_d(xi: f64, sign: Sign) -> Result<Self> {
        Self::new(ScenarioKind::AppendixD, xi, sign)
    }

    /// Same scenario with a different parameter value.
    pub fn with_parameter(&self, parameter: f64) -> Result<Self> {
        Self::new(self.kind, parameter, self.sign)
    }

    pub fn basis_map(&self) -> MomentumBasisMap {
        self.kind.basis_map()
    }
}

/// One of the two sharp momentum values a particle can carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MomentumLabel {
    P1,
    P2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Particle {
    A,
    B,
}

/// Which momentum-qubit basis vector carries the label `p1` for each
/// particle; `p2` sits on the other one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MomentumBasisMap {
    pub a1_qubit: usize,
    pub b1_qubit: usize,
}

impl MomentumBasisMap {
    /// `|p_A1, p_B1⟩ = |10⟩`, `|p_A2, p_B2⟩ = |01⟩` (identical-particle and
    /// the alternative electron–muon scenario).
    pub const CROSSED: MomentumBasisMap = MomentumBasisMap {
        a1_qubit: 1,
        b1_qubit: 0,
    };
    /// `|p_A1, p_B1⟩ = |00⟩`, `|p_A2, p_B2⟩ = |11⟩`.
    pub const ALIGNED: MomentumBasisMap = MomentumBasisMap {
        a1_qubit: 0,
        b1_qubit: 0,
    };

    pub fn qubit(&self, particle: Particle, label: MomentumLabel) -> usize {
        let one = match particle {
            Particle::A => self.a1_qubit,
            Particle::B => self.b1_qubit,
        };
        match label {
            MomentumLabel::P1 => one,
            MomentumLabel::P2 => 1 - one,
        }
    }

    pub fn label(&self, particle: Particle, qubit: usize) -> MomentumLabel {
        if self.qubit(particle, MomentumLabel::P1) == qubit {
            MomentumLabel::P1
        } else {
            MomentumLabel::P2
        }
    }

    /// Momentum-register index (0..4) of the branch `|p_A{k}, p_B{k}⟩`.
    pub fn branch_index(&self, label: MomentumLabel) -> usize {
        2 * self.qubit(Particle::A, label) + self.qubit(Particle::B, label)
    }
}

/// 16 amplitudes over (momA, momB, spinA, spinB).
#[derive(Debug, Clone, PartialEq)]
pub struct TwoParticleState {
    amplitudes: [Complex; 16],
}

impl TwoParticleState {
    /// Wraps amplitudes that are already unit norm.
    pub fn new(amplitudes: [Complex; 16]) -> Result<Self> {
        let s = Self { amplitudes };
        let n = s.norm();
        if (n - 1.0).abs() > STATE_NORM_TOL {
            return Err(Error::InvalidInput(format!(
                "state norm is {n}, expected 1"
            )));
        }
        Ok(s)
    }

    /// Assembles `Σ_k |momentum branch k⟩ ⊗ |spin k⟩` from (register index,
    /// spin amplitudes) pairs.
    fn from_branches(branches: &[(usize, [Complex; 4])]) -> Self {
        let mut amplitudes = [Complex::new(0.0, 0.0); 16];
        for (m, spin) in branches {
            for (s, z) in spin.iter().enumerate() {
                amplitudes[4 * m + s] += z;
            }
        }
        Self { amplitudes }
    }

    pub fn amplitudes(&self) -> &[Complex; 16] {
        &self.amplitudes
    }

    pub fn amplitude(&self, mom_a: usize, mom_b: usize, spin_a: usize, spin_b: usize) -> Complex {
        self.amplitudes[8 * mom_a + 4 * mom_b + 2 * spin_a + spin_b]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Global phase fixed so that the first nonzero amplitude is real and
    /// positive.
    pub fn canonicalized(&self) -> Self {
        let mut out = self.clone();
        if let Some(first) = self.amplitudes.iter().find(|z| z.norm() > 1e-15) {
            let phase = first.conj() / first.norm();
            for z in out.amplitudes.iter_mut() {
                *z *= phase;
            }
            // make the pivot exactly real
            if let Some(p) = out.amplitudes.iter_mut().find(|z| z.norm() > 1e-15) {
                *p = Complex::new(p.norm(), 0.0);
            }
        }
        out
    }

    /// `|ψ⟩⟨ψ|`
    pub fn density(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.amplitudes, &self.amplitudes)
    }

    /// Reduced spin state (momentum traced out).
    pub fn reduced_spin(&self) -> Result<ComplexMatrix> {
        partial_trace(&self.density(), Subsystem::Momentum)
    }

    /// Reduced momentum state (spin traced out).
    pub fn reduced_momentum(&self) -> Result<ComplexMatrix> {
        partial_trace(&self.density(), Subsystem::Spin)
    }

    pub fn reduced(&self, keep: Subsystem) -> Result<ComplexMatrix> {
        match keep {
            Subsystem::Spin => self.reduced_spin(),
            Subsystem::Momentum => self.reduced_momentum(),
        }
    }

    /// Overlap modulus `|⟨self|other⟩|`.
    pub fn fidelity(&self, other: &Self) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum::<Complex>()
            .norm()
    }
}

fn c(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

/// `√(1−ξ)|↑↓⟩ ± √ξ|↓↑⟩` with spin-up = |0⟩.
pub fn psi_xi(xi: f64, sign: Sign) -> [Complex; 4] {
    [
        c(0.0),
        c((1.0 - xi).sqrt()),
        c(sign.value() * xi.sqrt()),
        c(0.0),
    ]
}

/// Bell states `(|↑↓⟩ ± |↓↑⟩)/√2`.
pub fn phi_bell(sign: Sign) -> [Complex; 4] {
    psi_xi(0.5, sign)
}

fn spin_combo(a: f64, u: &[Complex; 4], b: f64, v: &[Complex; 4]) -> [Complex; 4] {
    std::array::from_fn(|i| u[i] * a + v[i] * b)
}

/// Rest-frame two-particle state of a scenario, canonical global phase.
pub fn build_state(spec: &ScenarioSpec) -> Result<TwoParticleState> {
    let spec = ScenarioSpec::new(spec.kind, spec.parameter, spec.sign)?;
    let map = spec.basis_map();
    let b1 = map.branch_index(MomentumLabel::P1);
    let b2 = map.branch_index(MomentumLabel::P2);
    let h = FRAC_1_SQRT_2;
    let state = match spec.kind {
        ScenarioKind::IndistinguishableEta => {
            let eta = spec.parameter;
            let (phi_p, phi_m) = (phi_bell(Sign::Plus), phi_bell(Sign::Minus));
            let (se, sr) = (eta.sqrt(), (1.0 - eta).sqrt());
            TwoParticleState::from_branches(&[
                (b1, spin_combo(h * se, &phi_m, h * sr, &phi_p)),
                (b2, spin_combo(h * se, &phi_m, -h * sr, &phi_p)),
            ])
        }
        ScenarioKind::DistinguishableXi => {
            let psi = psi_xi(spec.parameter, spec.sign);
            TwoParticleState::from_branches(&[(b1, psi.map(|z| z * h)), (b2, psi.map(|z| z * h))])
        }
        ScenarioKind::AppendixD => {
            // (1/√2)|10⟩|ψ±⟩ ∓ (1/√2)|01⟩|ψ±⟩
            let psi = psi_xi(spec.parameter, spec.sign);
            let s = spec.sign.value();
            TwoParticleState::from_branches(&[
                (b1, psi.map(|z| z * h)),
                (b2, psi.map(|z| z * (-s * h))),
            ])
        }
    };
    TwoParticleState::new(state.amplitudes).map(|s| s.canonicalized())
}

/// The four spin rotations `D_A(p_A1), D_B(p_B1), D_A(p_A2), D_B(p_B2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DOperators {
    pub a1: ComplexMatrix,
    pub b1: ComplexMatrix,
    pub a2: ComplexMatrix,
    pub b2: ComplexMatrix,
}

impl DOperators {
    pub fn get(&self, particle: Particle, label: MomentumLabel) -> &ComplexMatrix {
        match (particle, label) {
            (Particle::A, MomentumLabel::P1) => &self.a1,
            (Particle::B, MomentumLabel::P1) => &self.b1,
            (Particle::A, MomentumLabel::P2) => &self.a2,
            (Particle::B, MomentumLabel::P2) => &self.b2,
        }
    }
}

/// `cos(φ/2) I + i·sign·sin(φ/2) σ_z`
fn z_rotation(phi: f64, sign: f64) -> ComplexMatrix {
    let (s, co) = (0.5 * phi).sin_cos();
    let id = ComplexMatrix::identity(2);
    &id.scale_real(co) + &sigma_z().scale(Complex::new(0.0, sign * s))
}

/// Spin rotations for the four momenta. `p_A1` and `p_B2` rotate by `+φ`
/// about ẑ, `p_A2` and `p_B1` by `−φ`.
pub fn d_operators(phi: f64) -> DOperators {
    DOperators {
        a1: z_rotation(phi, -1.0),
        b1: z_rotation(phi, 1.0),
        a2: z_rotation(phi, 1.0),
        b2: z_rotation(phi, -1.0),
    }
}

/// The full 16×16 unitary: each momentum configuration gets the product of
/// the two spin rotations belonging to its momentum labels.
pub fn boost_operator(phi: f64, map: MomentumBasisMap) -> ComplexMatrix {
    let d = d_operators(phi);
    let mut u = ComplexMatrix::zeros(16, 16);
    for ma in 0..2 {
        for mb in 0..2 {
            let da = d.get(Particle::A, map.label(Particle::A, ma));
            let db = d.get(Particle::B, map.label(Particle::B, mb));
            let block = tensor(da, db);
            let m = 2 * ma + mb;
            for i in 0..4 {
                for j in 0..4 {
                    u[(4 * m + i, 4 * m + j)] = block[(i, j)];
                }
            }
        }
    }
    u
}

/// A rest-frame state together with its image in the moving frame.
#[derive(Debug, Clone, PartialEq)]
pub struct BoostedPair {
    pub rest_state: TwoParticleState,
    pub boosted_state: TwoParticleState,
    pub phi: f64,
}

impl BoostedPair {
    pub fn rest_spin(&self) -> Result<ComplexMatrix> {
        self.rest_state.reduced_spin()
    }

    pub fn rest_momentum(&self) -> Result<ComplexMatrix> {
        self.rest_state.reduced_momentum()
    }

    pub fn boosted_spin(&self) -> Result<ComplexMatrix> {
        self.boosted_state.reduced_spin()
    }

    pub fn boosted_momentum(&self) -> Result<ComplexMatrix> {
        self.boosted_state.reduced_momentum()
    }
}

/// Applies the boost with Wigner angle `phi` to a state.
pub fn apply_boost(
    state: &TwoParticleState,
    phi: f64,
    map: MomentumBasisMap,
) -> Result<BoostedPair> {
    if !phi.is_finite() {
        return Err(Error::InvalidInput(format!("phi = {phi} is not finite")));
    }
    let u = boost_operator(phi, map);
    let out: [Complex; 16] = u
        .apply(state.amplitudes())
        .try_into()
        .expect("16 amplitudes");
    let boosted = TwoParticleState::new(out)
        .map_err(|e| Error::Numerical(format!("boost did not preserve the norm: {e}")))?;
    Ok(BoostedPair {
        rest_state: state.clone(),
        boosted_state: boosted.canonicalized(),
        phi,
    })
}

/// Builds a scenario's rest state and boosts it.
pub fn boost_scenario(spec: &ScenarioSpec, phi: f64) -> Result<BoostedPair> {
    apply_boost(&build_state(spec)?, phi, spec.basis_map())
}

pub fn reduced_spin(pair: &BoostedPair) -> Result<ComplexMatrix> {
    pair.boosted_spin()
}

pub fn reduced_momentum(pair: &BoostedPair) -> Result<ComplexMatrix> {
    pair.boosted_momentum()
}

/// Closed-form overlaps `(⟨1|2⟩, ⟨2|1⟩)` of the boosted spin states of the
/// two momentum branches in the electron–muon scenario.
pub fn inner_products_12_21(spec: &ScenarioSpec, phi: f64) -> Result<(Complex, Complex)> {
    if spec.kind != ScenarioKind::DistinguishableXi {
        return Err(Error::InvalidInput(format!(
            "branch overlaps are defined for the distinguishable-xi scenario, got {:?}",
            spec.kind
        )));
    }
    let xi = spec.parameter;
    let (s2, c2) = (2.0 * phi).sin_cos();
    let im = (2.0 * xi - 1.0) * s2;
    Ok((Complex::new(c2, -im), Complex::new(c2, im)))
}

/// Boosted spin states `|1⟩ = D_A(p_A1)D_B(p_B1)|0⟩_S` and
/// `|2⟩ = D_A(p_A2)D_B(p_B2)|0'⟩_S`, read off the boosted amplitudes of the
/// two momentum branches (each renormalized).
pub fn branch_spin_states(pair: &BoostedPair, map: MomentumBasisMap) -> [[Complex; 4]; 2] {
    // the boosted state is canonicalized, so recompute from the rest state to
    // keep the relative phase between branches intact
    let u = boost_operator(pair.phi, map);
    let amps = u.apply(pair.rest_state.amplitudes());
    [MomentumLabel::P1, MomentumLabel::P2].map(|label| {
        let m = map.branch_index(label);
        let block: [Complex; 4] = std::array::from_fn(|s| amps[4 * m + s]);
        let n = block.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        block.map(|z| if n > 0.0 { z / n } else { z })
    })
}

/// `|Λp⟩` as a momentum-qubit ket. Boosted momenta stay sharp and
/// orthogonal, so the boosted ket sits on the same basis vector as `|p⟩`.
pub fn lambda_momentum_ket(
    particle: Particle,
    label: MomentumLabel,
    map: MomentumBasisMap,
) -> [Complex; 2] {
    let mut ket = [c(0.0), c(0.0)];
    ket[map.qubit(particle, label)] = c(1.0);
    ket
}

/// `|Λp_ket⟩⟨Λp_bra|` for one particle.
pub fn momentum_projector(
    particle: Particle,
    ket: MomentumLabel,
    bra: MomentumLabel,
    map: MomentumBasisMap,
) -> ComplexMatrix {
    ComplexMatrix::outer(
        &lambda_momentum_ket(particle, ket, map),
        &lambda_momentum_ket(particle, bra, map),
    )
}

/// Spin part of the full boost for a fixed momentum branch, `D_A ⊗ D_B`.
pub fn branch_rotation(label: MomentumLabel, phi: f64) -> ComplexMatrix {
    let d = d_operators(phi);
    tensor_all(&[d.get(Particle::A, label), d.get(Particle::B, label)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn close(a: Complex, b: Complex, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn parameter_ranges() {
        assert!(ScenarioSpec::eta(0.0).is_ok());
        assert!(ScenarioSpec::eta(1.0).is_ok());
        assert!(ScenarioSpec::eta(1.01).is_err());
        assert!(ScenarioSpec::xi(0.0, Sign::Plus).is_err());
        assert!(ScenarioSpec::xi(1.0, Sign::Plus).is_err());
        assert!(ScenarioSpec::appendix_d(f64::NAN, Sign::Plus).is_err());
        let bogus = ScenarioSpec {
            kind: ScenarioKind::DistinguishableXi,
            parameter: 2.0,
            sign: Sign::Plus,
        };
        assert!(build_state(&bogus).is_err());
    }

    #[test]
    fn eta_one_is_antisymmetric_spin_bell_pair() {
        // (1/√2)|10⟩|φ−⟩ + (1/√2)|01⟩|φ−⟩
        let s = build_state(&ScenarioSpec::eta(1.0).unwrap()).unwrap();
        let h = 0.5;
        for (ma, mb) in [(1, 0), (0, 1)] {
            assert!(close(s.amplitude(ma, mb, 0, 1), c(h), 1e-15));
            assert!(close(s.amplitude(ma, mb, 1, 0), c(-h), 1e-15));
        }
        assert!((s.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn eta_zero_matches_symmetric_spin_form() {
        // (1/√2)|10⟩|φ+⟩ − (1/√2)|01⟩|φ+⟩ up to global phase
        let s = build_state(&ScenarioSpec::eta(0.0).unwrap()).unwrap();
        let mut expected = [c(0.0); 16];
        for (ma, mb, sgn) in [(1usize, 0usize, 1.0), (0, 1, -1.0)] {
            for (sa, sb) in [(0usize, 1usize), (1, 0)] {
                expected[8 * ma + 4 * mb + 2 * sa + sb] = c(0.5 * sgn);
            }
        }
        let e = TwoParticleState::new(expected).unwrap();
        assert!((s.fidelity(&e) - 1.0).abs() < 1e-14);
        let e = e.canonicalized();
        for (a, b) in s.amplitudes().iter().zip(e.amplitudes()) {
            assert!(close(*a, *b, 1e-15));
        }
    }

    #[test]
    fn xi_half_plus_is_product_of_bell_pairs() {
        let s = build_state(&ScenarioSpec::xi(0.5, Sign::Plus).unwrap()).unwrap();
        // (|00⟩ + |11⟩)/√2 ⊗ (|01⟩ + |10⟩)/√2
        for (ma, mb) in [(0, 0), (1, 1)] {
            assert!(close(s.amplitude(ma, mb, 0, 1), c(0.5), 1e-15));
            assert!(close(s.amplitude(ma, mb, 1, 0), c(0.5), 1e-15));
        }
        assert!(close(s.amplitude(0, 1, 0, 1), c(0.0), 0.0));
    }

    #[test]
    fn appendix_d_half_reduces_to_bell_branch_state() {
        // (1/√2)|10⟩|φ±⟩ ∓ (1/√2)|01⟩|φ±⟩
        for sign in [Sign::Plus, Sign::Minus] {
            let s = build_state(&ScenarioSpec::appendix_d(0.5, sign).unwrap()).unwrap();
            let mut expected = [c(0.0); 16];
            let bell = phi_bell(sign);
            for i in 0..4 {
                expected[4 * 2 + i] = bell[i] * FRAC_1_SQRT_2;
                expected[4 + i] = bell[i] * (-sign.value() * FRAC_1_SQRT_2);
            }
            let e = TwoParticleState::new(expected).unwrap();
            assert!((s.fidelity(&e) - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn canonical_phase_is_real_positive() {
        let s = build_state(&ScenarioSpec::appendix_d(0.3, Sign::Minus).unwrap()).unwrap();
        let boosted = apply_boost(&s, 0.4, MomentumBasisMap::CROSSED).unwrap();
        let first = boosted
            .boosted_state
            .amplitudes()
            .iter()
            .find(|z| z.norm() > 1e-15)
            .unwrap();
        assert!(first.im == 0.0 && first.re > 0.0);
    }

    #[test]
    fn d_operator_examples() {
        let d = d_operators(0.0);
        let id = ComplexMatrix::identity(2);
        for m in [&d.a1, &d.b1, &d.a2, &d.b2] {
            assert!(m.approx_eq(&id, 0.0));
        }
        let d = d_operators(PI);
        assert!(d
            .a1
            .approx_eq(&sigma_z().scale(Complex::new(0.0, -1.0)), 1e-15));
        for phi in [0.1, 0.7, 2.5, -1.3] {
            let d = d_operators(phi);
            assert!((&d.a1 * &d.a2).approx_eq(&id, 1e-15));
            assert!((&d.b1 * &d.b2).approx_eq(&id, 1e-15));
            for m in [&d.a1, &d.b1, &d.a2, &d.b2] {
                assert!((&m.dagger() * m).approx_eq(&id, 1e-12));
            }
        }
    }

    #[test]
    fn identity_boost_and_norm() {
        let s = build_state(&ScenarioSpec::xi(0.3, Sign::Plus).unwrap()).unwrap();
        let p = apply_boost(&s, 0.0, MomentumBasisMap::ALIGNED).unwrap();
        assert_eq!(p.boosted_state, s);
        for phi in [0.2, 1.0, 3.0] {
            let p = apply_boost(&s, phi, MomentumBasisMap::ALIGNED).unwrap();
            assert!((p.boosted_state.norm() - 1.0).abs() < 1e-12);
        }
        assert!(apply_boost(&s, f64::NAN, MomentumBasisMap::ALIGNED).is_err());
    }

    #[test]
    fn boost_operator_is_unitary() {
        for map in [MomentumBasisMap::ALIGNED, MomentumBasisMap::CROSSED] {
            let u = boost_operator(0.77, map);
            assert!((&u.dagger() * &u).approx_eq(&ComplexMatrix::identity(16), 1e-12));
        }
    }

    #[test]
    fn spin_off_diagonal_entry() {
        // √(ξ(1−ξ))·cos2φ at ξ = ¼, φ = π/8
        let pair = boost_scenario(&ScenarioSpec::xi(0.25, Sign::Plus).unwrap(), PI / 8.0).unwrap();
        let rho = reduced_spin(&pair).unwrap();
        let expected = (3.0_f64 / 16.0).sqrt() * (PI / 4.0).cos();
        assert!((expected - 0.306186).abs() < 1e-6);
        assert!(close(rho[(1, 2)], c(expected), 1e-12));
    }

    #[test]
    fn spin_off_diagonals_vanish_at_quarter_pi() {
        for xi in [0.1, 0.5, 0.8] {
            let pair =
                boost_scenario(&ScenarioSpec::xi(xi, Sign::Minus).unwrap(), PI / 4.0).unwrap();
            let rho = reduced_spin(&pair).unwrap();
            assert!(rho[(1, 2)].norm() < 1e-12);
        }
    }

    #[test]
    fn momentum_matrix_examples() {
        // φ = 0: maximally entangled momentum projector
        let pair = boost_scenario(&ScenarioSpec::xi(0.3, Sign::Plus).unwrap(), 0.0).unwrap();
        let m = reduced_momentum(&pair).unwrap();
        for (i, j) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
            assert!(close(m[(i, j)], c(0.5), 1e-12));
        }
        // ξ = ½: real corner entry ½cos2φ
        let phi = 0.37;
        let pair = boost_scenario(&ScenarioSpec::xi(0.5, Sign::Plus).unwrap(), phi).unwrap();
        let m = reduced_momentum(&pair).unwrap();
        assert!(close(m[(0, 3)], c(0.5 * (2.0 * phi).cos()), 1e-12));
        // antisymmetric-branch pair, ξ = ¼, φ = π/8
        let pair = boost_scenario(
            &ScenarioSpec::appendix_d(0.25, Sign::Plus).unwrap(),
            PI / 8.0,
        )
        .unwrap();
        let m = reduced_momentum(&pair).unwrap();
        let q = (PI / 4.0).cos();
        let expected = Complex::new(-0.5 * q, -0.5 * 0.5 * (PI / 4.0).sin());
        assert!(close(m[(1, 2)], expected, 1e-12));
    }

    #[test]
    fn inner_products() {
        let spec = ScenarioSpec::xi(0.25, Sign::Plus).unwrap();
        let (a, b) = inner_products_12_21(&spec, 0.0).unwrap();
        assert_eq!((a, b), (c(1.0), c(1.0)));
        let (a, b) = inner_products_12_21(&spec, PI / 8.0).unwrap();
        let r = 0.5_f64.sqrt();
        assert!(close(a, Complex::new(r, 0.5 * r), 1e-15));
        assert!(close(b, a.conj(), 0.0));
        let half = ScenarioSpec::xi(0.5, Sign::Minus).unwrap();
        let (a, b) = inner_products_12_21(&half, 0.3).unwrap();
        assert_eq!(a.im, 0.0);
        assert_eq!(a, b);
        assert!(inner_products_12_21(&ScenarioSpec::eta(0.2).unwrap(), 0.1).is_err());
    }

    #[test]
    fn inner_products_match_boosted_branches() {
        for (xi, phi) in [(0.25, PI / 8.0), (0.7, 0.9), (0.05, 0.3)] {
            for sign in [Sign::Plus, Sign::Minus] {
                let spec = ScenarioSpec::xi(xi, sign).unwrap();
                let pair = boost_scenario(&spec, phi).unwrap();
                let [one, two] = branch_spin_states(&pair, spec.basis_map());
                let braket = |u: &[Complex; 4], v: &[Complex; 4]| -> Complex {
                    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
                };
                let (i12, i21) = inner_products_12_21(&spec, phi).unwrap();
                assert!(close(braket(&one, &two), i12, 1e-12));
                assert!(close(braket(&two, &one), i21, 1e-12));
                assert!(close(braket(&one, &one), c(1.0), 1e-12));
            }
        }
    }

    #[test]
    fn basis_maps() {
        let m = MomentumBasisMap::CROSSED;
        assert_eq!(m.branch_index(MomentumLabel::P1), 2);
        assert_eq!(m.branch_index(MomentumLabel::P2), 1);
        let m = MomentumBasisMap::ALIGNED;
        assert_eq!(m.branch_index(MomentumLabel::P1), 0);
        assert_eq!(m.branch_index(MomentumLabel::P2), 3);
        assert_eq!(m.label(Particle::B, 1), MomentumLabel::P2);
    }
}
