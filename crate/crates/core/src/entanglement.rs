//! Wootters concurrence, the scenario closed forms, entanglement variations
//! between frames, and the finite-difference sign/rate analyses.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qcore::{
    hermitian_eigen, sigma_y, singular_values, tensor, ComplexMatrix, Subsystem, CLAMP_TOL,
};
use crate::states::{boost_scenario, ScenarioKind, ScenarioSpec, Sign};

/// Central-difference step used by the sign and rate analyses.
pub const FD_STEP: f64 = 1e-5;
/// Derivatives smaller than this are treated as stationary (sign undefined).
pub const STATIONARY_TOL: f64 = 1e-8;
/// Slack allowed above 1 before a concurrence counts as a numerical failure.
pub const CONCURRENCE_CLAMP_TOL: f64 = 1e-10;

/// `(σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`
pub fn spin_flip(rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    rho.require_shape(4, 4)?;
    let yy = tensor(&sigma_y(), &sigma_y());
    Ok(&(&yy * &rho.conj()) * &yy)
}

/// Concurrence of a two-qubit density matrix with the spectrum it came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConcurrenceReport {
    /// Square roots of the eigenvalues of `ρρ̃`, descending.
    pub lambdas: [f64; 4],
    pub concurrence: f64,
    pub closed_form: Option<f64>,
    /// `|concurrence − closed_form|` when a reference is attached.
    pub residual: Option<f64>,
}

impl ConcurrenceReport {
    pub fn with_reference(mut self, closed_form: f64) -> Self {
        self.closed_form = Some(closed_form);
        self.residual = Some((self.concurrence - closed_form).abs());
        self
    }
}

/// The λ's of the Wootters formula, descending.
///
/// They are the singular values of `√ρ (σ_y⊗σ_y) √ρ*`, i.e. the eigenvalues
/// of `√(√ρ ρ̃ √ρ)`, obtained without ever taking the square root of a
/// roundoff-sized eigenvalue.
pub fn wootters_lambdas(rho: &ComplexMatrix) -> Result<[f64; 4]> {
    rho.require_shape(4, 4)?;
    let rho = rho.clone().into_density()?;
    let eig = hermitian_eigen(&rho)?;
    let min = eig.values[3];
    if min < -CLAMP_TOL {
        return Err(Error::NotPositive { eigenvalue: min });
    }
    let root = eig.reconstruct_with(|x| x.max(0.0).sqrt());
    let yy = tensor(&sigma_y(), &sigma_y());
    let t = &(&root * &yy) * &root.conj();
    let sv = singular_values(&t)?;
    Ok([sv[0], sv[1], sv[2], sv[3]])
}

/// `max{0, λ₁ − λ₂ − λ₃ − λ₄}`
pub fn concurrence(rho: &ComplexMatrix) -> Result<ConcurrenceReport> {
    let lambdas = wootters_lambdas(rho)?;
    let raw = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
    let value = if raw > 1.0 + CONCURRENCE_CLAMP_TOL {
        return Err(Error::Numerical(format!("concurrence {raw} exceeds 1")));
    } else {
        raw.clamp(0.0, 1.0)
    };
    Ok(ConcurrenceReport {
        lambdas,
        concurrence: value,
        closed_form: None,
        residual: None,
    })
}

/// Concurrence of a scenario's boosted spin or momentum state from the
/// closed forms. `phi = 0` gives the rest-frame value.
pub fn closed_form_concurrence(spec: &ScenarioSpec, which: Subsystem, phi: f64) -> f64 {
    let p = spec.parameter;
    let c2 = (2.0 * phi).cos();
    match (spec.kind, which) {
        (ScenarioKind::IndistinguishableEta, _) => ((1.0 - 2.0 * p) * c2).abs(),
        (_, Subsystem::Spin) => (4.0 * p * (1.0 - p)).sqrt() * c2.abs(),
        (_, Subsystem::Momentum) => {
            let s2 = (2.0 * phi).sin();
            (1.0 - 4.0 * p * (1.0 - p) * s2 * s2).max(0.0).sqrt()
        }
    }
}

/// λ's for a density matrix living on a two-dimensional block with diagonal
/// `a, b` and off-diagonal modulus `z`.
fn block_lambdas(a: f64, b: f64, z: f64) -> [f64; 4] {
    let g = (a * b).sqrt();
    [g + z, (g - z).abs(), 0.0, 0.0]
}

/// Closed-form λ spectrum of a scenario's boosted reduced state.
pub fn closed_form_lambdas(spec: &ScenarioSpec, which: Subsystem, phi: f64) -> [f64; 4] {
    let p = spec.parameter;
    let c2 = (2.0 * phi).cos();
    match (spec.kind, which) {
        (ScenarioKind::IndistinguishableEta, _) => {
            block_lambdas(0.5, 0.5, 0.5 * ((1.0 - 2.0 * p) * c2).abs())
        }
        (_, Subsystem::Spin) => block_lambdas(1.0 - p, p, (p * (1.0 - p)).sqrt() * c2.abs()),
        (_, Subsystem::Momentum) => {
            block_lambdas(0.5, 0.5, 0.5 * closed_form_concurrence(spec, which, phi))
        }
    }
}

/// Numeric pipeline (build → boost → reduce → concurrence) with the closed
/// form attached.
pub fn pipeline_concurrence(
    spec: &ScenarioSpec,
    which: Subsystem,
    phi: f64,
) -> Result<ConcurrenceReport> {
    let pair = boost_scenario(spec, phi)?;
    let rho = pair.boosted_state.reduced(which)?;
    Ok(concurrence(&rho)?.with_reference(closed_form_concurrence(spec, which, phi)))
}

/// Change of one concurrence between the rest frame and the boosted frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VariationReport {
    pub parameter: f64,
    pub phi: f64,
    pub c_rest: f64,
    pub c_boosted: f64,
    /// `c_rest − c_boosted`; positive means the boost attenuated it.
    pub delta: f64,
    pub closed_form_delta: f64,
}

pub fn closed_form_delta(spec: &ScenarioSpec, which: Subsystem, phi: f64) -> f64 {
    closed_form_concurrence(spec, which, 0.0) - closed_form_concurrence(spec, which, phi)
}

/// ΔC from the numeric pipeline, with the closed-form value for comparison.
pub fn variation(spec: &ScenarioSpec, which: Subsystem, phi: f64) -> Result<VariationReport> {
    let pair = boost_scenario(spec, phi)?;
    let c_rest = concurrence(&pair.rest_state.reduced(which)?)?.concurrence;
    let c_boosted = concurrence(&pair.boosted_state.reduced(which)?)?.concurrence;
    Ok(VariationReport {
        parameter: spec.parameter,
        phi,
        c_rest,
        c_boosted,
        delta: c_rest - c_boosted,
        closed_form_delta: closed_form_delta(spec, which, phi),
    })
}

/// How ΔC and C are evaluated inside finite differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Evaluator {
    #[default]
    ClosedForm,
    Pipeline,
}

impl Evaluator {
    fn delta(self, spec: &ScenarioSpec, which: Subsystem, phi: f64) -> Result<f64> {
        match self {
            Evaluator::ClosedForm => Ok(closed_form_delta(spec, which, phi)),
            Evaluator::Pipeline => Ok(variation(spec, which, phi)?.delta),
        }
    }

    fn boosted(self, spec: &ScenarioSpec, which: Subsystem, phi: f64) -> Result<f64> {
        match self {
            Evaluator::ClosedForm => Ok(closed_form_concurrence(spec, which, phi)),
            Evaluator::Pipeline => Ok(pipeline_concurrence(spec, which, phi)?.concurrence),
        }
    }
}

/// Direction of a partial derivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Parameter,
    Phi,
}

fn shifted(spec: &ScenarioSpec, dir: Direction, phi: f64, dx: f64) -> Result<(ScenarioSpec, f64)> {
    match dir {
        Direction::Parameter => Ok((spec.with_parameter(spec.parameter + dx)?, phi)),
        Direction::Phi => Ok((*spec, phi + dx)),
    }
}

/// Central difference of `f` around (spec, phi) in `dir`.
fn central_difference(
    spec: &ScenarioSpec,
    phi: f64,
    dir: Direction,
    h: f64,
    mut f: impl FnMut(&ScenarioSpec, f64) -> Result<f64>,
) -> Result<f64> {
    if h.is_nan() || h <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "step h = {h} must be positive"
        )));
    }
    let (sp, pp) = shifted(spec, dir, phi, h)?;
    let (sm, pm) = shifted(spec, dir, phi, -h)?;
    Ok((f(&sp, pp)? - f(&sm, pm)?) / (2.0 * h))
}

/// `∂ΔC/∂x` by central differences.
pub fn delta_derivative(
    spec: &ScenarioSpec,
    which: Subsystem,
    phi: f64,
    dir: Direction,
    h: f64,
    evaluator: Evaluator,
) -> Result<f64> {
    central_difference(spec, phi, dir, h, |s, p| evaluator.delta(s, which, p))
}

/// Sign of a derivative, `None` when it is within the stationary tolerance.
pub fn derivative_sign(d: f64) -> Option<i8> {
    if d.abs() < STATIONARY_TOL {
        None
    } else if d > 0.0 {
        Some(1)
    } else {
        Some(-1)
    }
}

/// Spin and momentum derivatives of ΔC in one direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivativePair {
    pub spin: f64,
    pub momentum: f64,
}

impl DerivativePair {
    /// `None` when either derivative is stationary, otherwise whether the
    /// signs coincide.
    pub fn signs_agree(&self) -> Option<bool> {
        Some(derivative_sign(self.spin)? == derivative_sign(self.momentum)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SignPoint {
    pub parameter: f64,
    pub phi: f64,
    pub d_parameter: DerivativePair,
    pub d_phi: DerivativePair,
}

/// Lattice of (parameter, φ) points to analyse.
#[derive(Debug, Clone, PartialEq)]
pub struct SignGrid {
    pub parameters: Vec<f64>,
    pub phis: Vec<f64>,
    pub h: f64,
}

impl SignGrid {
    /// Vary the parameter at fixed φ.
    pub fn along_parameter(parameters: Vec<f64>, phi: f64) -> Self {
        Self {
            parameters,
            phis: vec![phi],
            h: FD_STEP,
        }
    }

    /// Vary φ at a fixed parameter.
    pub fn along_phi(parameter: f64, phis: Vec<f64>) -> Self {
        Self {
            parameters: vec![parameter],
            phis,
            h: FD_STEP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignTable {
    pub points: Vec<SignPoint>,
}

impl SignTable {
    fn pairs(&self, dir: Direction) -> impl Iterator<Item = (&SignPoint, DerivativePair)> {
        self.points.iter().map(move |p| {
            (
                p,
                match dir {
                    Direction::Parameter => p.d_parameter,
                    Direction::Phi => p.d_phi,
                },
            )
        })
    }

    /// Points where both signs are defined but differ.
    pub fn disagreements(&self, dir: Direction) -> Vec<SignPoint> {
        self.pairs(dir)
            .filter(|(_, d)| d.signs_agree() == Some(false))
            .map(|(p, _)| *p)
            .collect()
    }

    /// Number of points where both signs are defined.
    pub fn compared(&self, dir: Direction) -> usize {
        self.pairs(dir)
            .filter(|(_, d)| d.signs_agree().is_some())
            .count()
    }

    pub fn all_agree(&self, dir: Direction) -> bool {
        self.disagreements(dir).is_empty()
    }
}

/// Signs of `∂ΔC_spin` and `∂ΔC_momentum` in both directions at every
/// lattice point. Points must be interior: parameter ± h stays in range.
pub fn sign_grid_analysis(
    kind: ScenarioKind,
    sign: Sign,
    grid: &SignGrid,
    evaluator: Evaluator,
) -> Result<SignTable> {
    let mut points = Vec::with_capacity(grid.parameters.len() * grid.phis.len());
    for &p in &grid.parameters {
        let spec = ScenarioSpec::new(kind, p, sign)?;
        for &phi in &grid.phis {
            let d = |dir| -> Result<DerivativePair> {
                Ok(DerivativePair {
                    spin: delta_derivative(&spec, Subsystem::Spin, phi, dir, grid.h, evaluator)?,
                    momentum: delta_derivative(
                        &spec,
                        Subsystem::Momentum,
                        phi,
                        dir,
                        grid.h,
                        evaluator,
                    )?,
                })
            };
            points.push(SignPoint {
                parameter: p,
                phi,
                d_parameter: d(Direction::Parameter)?,
                d_phi: d(Direction::Phi)?,
            });
        }
    }
    Ok(SignTable { points })
}

/// `|dC'/dφ|` by central differences through the numeric pipeline.
pub fn degradation_rate(spec: &ScenarioSpec, which: Subsystem, phi: f64, h: f64) -> Result<f64> {
    degradation_rate_with(spec, which, phi, h, Evaluator::Pipeline)
}

pub fn degradation_rate_with(
    spec: &ScenarioSpec,
    which: Subsystem,
    phi: f64,
    h: f64,
    evaluator: Evaluator,
) -> Result<f64> {
    central_difference(spec, phi, Direction::Phi, h, |s, p| {
        evaluator.boosted(s, which, p)
    })
    .map(f64::abs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{hermitian_eigen, Complex};
    use crate::states::phi_bell;
    use std::f64::consts::PI;

    fn bell_projector() -> ComplexMatrix {
        let b = phi_bell(Sign::Plus);
        ComplexMatrix::outer(&b, &b)
    }

    #[test]
    fn spin_flip_examples() {
        let mixed = ComplexMatrix::identity(4).scale_real(0.25);
        assert!(spin_flip(&mixed).unwrap().approx_eq(&mixed, 1e-15));
        let bell = bell_projector();
        assert!(spin_flip(&bell).unwrap().approx_eq(&bell, 1e-15));
        let up = ComplexMatrix::diag_real(&[1.0, 0.0, 0.0, 0.0]);
        let down = ComplexMatrix::diag_real(&[0.0, 0.0, 0.0, 1.0]);
        assert!(spin_flip(&up).unwrap().approx_eq(&down, 1e-15));
        assert!(spin_flip(&ComplexMatrix::identity(2)).is_err());
    }

    #[test]
    fn concurrence_examples() {
        assert!((concurrence(&bell_projector()).unwrap().concurrence - 1.0).abs() < 1e-12);
        let mixed = ComplexMatrix::identity(4).scale_real(0.25);
        assert!(concurrence(&mixed).unwrap().concurrence.abs() < 1e-12);
        let product = ComplexMatrix::diag_real(&[1.0, 0.0, 0.0, 0.0]);
        assert!(concurrence(&product).unwrap().concurrence.abs() < 1e-12);
    }

    #[test]
    fn concurrence_rejects_non_states() {
        let neg = ComplexMatrix::diag_real(&[1.2, -0.2, 0.0, 0.0]);
        assert!(matches!(concurrence(&neg), Err(Error::NotPositive { .. })));
        let not_unit = ComplexMatrix::diag_real(&[0.5, 0.0, 0.0, 0.0]);
        assert!(concurrence(&not_unit).is_err());
    }

    #[test]
    fn werner_state_oracle() {
        // p|φ+⟩⟨φ+| + (1−p)I/4 has C = max(0, (3p−1)/2)
        for p in [0.0, 0.2, 1.0 / 3.0, 0.5, 0.9] {
            let rho = &bell_projector().scale_real(p)
                + &ComplexMatrix::identity(4).scale_real((1.0 - p) / 4.0);
            let c = concurrence(&rho).unwrap().concurrence;
            assert!(
                (c - (0.5 * (3.0 * p - 1.0)).max(0.0)).abs() < 1e-12,
                "p={p}"
            );
        }
    }

    #[test]
    fn closed_form_examples() {
        let xi = ScenarioSpec::xi(0.25, Sign::Plus).unwrap();
        let c = closed_form_concurrence(&xi, Subsystem::Spin, PI / 8.0);
        assert!((c - 0.612372).abs() < 1e-6);
        let half = ScenarioSpec::xi(0.5, Sign::Plus).unwrap();
        for phi in [0.1, 0.5, 0.9] {
            let c = closed_form_concurrence(&half, Subsystem::Momentum, phi);
            assert!((c - (2.0 * phi).cos().abs()).abs() < 1e-15);
        }
        let eta = ScenarioSpec::eta(0.5).unwrap();
        assert_eq!(closed_form_concurrence(&eta, Subsystem::Spin, 0.3), 0.0);
    }

    #[test]
    fn lambda_moments_match_non_hermitian_product() {
        // Σλ^{2k} = Tr((ρρ̃)^k)
        let spec = ScenarioSpec::xi(0.3, Sign::Minus).unwrap();
        let pair = boost_scenario(&spec, 0.4).unwrap();
        for rho in [
            pair.boosted_spin().unwrap(),
            pair.boosted_momentum().unwrap(),
        ] {
            let l = wootters_lambdas(&rho).unwrap();
            let r = &rho * &spin_flip(&rho).unwrap();
            let mut power = ComplexMatrix::identity(4);
            for k in 1..=4 {
                power = &power * &r;
                let lhs: f64 = l.iter().map(|x| x.powi(2 * k)).sum();
                let tr: Complex = power.trace();
                assert!((lhs - tr.re).abs() < 1e-10 && tr.im.abs() < 1e-10);
            }
        }
    }

    #[test]
    fn lambdas_agree_with_hermitian_square_root_route() {
        let spec = ScenarioSpec::appendix_d(0.2, Sign::Plus).unwrap();
        let rho = boost_scenario(&spec, 0.7)
            .unwrap()
            .boosted_momentum()
            .unwrap();
        let root = crate::qcore::matrix_sqrt_psd(&rho).unwrap();
        let m = &(&root * &spin_flip(&rho).unwrap()) * &root;
        let eig = hermitian_eigen(&m.hermitian_part()).unwrap();
        let l = wootters_lambdas(&rho).unwrap();
        for (a, b) in l.iter().zip(&eig.values) {
            assert!((a * a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn variation_examples() {
        let xi = ScenarioSpec::xi(0.25, Sign::Plus).unwrap();
        let v = variation(&xi, Subsystem::Spin, PI / 8.0).unwrap();
        assert!((v.delta - 0.253653).abs() < 1e-6);
        assert!((v.delta - v.closed_form_delta).abs() < 1e-9);
        let v = variation(&xi, Subsystem::Momentum, 0.0).unwrap();
        assert!(v.delta.abs() < 1e-12);
    }

    #[test]
    fn degradation_rate_matches_analytic_derivatives() {
        let phi = PI / 10.0;
        for xi in [0.5, 0.125] {
            let spec = ScenarioSpec::xi(xi, Sign::Plus).unwrap();
            let q = 4.0 * xi * (1.0 - xi);
            let spin = degradation_rate(&spec, Subsystem::Spin, phi, FD_STEP).unwrap();
            assert!((spin - q.sqrt() * 2.0 * (2.0 * phi).sin()).abs() < 1e-7);
            // d/dφ √(1 − q sin²2φ) = −q·2 sin2φ cos2φ / √(1 − q sin²2φ)
            let s2 = (2.0 * phi).sin();
            let mom_exact = q * 2.0 * s2 * (2.0 * phi).cos() / (1.0 - q * s2 * s2).sqrt();
            let mom = degradation_rate(&spec, Subsystem::Momentum, phi, FD_STEP).unwrap();
            assert!((mom - mom_exact).abs() < 1e-7);
        }
        let half = ScenarioSpec::xi(0.5, Sign::Plus).unwrap();
        let r = degradation_rate(&half, Subsystem::Spin, phi, FD_STEP).unwrap();
        assert!((r - 1.175571).abs() < 1e-6);
    }

    #[test]
    fn sign_tables_for_the_two_slices() {
        let xs: Vec<f64> = (1..=19).map(|k| 0.05 * k as f64).collect();
        let t = sign_grid_analysis(
            ScenarioKind::DistinguishableXi,
            Sign::Plus,
            &SignGrid::along_parameter(xs, PI / 10.0),
            Evaluator::ClosedForm,
        )
        .unwrap();
        assert!(t.all_agree(Direction::Parameter));
        assert_eq!(t.compared(Direction::Parameter), 18); // ξ = ½ is stationary
        let phis: Vec<f64> = (1..=99).map(|k| 0.01 * k as f64).collect();
        let t = sign_grid_analysis(
            ScenarioKind::DistinguishableXi,
            Sign::Plus,
            &SignGrid::along_phi(0.25, phis),
            Evaluator::Pipeline,
        )
        .unwrap();
        assert!(t.all_agree(Direction::Phi));
    }

    #[test]
    fn step_must_be_positive() {
        let spec = ScenarioSpec::xi(0.3, Sign::Plus).unwrap();
        assert!(degradation_rate(&spec, Subsystem::Spin, 0.3, 0.0).is_err());
        let edge = ScenarioSpec::xi(1e-6, Sign::Plus).unwrap();
        assert!(delta_derivative(
            &edge,
            Subsystem::Spin,
            0.3,
            Direction::Parameter,
            FD_STEP,
            Evaluator::ClosedForm
        )
        .is_err());
    }
}
