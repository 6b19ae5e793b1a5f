//! Point evaluations, parameter sweeps and the figure presets.

use std::f64::consts::PI;

use serde::Serialize;

use crate::entanglement::{
    closed_form_concurrence, concurrence, delta_derivative, ConcurrenceReport, Direction,
    Evaluator, FD_STEP,
};
use crate::error::{Error, Result};
use crate::qcore::Subsystem;
use crate::states::{boost_scenario, ScenarioKind, ScenarioSpec, Sign};

/// Pipeline results must match the closed forms this closely.
pub const RESIDUAL_TOL: f64 = 1e-9;

/// All four concurrences of one (scenario, φ) point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PointReport {
    pub spec: ScenarioSpec,
    pub phi: f64,
    pub spin_rest: ConcurrenceReport,
    pub spin_boosted: ConcurrenceReport,
    pub momentum_rest: ConcurrenceReport,
    pub momentum_boosted: ConcurrenceReport,
}

impl PointReport {
    pub fn delta_spin(&self) -> f64 {
        self.spin_rest.concurrence - self.spin_boosted.concurrence
    }

    pub fn delta_momentum(&self) -> f64 {
        self.momentum_rest.concurrence - self.momentum_boosted.concurrence
    }

    pub fn reports(&self) -> [(&'static str, &ConcurrenceReport); 4] {
        [
            ("spin_rest", &self.spin_rest),
            ("spin_boosted", &self.spin_boosted),
            ("mom_rest", &self.momentum_rest),
            ("mom_boosted", &self.momentum_boosted),
        ]
    }

    pub fn max_residual(&self) -> f64 {
        self.reports()
            .iter()
            .filter_map(|(_, r)| r.residual)
            .fold(0.0, f64::max)
    }

    pub fn value(&self, column: OutputColumn) -> f64 {
        match column {
            OutputColumn::CSpinRest => self.spin_rest.concurrence,
            OutputColumn::CSpinBoosted => self.spin_boosted.concurrence,
            OutputColumn::CMomRest => self.momentum_rest.concurrence,
            OutputColumn::CMomBoosted => self.momentum_boosted.concurrence,
            OutputColumn::DeltaSpin => self.delta_spin(),
            OutputColumn::DeltaMom => self.delta_momentum(),
        }
    }

    /// Fails with a numerical error if any concurrence strays from its closed
    /// form by more than [`RESIDUAL_TOL`].
    pub fn check(&self) -> Result<()> {
        let worst = self.max_residual();
        if worst > RESIDUAL_TOL {
            return Err(Error::Numerical(format!(
                "pipeline differs from closed form by {worst:e} at parameter {}, phi {}",
                self.spec.parameter, self.phi
            )));
        }
        Ok(())
    }
}

/// Runs the full numeric pipeline at one point.
pub fn evaluate_point(spec: &ScenarioSpec, phi: f64) -> Result<PointReport> {
    let pair = boost_scenario(spec, phi)?;
    let report = |state: &crate::states::TwoParticleState, which, at| -> Result<_> {
        Ok(concurrence(&state.reduced(which)?)?
            .with_reference(closed_form_concurrence(spec, which, at)))
    };
    Ok(PointReport {
        spec: *spec,
        phi,
        spin_rest: report(&pair.rest_state, Subsystem::Spin, 0.0)?,
        spin_boosted: report(&pair.boosted_state, Subsystem::Spin, phi)?,
        momentum_rest: report(&pair.rest_state, Subsystem::Momentum, 0.0)?,
        momentum_boosted: report(&pair.boosted_state, Subsystem::Momentum, phi)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputColumn {
    #[value(name = "c_spin_rest")]
    CSpinRest,
    #[value(name = "c_spin_boosted")]
    CSpinBoosted,
    #[value(name = "c_mom_rest")]
    CMomRest,
    #[value(name = "c_mom_boosted")]
    CMomBoosted,
    #[value(name = "delta_spin")]
    DeltaSpin,
    #[value(name = "delta_mom")]
    DeltaMom,
}

impl OutputColumn {
    pub const ALL: [OutputColumn; 6] = [
        OutputColumn::CSpinRest,
        OutputColumn::CSpinBoosted,
        OutputColumn::CMomRest,
        OutputColumn::CMomBoosted,
        OutputColumn::DeltaSpin,
        OutputColumn::DeltaMom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OutputColumn::CSpinRest => "c_spin_rest",
            OutputColumn::CSpinBoosted => "c_spin_boosted",
            OutputColumn::CMomRest => "c_mom_rest",
            OutputColumn::CMomBoosted => "c_mom_boosted",
            OutputColumn::DeltaSpin => "delta_spin",
            OutputColumn::DeltaMom => "delta_mom",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SweepVariable {
    /// The scenario's entangling parameter (η or ξ)
    Param,
    Phi,
}

/// A one-dimensional sweep over either the parameter or φ.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub kind: ScenarioKind,
    pub sign: Sign,
    pub variable: SweepVariable,
    /// φ when sweeping the parameter, the parameter when sweeping φ.
    pub fixed_value: f64,
    pub start: f64,
    pub end: f64,
    pub steps: usize,
    pub outputs: Vec<OutputColumn>,
}

/// Default sampling interval of a sweep variable.
pub fn default_range(kind: ScenarioKind, variable: SweepVariable) -> (f64, f64) {
    match (kind, variable) {
        (_, SweepVariable::Phi) => (0.0, 1.0),
        (ScenarioKind::IndistinguishableEta, _) => (0.0, 1.0),
        _ => (0.001, 0.999),
    }
}

/// `steps` evenly spaced points with exact endpoints.
pub fn linspace(start: f64, end: f64, steps: usize) -> Vec<f64> {
    (0..steps)
        .map(|i| {
            if i + 1 == steps {
                end
            } else {
                start + (end - start) * i as f64 / (steps - 1) as f64
            }
        })
        .collect()
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.steps < 2 {
            return Err(Error::InvalidInput(format!(
                "steps = {} must be at least 2",
                self.steps
            )));
        }
        if self.outputs.is_empty() {
            return Err(Error::InvalidInput("no output columns selected".into()));
        }
        let (params, phis) = match self.variable {
            SweepVariable::Param => (vec![self.start, self.end], vec![self.fixed_value]),
            SweepVariable::Phi => (vec![self.fixed_value], vec![self.start, self.end]),
        };
        for p in params {
            ScenarioSpec::new(self.kind, p, self.sign)?;
        }
        if let Some(bad) = phis.into_iter().find(|p| !p.is_finite()) {
            return Err(Error::InvalidInput(format!("phi = {bad} is not finite")));
        }
        Ok(())
    }

    pub fn x_name(&self) -> &'static str {
        match self.variable {
            SweepVariable::Param => self.kind.parameter_name(),
            SweepVariable::Phi => "phi",
        }
    }

    pub fn columns(&self) -> Vec<String> {
        std::iter::once(self.x_name().to_string())
            .chain(self.outputs.iter().map(|c| c.name().to_string()))
            .collect()
    }

    /// Evaluates every point; each row is `[x, outputs...]`.
    pub fn rows(&self) -> Result<Vec<Vec<f64>>> {
        self.validate()?;
        linspace(self.start, self.end, self.steps)
            .into_iter()
            .map(|x| {
                let (p, phi) = match self.variable {
                    SweepVariable::Param => (x, self.fixed_value),
                    SweepVariable::Phi => (self.fixed_value, x),
                };
                let report = evaluate_point(&ScenarioSpec::new(self.kind, p, self.sign)?, phi)?;
                report.check()?;
                Ok(std::iter::once(x)
                    .chain(self.outputs.iter().map(|&c| report.value(c)))
                    .collect())
            })
            .collect()
    }
}

/// One CSV file of a figure.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureCurve {
    pub file_name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FigureContent {
    /// Boosted concurrences at each fixed value.
    Concurrences(&'static [OutputColumn]),
    /// `∂ΔC_spin` and `∂ΔC_mom` along the sweep variable.
    Derivatives,
}

/// Number of samples per figure curve.
pub const FIGURE_POINTS: usize = 101;

/// Preset sweep behind one of the eight figures.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureRecipe {
    pub id: u8,
    pub kind: ScenarioKind,
    pub variable: SweepVariable,
    /// Fixed value of the other variable per curve, with its file-name tag.
    pub fixed_values: Vec<(f64, &'static str)>,
    pub content: FigureContent,
}

const BOTH_BOOSTED: &[OutputColumn] = &[OutputColumn::CSpinBoosted, OutputColumn::CMomBoosted];
const SPIN_BOOSTED: &[OutputColumn] = &[OutputColumn::CSpinBoosted];
const MOM_BOOSTED: &[OutputColumn] = &[OutputColumn::CMomBoosted];

impl FigureRecipe {
    pub fn get(id: u8) -> Result<Self> {
        let phis = vec![
            (0.0, "phi0"),
            (PI / 10.0, "phi_pi10"),
            (PI / 8.0, "phi_pi8"),
        ];
        let etas = vec![(0.0, "eta0"), (0.125, "eta1_8"), (0.25, "eta1_4")];
        let xis = vec![(0.5, "xi1_2"), (0.25, "xi1_4"), (0.125, "xi1_8")];
        use FigureContent::*;
        use ScenarioKind::*;
        use SweepVariable::*;
        let (kind, variable, fixed_values, content) = match id {
            1 => (
                IndistinguishableEta,
                Param,
                phis,
                Concurrences(BOTH_BOOSTED),
            ),
            2 => (IndistinguishableEta, Phi, etas, Concurrences(BOTH_BOOSTED)),
            3 => (DistinguishableXi, Param, phis, Concurrences(SPIN_BOOSTED)),
            4 => (DistinguishableXi, Param, phis, Concurrences(MOM_BOOSTED)),
            5 => (DistinguishableXi, Phi, xis, Concurrences(SPIN_BOOSTED)),
            6 => (DistinguishableXi, Phi, xis, Concurrences(MOM_BOOSTED)),
            7 => (DistinguishableXi, Param, vec![(PI / 10.0, "")], Derivatives),
            8 => (DistinguishableXi, Phi, vec![(0.25, "")], Derivatives),
            _ => {
                return Err(Error::InvalidInput(format!(
                    "figure id {id} is not in 1..=8"
                )));
            }
        };
        Ok(Self {
            id,
            kind,
            variable,
            fixed_values,
            content,
        })
    }

    pub fn x_values(&self) -> Vec<f64> {
        let (a, b) = default_range(self.kind, self.variable);
        linspace(a, b, FIGURE_POINTS)
    }

    pub fn curves(&self) -> Result<Vec<FigureCurve>> {
        self.fixed_values
            .iter()
            .map(|&(fixed, tag)| {
                let file_name = if tag.is_empty() {
                    format!("fig{}.csv", self.id)
                } else {
                    format!("fig{}_{}.csv", self.id, tag)
                };
                match self.content {
                    FigureContent::Concurrences(outputs) => {
                        let (start, end) = default_range(self.kind, self.variable);
                        let sweep = SweepConfig {
                            kind: self.kind,
                            sign: Sign::Plus,
                            variable: self.variable,
                            fixed_value: fixed,
                            start,
                            end,
                            steps: FIGURE_POINTS,
                            outputs: outputs.to_vec(),
                        };
                        Ok(FigureCurve {
                            file_name,
                            columns: sweep.columns(),
                            rows: sweep.rows()?,
                        })
                    }
                    FigureContent::Derivatives => self.derivative_curve(fixed, file_name),
                }
            })
            .collect()
    }

    fn derivative_curve(&self, fixed: f64, file_name: String) -> Result<FigureCurve> {
        let (x_name, dir) = match self.variable {
            SweepVariable::Param => (self.kind.parameter_name(), Direction::Parameter),
            SweepVariable::Phi => ("phi", Direction::Phi),
        };
        let rows = self
            .x_values()
            .into_iter()
            .map(|x| {
                let (p, phi) = match self.variable {
                    SweepVariable::Param => (x, fixed),
                    SweepVariable::Phi => (fixed, x),
                };
                let spec = ScenarioSpec::new(self.kind, p, Sign::Plus)?;
                let d =
                    |which| delta_derivative(&spec, which, phi, dir, FD_STEP, Evaluator::Pipeline);
                Ok(vec![x, d(Subsystem::Spin)?, d(Subsystem::Momentum)?])
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FigureCurve {
            file_name,
            columns: vec![
                x_name.to_string(),
                format!("d_delta_spin_d{x_name}"),
                format!("d_delta_mom_d{x_name}"),
            ],
            rows,
        })
    }
}
