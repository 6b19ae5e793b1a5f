//! Command-line front end. [`run`] parses arguments and writes to the given
//! streams, so the binary is a one-liner and the commands are testable
//! in-process.

pub mod format;
pub mod sweep;

use std::f64::consts::PI;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::kinematics::{
    wigner_angle_perpendicular, wigner_rotation_general, BoostConfig, MomentumMatching,
    MUON_ELECTRON_MASS_RATIO,
};
use crate::qcore::{ComplexMatrix, Subsystem};
use crate::states::{boost_scenario, ScenarioKind, ScenarioSpec, Sign};

pub use format::{format_sig, round_sig, DEFAULT_PRECISION, PRECISION_ENV};
pub use sweep::{
    evaluate_point, FigureCurve, FigureRecipe, OutputColumn, PointReport, SweepConfig,
    SweepVariable, FIGURE_POINTS,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "wigner-ent",
    version,
    about = "Spin and momentum entanglement of two massive fermions under Lorentz boosts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Concurrences, λ spectra and closed-form residuals at one point
    Point(PointArgs),
    /// Sweep the parameter or φ and print one row per sample
    Sweep(SweepArgs),
    /// Write the CSV data behind figure 1..8
    Figure(FigureArgs),
    /// Dump rest and boosted states and the four reduced matrices as JSON
    State(StateArgs),
    /// Wigner rotation angle for a perpendicular boost
    Wigner(WignerArgs),
    /// Re-verify random points against the closed forms
    Selftest(SelftestArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScenarioArg {
    Eta,
    Xi,
    AppendixD,
}

impl From<ScenarioArg> for ScenarioKind {
    fn from(s: ScenarioArg) -> Self {
        match s {
            ScenarioArg::Eta => ScenarioKind::IndistinguishableEta,
            ScenarioArg::Xi => ScenarioKind::DistinguishableXi,
            ScenarioArg::AppendixD => ScenarioKind::AppendixD,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct ScenarioArgs {
    #[arg(long, value_enum, default_value = "xi")]
    pub scenario: ScenarioArg,
    /// Sign of the ψ±(ξ) family (ignored for eta)
    #[arg(long, value_enum, default_value = "plus")]
    pub sign: SignArg,
    /// Angles are given in degrees
    #[arg(long)]
    pub deg: bool,
}

impl ScenarioArgs {
    fn angle(&self, x: f64) -> f64 {
        if self.deg {
            x.to_radians()
        } else {
            x
        }
    }

    fn spec(&self, param: f64) -> Result<ScenarioSpec> {
        ScenarioSpec::new(self.scenario.into(), param, self.sign.into())
    }
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    /// Entangling parameter η or ξ
    #[arg(long, allow_negative_numbers = true)]
    pub param: f64,
    /// Wigner angle
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi: f64,
    /// Machine-readable output instead of the text report
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    /// Variable to sweep
    #[arg(long, value_enum, default_value = "param")]
    pub sweep: SweepVariable,
    /// Fixed parameter (required when sweeping phi)
    #[arg(long, allow_negative_numbers = true)]
    pub param: Option<f64>,
    /// Fixed angle when sweeping the parameter
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi: f64,
    /// Start of the sweep (defaults to the variable's plotting window)
    #[arg(long, allow_negative_numbers = true)]
    pub from: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub to: Option<f64>,
    #[arg(long, default_value_t = FIGURE_POINTS)]
    pub steps: usize,
    /// Comma-separated columns (default: all six)
    #[arg(long, value_enum, value_delimiter = ',')]
    pub outputs: Vec<OutputColumn>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// Figure number, 1..8
    pub id: u8,
    /// Directory the CSV files are written to
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub param: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WignerArgs {
    /// Boost speed v/c
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    /// Particle speed v/c (perpendicular to the boost)
    #[arg(long, allow_negative_numbers = true)]
    pub speed: Option<f64>,
    /// Electron mass (arbitrary units)
    #[arg(long = "m-e")]
    pub m_e: Option<f64>,
    /// Muon mass (same units as --m-e)
    #[arg(long = "m-mu")]
    pub m_mu: Option<f64>,
    /// Muon speed; prints the matched electron speed
    #[arg(long, allow_negative_numbers = true)]
    pub v: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 100)]
    pub rows: usize,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
}

/// Failure of a command, already mapped to an exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_input_error() {
            EXIT_INVALID
        } else {
            EXIT_NUMERICAL
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: format!("i/o error: {e}"),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure {
            code: EXIT_NUMERICAL,
            message: format!("json: {e}"),
        }
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return e.exit_code();
        }
    };
    let digits = match precision_from_env() {
        Ok(d) => d,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            return f.code;
        }
    };
    let result = match &cli.command {
        Command::Point(a) => cmd_point(a, digits, out),
        Command::Sweep(a) => cmd_sweep(a, digits, out),
        Command::Figure(a) => cmd_figure(a, digits, out),
        Command::State(a) => cmd_state(a, digits, out),
        Command::Wigner(a) => cmd_wigner(a, digits, out),
        Command::Selftest(a) => cmd_selftest(a, digits, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn precision_from_env() -> std::result::Result<usize, Failure> {
    match std::env::var(PRECISION_ENV) {
        Err(_) => Ok(DEFAULT_PRECISION),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(d) if (1..=17).contains(&d) => Ok(d),
            _ => Err(Failure {
                code: EXIT_INVALID,
                message: format!("{PRECISION_ENV}={v:?} must be an integer in 1..=17"),
            }),
        },
    }
}

/// Writes to `--out` when given, otherwise to `out`.
fn emit(path: Option<&Path>, out: &mut dyn Write, text: &str) -> CmdResult {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn csv_string(columns: &[String], rows: &[Vec<f64>], digits: usize) -> String {
    let mut buf = Vec::new();
    format::write_csv(&mut buf, columns, rows, digits).expect("writing to memory");
    String::from_utf8(buf).expect("ascii")
}

fn json_string(v: &Value) -> std::result::Result<String, Failure> {
    Ok(serde_json::to_string(v)? + "\n")
}

fn rounded(xs: &[f64], digits: usize) -> Vec<f64> {
    xs.iter().map(|&x| round_sig(x, digits)).collect()
}

fn scenario_label(spec: &ScenarioSpec) -> &'static str {
    match spec.kind {
        ScenarioKind::IndistinguishableEta => "eta",
        ScenarioKind::DistinguishableXi => "xi",
        ScenarioKind::AppendixD => "appendix-d",
    }
}

fn sign_label(sign: Sign) -> &'static str {
    match sign {
        Sign::Plus => "plus",
        Sign::Minus => "minus",
    }
}

fn cmd_point(a: &PointArgs, digits: usize, out: &mut dyn Write) -> CmdResult {
    let spec = a.scenario.spec(a.param)?;
    let phi = a.scenario.angle(a.phi);
    let report = evaluate_point(&spec, phi)?;
    let values: Vec<f64> = OutputColumn::ALL.iter().map(|&c| report.value(c)).collect();
    let names: Vec<String> = OutputColumn::ALL
        .iter()
        .map(|c| c.name().to_string())
        .collect();
    let fmt = |x: f64| format_sig(x, digits);
    let text = match a.format {
        Some(Format::Csv) => csv_string(&names, &[values], digits),
        Some(Format::Json) => {
            let mut obj = serde_json::Map::new();
            obj.insert("scenario".into(), json!(scenario_label(&spec)));
            obj.insert("parameter".into(), json!(spec.parameter));
            obj.insert("sign".into(), json!(sign_label(spec.sign)));
            obj.insert("phi".into(), json!(round_sig(phi, digits)));
            for (name, v) in names.iter().zip(&values) {
                obj.insert(name.clone(), json!(round_sig(*v, digits)));
            }
            for (name, r) in report.reports() {
                obj.insert(format!("lambda_{name}"), json!(rounded(&r.lambdas, digits)));
            }
            obj.insert("max_residual".into(), json!(report.max_residual()));
            json_string(&Value::Object(obj))?
        }
        None => {
            let mut s = String::new();
            let mut line = |k: &str, v: String| s.push_str(&format!("{k:<20} {v}\n"));
            line(
                "scenario",
                format!("{} ({})", scenario_label(&spec), sign_label(spec.sign)),
            );
            line(spec.kind.parameter_name(), fmt(spec.parameter));
            line("phi", fmt(phi));
            for (name, v) in names.iter().zip(&values) {
                line(name, fmt(*v));
            }
            for (name, r) in report.reports() {
                let ls: Vec<String> = r.lambdas.iter().map(|&x| fmt(x)).collect();
                line(&format!("lambda_{name}"), ls.join(" "));
            }
            line("max_residual", format!("{:e}", report.max_residual()));
            s
        }
    };
    emit(a.out.as_deref(), out, &text)?;
    report.check()?;
    Ok(())
}

fn cmd_sweep(a: &SweepArgs, digits: usize, out: &mut dyn Write) -> CmdResult {
    let kind: ScenarioKind = a.scenario.scenario.into();
    let (fixed_value, default) = match a.sweep {
        SweepVariable::Param => (a.scenario.angle(a.phi), sweep::default_range(kind, a.sweep)),
        SweepVariable::Phi => {
            let p = a.param.ok_or_else(|| {
                Error::InvalidInput("--param is required when sweeping phi".into())
            })?;
            (p, sweep::default_range(kind, a.sweep))
        }
    };
    let conv = |x: f64| match a.sweep {
        SweepVariable::Phi => a.scenario.angle(x),
        SweepVariable::Param => x,
    };
    let config = SweepConfig {
        kind,
        sign: a.scenario.sign.into(),
        variable: a.sweep,
        fixed_value,
        start: a.from.map(conv).unwrap_or(default.0),
        end: a.to.map(conv).unwrap_or(default.1),
        steps: a.steps,
        outputs: if a.outputs.is_empty() {
            OutputColumn::ALL.to_vec()
        } else {
            a.outputs.clone()
        },
    };
    let columns = config.columns();
    let rows = config.rows()?;
    let text = match a.format {
        Format::Csv => csv_string(&columns, &rows, digits),
        Format::Json => {
            let rows: Vec<Vec<f64>> = rows.iter().map(|r| rounded(r, digits)).collect();
            json_string(&json!({
                "scenario": scenario_label(&ScenarioSpec { kind, parameter: 0.0, sign: config.sign }),
                "sign": sign_label(config.sign),
                "sweep": config.x_name(),
                "fixed_value": round_sig(config.fixed_value, digits),
                "columns": columns,
                "rows": rows,
            }))?
        }
    };
    emit(a.out.as_deref(), out, &text)
}

fn cmd_figure(a: &FigureArgs, digits: usize, out: &mut dyn Write) -> CmdResult {
    let recipe = FigureRecipe::get(a.id)?;
    fs::create_dir_all(&a.out)?;
    for curve in recipe.curves()? {
        let path = a.out.join(&curve.file_name);
        fs::write(&path, csv_string(&curve.columns, &curve.rows, digits))?;
        writeln!(out, "{}", path.display())?;
    }
    Ok(())
}

fn matrix_json(m: &ComplexMatrix, digits: usize) -> Value {
    let rows: Vec<Vec<[f64; 2]>> = m
        .to_pairs()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|[r, i]| [round_sig(r, digits), round_sig(i, digits)])
                .collect()
        })
        .collect();
    json!(rows)
}

fn cmd_state(a: &StateArgs, digits: usize, out: &mut dyn Write) -> CmdResult {
    let spec = a.scenario.spec(a.param)?;
    let phi = a.scenario.angle(a.phi);
    let pair = boost_scenario(&spec, phi)?;
    let amps = |s: &crate::states::TwoParticleState| -> Vec<[f64; 2]> {
        s.amplitudes()
            .iter()
            .map(|z| [round_sig(z.re, digits), round_sig(z.im, digits)])
            .collect()
    };
    let v = json!({
        "basis_order": ["momA", "momB", "spinA", "spinB"],
        "scenario": scenario_label(&spec),
        "parameter": spec.parameter,
        "sign": sign_label(spec.sign),
        "phi": round_sig(phi, digits),
        "rest_state": amps(&pair.rest_state),
        "boosted_state": amps(&pair.boosted_state),
        "rest_spin": matrix_json(&pair.rest_state.reduced(Subsystem::Spin)?, digits),
        "rest_momentum": matrix_json(&pair.rest_state.reduced(Subsystem::Momentum)?, digits),
        "boosted_spin": matrix_json(&pair.boosted_spin()?, digits),
        "boosted_momentum": matrix_json(&pair.boosted_momentum()?, digits),
    });
    emit(a.out.as_deref(), out, &json_string(&v)?)
}

fn cmd_wigner(a: &WignerArgs, digits: usize, out: &mut dyn Write) -> CmdResult {
    let fmt = |x: f64| format_sig(x, digits);
    let mut s = String::new();
    let mut line = |k: &str, v: String| s.push_str(&format!("{k:<12} {v}\n"));
    if a.speed.is_none() && a.v.is_none() {
        return Err(Error::InvalidInput(
            "give --speed, or --v for a matched electron-muon pair".into(),
        )
        .into());
    }
    if let Some(speed) = a.speed {
        let phi = wigner_angle_perpendicular(a.beta, speed)?;
        let general = wigner_rotation_general(&BoostConfig::perpendicular(a.beta, speed)?).angle;
        if (phi - general).abs() > 1e-12 {
            return Err(Error::Numerical(format!(
                "perpendicular formula {phi} disagrees with the general rotation {general}"
            ))
            .into());
        }
        line("phi_rad", fmt(phi));
        line("phi_deg", fmt(phi.to_degrees()));
    }
    if let Some(v_mu) = a.v {
        let m_e = a.m_e.unwrap_or(1.0);
        let m_mu = a.m_mu.unwrap_or(m_e * MUON_ELECTRON_MASS_RATIO);
        let matching = MomentumMatching::new(m_e, m_mu)?;
        let v_e = matching.electron_speed(v_mu)?;
        let phi_e = wigner_angle_perpendicular(a.beta, v_e)?;
        let phi_mu = wigner_angle_perpendicular(a.beta, v_mu)?;
        line("a", fmt(matching.a));
        line("v_electron", fmt(v_e));
        line("v_muon", fmt(v_mu));
        line("phi_electron", fmt(phi_e));
        line("phi_muon", fmt(phi_mu));
    }
    out.write_all(s.as_bytes())?;
    Ok(())
}

fn cmd_selftest(a: &SelftestArgs, digits: usize, out: &mut dyn Write) -> CmdResult {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut worst: f64 = 0.0;
    let mut failures = 0usize;
    for _ in 0..a.rows {
        let kind = ScenarioKind::ALL[rng.gen_range(0..3)];
        let sign = if rng.gen_bool(0.5) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        let p = match kind {
            ScenarioKind::IndistinguishableEta => rng.gen_range(0.0..=1.0),
            _ => rng.gen_range(0.001..0.999),
        };
        let phi = rng.gen_range(0.0..=1.0);
        let report = evaluate_point(&ScenarioSpec::new(kind, p, sign)?, phi)?;
        let r = report.max_residual();
        worst = worst.max(r);
        if report.check().is_err() {
            failures += 1;
            writeln!(
                out,
                "FAIL {} p={} phi={} residual={r:e}",
                scenario_label(&report.spec),
                p,
                phi
            )?;
        }
    }
    writeln!(
        out,
        "selftest rows={} seed={} max_residual={} failures={}",
        a.rows,
        a.seed,
        format_sig(worst, digits.min(3)),
        failures
    )?;
    if failures > 0 {
        return Err(
            Error::Numerical(format!("{failures} rows exceeded the residual bound")).into(),
        );
    }
    Ok(())
}

/// Convenience used by the figure presets and examples: `π/10`, `π/8`.
pub const PHI_PI10: f64 = PI / 10.0;
pub const PHI_PI8: f64 = PI / 8.0;
