//! Finite-difference sign tables of ∂ΔC along ξ and along φ, and the
//! degradation rates |dC'/dφ| for a strongly and a weakly entangled state.

use std::f64::consts::PI;

use wigner_ent::entanglement::{
    degradation_rate, sign_grid_analysis, Direction, Evaluator, SignGrid, FD_STEP,
};
use wigner_ent::qcore::Subsystem;
use wigner_ent::states::{ScenarioKind, ScenarioSpec, Sign};

fn main() -> wigner_ent::Result<()> {
    let xs: Vec<f64> = (1..=9).map(|k| 0.1 * k as f64).collect();
    let table = sign_grid_analysis(
        ScenarioKind::DistinguishableXi,
        Sign::Plus,
        &SignGrid::along_parameter(xs, PI / 10.0),
        Evaluator::Pipeline,
    )?;
    println!("  xi    dDC_spin/dxi   dDC_mom/dxi   agree");
    for p in &table.points {
        let d = p.d_parameter;
        println!(
            "{:5.2} {:13.6} {:13.6}   {:?}",
            p.parameter,
            d.spin,
            d.momentum,
            d.signs_agree()
        );
    }

    let phis: Vec<f64> = (1..=99).map(|k| 0.01 * k as f64).collect();
    let table = sign_grid_analysis(
        ScenarioKind::DistinguishableXi,
        Sign::Plus,
        &SignGrid::along_phi(0.25, phis),
        Evaluator::ClosedForm,
    )?;
    println!(
        "\nalong phi at xi = 1/4: {} points compared, all agree: {}",
        table.compared(Direction::Phi),
        table.all_agree(Direction::Phi)
    );

    println!("\nrates at phi = pi/10");
    for xi in [0.5, 0.125] {
        let spec = ScenarioSpec::xi(xi, Sign::Plus)?;
        println!(
            "  xi = {xi:5}: spin {:.6}, momentum {:.6}",
            degradation_rate(&spec, Subsystem::Spin, PI / 10.0, FD_STEP)?,
            degradation_rate(&spec, Subsystem::Momentum, PI / 10.0, FD_STEP)?
        );
    }
    Ok(())
}
