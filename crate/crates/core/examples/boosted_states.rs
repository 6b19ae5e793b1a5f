//! Builds each rest-frame scenario, boosts it, and prints the reduced spin
//! and momentum matrices next to their closed forms.

use std::f64::consts::PI;

use wigner_ent::qcore::{ComplexMatrix, Subsystem};
use wigner_ent::states::closed_form::closed_form_matrix;
use wigner_ent::states::{boost_scenario, ScenarioSpec, Sign};

fn show(label: &str, m: &ComplexMatrix) {
    println!("{label}");
    for i in 0..4 {
        let row: Vec<String> = (0..4)
            .map(|j| {
                let z = m[(i, j)];
                format!("{:+.4}{:+.4}i", z.re, z.im)
            })
            .collect();
        println!("  [{}]", row.join("  "));
    }
}

fn main() -> wigner_ent::Result<()> {
    let phi = PI / 8.0;
    for spec in [
        ScenarioSpec::eta(0.25)?,
        ScenarioSpec::xi(0.25, Sign::Plus)?,
        ScenarioSpec::appendix_d(0.25, Sign::Minus)?,
    ] {
        let pair = boost_scenario(&spec, phi)?;
        println!(
            "== {:?}, parameter {}, phi = pi/8",
            spec.kind, spec.parameter
        );
        for which in [Subsystem::Spin, Subsystem::Momentum] {
            let numeric = pair.boosted_state.reduced(which)?;
            show(&format!("{which:?} (partial trace)"), &numeric);
            let diff = numeric.max_abs_diff(&closed_form_matrix(&spec, which, phi));
            println!("  max |numeric - closed form| = {diff:.1e}");
        }
        println!();
    }
    Ok(())
}
