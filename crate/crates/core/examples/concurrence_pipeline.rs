//! The numeric route to a concurrence (state → boost → partial trace →
//! Wootters λ's) compared against the closed forms.

use std::f64::consts::PI;

use wigner_ent::entanglement::{closed_form_lambdas, pipeline_concurrence, variation};
use wigner_ent::qcore::Subsystem;
use wigner_ent::states::{ScenarioSpec, Sign};

fn main() -> wigner_ent::Result<()> {
    let spec = ScenarioSpec::xi(0.25, Sign::Plus)?;
    let phi = PI / 8.0;
    for which in [Subsystem::Spin, Subsystem::Momentum] {
        let r = pipeline_concurrence(&spec, which, phi)?;
        println!("{which:?}");
        println!("  lambdas      {:?}", r.lambdas);
        println!(
            "  closed form  {:?}",
            closed_form_lambdas(&spec, which, phi)
        );
        println!(
            "  C = {:.12}, closed form {:.12}",
            r.concurrence,
            r.closed_form.unwrap()
        );
        let v = variation(&spec, which, phi)?;
        println!(
            "  rest {:.6} -> boosted {:.6}, delta {:.6}",
            v.c_rest, v.c_boosted, v.delta
        );
    }

    let total = |phi| -> wigner_ent::Result<f64> {
        Ok(
            pipeline_concurrence(&spec, Subsystem::Spin, phi)?.concurrence
                + pipeline_concurrence(&spec, Subsystem::Momentum, phi)?.concurrence,
        )
    };
    println!(
        "\nC_spin + C_mom: rest {:.6}, boosted {:.6}",
        total(0.0)?,
        total(phi)?
    );

    // identical particles: spin and momentum lose the same amount
    let eta = ScenarioSpec::eta(0.1)?;
    for phi in [0.2, 0.5, 0.9] {
        let s = pipeline_concurrence(&eta, Subsystem::Spin, phi)?.concurrence;
        let m = pipeline_concurrence(&eta, Subsystem::Momentum, phi)?.concurrence;
        println!("eta = 0.1, phi = {phi}: C_spin = {s:.9}, C_mom = {m:.9}");
    }
    Ok(())
}
