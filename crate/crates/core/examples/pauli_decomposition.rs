//! Pauli-basis coefficients of the boosted spin state: the σ_x⊗σ_x and
//! σ_y⊗σ_y correlations shrink by cos 2φ while the local terms stay put.

use wigner_ent::qcore::pauli_decompose;
use wigner_ent::states::closed_form::{psi_projector, xi_spin_pauli};
use wigner_ent::states::{boost_scenario, ScenarioSpec, Sign};

fn main() -> wigner_ent::Result<()> {
    let xi = 0.25;
    let rest = pauli_decompose(&psi_projector(xi, Sign::Plus))?;
    println!("rest frame: c = {:?}, d = {:?}", rest.c, rest.d);
    println!(
        "            diag(gamma) = {:?}",
        [rest.gamma[0][0], rest.gamma[1][1], rest.gamma[2][2]]
    );

    println!("\n  phi    g_xx     g_yy     g_zz    |numeric - closed form|");
    for phi in [0.0, 0.2, 0.4, 0.6, 0.8, 1.0] {
        let rho = boost_scenario(&ScenarioSpec::xi(xi, Sign::Plus)?, phi)?.boosted_spin()?;
        let pc = pauli_decompose(&rho)?;
        let diff = pc.max_abs_diff(&xi_spin_pauli(xi, Sign::Plus, phi));
        println!(
            "{phi:5.2} {:8.5} {:8.5} {:8.5}   {diff:.1e}",
            pc.gamma[0][0], pc.gamma[1][1], pc.gamma[2][2]
        );
    }
    Ok(())
}
