//! Wigner rotation angles for perpendicular boosts, and the speed matching
//! that gives an electron and a muon the same angle.

use wigner_ent::kinematics::{
    rapidities_from, wigner_angle_perpendicular, wigner_rotation_general, BoostConfig,
    MomentumMatching, UnitVector,
};

fn main() -> wigner_ent::Result<()> {
    let config = BoostConfig::perpendicular(0.6, 0.8)?;
    let r = rapidities_from(&config);
    println!(
        "cosh(alpha) = {:.6}, cosh(delta) = {:.6}",
        r.alpha.cosh(),
        r.delta.cosh()
    );

    let rot = wigner_rotation_general(&config);
    println!(
        "angle = {:.6} rad about {:?}",
        rot.angle,
        rot.axis.as_array()
    );

    // oblique boost: the axis stays along e x p
    let oblique = BoostConfig::new(
        0.9,
        UnitVector::normalize([0.0, 1.0, 1.0])?,
        0.7,
        UnitVector::X,
    )?;
    let rot = wigner_rotation_general(&oblique);
    println!(
        "oblique boost: {:.6} rad about {:?}",
        rot.angle,
        rot.axis.as_array()
    );

    println!("\n beta   phi(v=0.3)  phi(v=0.9)");
    for beta in [0.1, 0.3, 0.5, 0.7, 0.9, 0.99] {
        println!(
            "{beta:5.2}  {:10.6}  {:10.6}",
            wigner_angle_perpendicular(beta, 0.3)?,
            wigner_angle_perpendicular(beta, 0.9)?
        );
    }

    let m = MomentumMatching::electron_muon();
    for v_mu in [0.1, 0.5, 0.9] {
        let v_e = m.electron_speed(v_mu)?;
        println!(
            "muon at {v_mu}: electron at {v_e:.12}, angles {:.9} / {:.9}",
            wigner_angle_perpendicular(0.8, v_e)?,
            wigner_angle_perpendicular(0.8, v_mu)?
        );
    }
    Ok(())
}
