//! Entanglement of two massive spin-½ particles under Lorentz boosts.
//!
//! Each particle carries two qubits — a sharp two-valued momentum and a spin.
//! A boost rotates every spin about ẑ by a momentum-dependent Wigner angle,
//! which moves entanglement between the spin–spin and momentum–momentum
//! partitions. The crate builds the rest-frame states, applies boosts,
//! computes reduced density matrices and Wootters concurrences, and carries
//! the closed-form results to check the numerics against.
//!
//! ```
//! use wigner_ent::{boost_scenario, concurrence, ScenarioSpec, Sign};
//!
//! let spec = ScenarioSpec::xi(0.25, Sign::Plus).unwrap();
//! let pair = boost_scenario(&spec, std::f64::consts::PI / 8.0).unwrap();
//! let c = concurrence(&pair.boosted_spin().unwrap()).unwrap();
//! assert!((c.concurrence - 0.612372).abs() < 1e-6);
//! ```

pub mod cli;
pub mod entanglement;
pub mod error;
pub mod kinematics;
pub mod qcore;
pub mod states;

pub use entanglement::{
    closed_form_concurrence, concurrence, spin_flip, variation, ConcurrenceReport, VariationReport,
};
pub use error::{Error, Result};
pub use qcore::{Complex, ComplexMatrix, Subsystem};
pub use states::{
    apply_boost, boost_scenario, build_state, BoostedPair, ScenarioKind, ScenarioSpec, Sign,
    TwoParticleState,
};
