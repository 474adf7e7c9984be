//! The complex of relative log forms under `ω_λ ∧ -`, the critical ideal
//! of the master function, and the length of its critical scheme.

mod critical;
mod vanishing;
mod weight;

pub use critical::{
    critical_degree, critical_ideal, pairing, sample_critical_degrees, CriticalIdealData, CriticalSamples,
};
pub use vanishing::{cohomology_vanishing_check, omega_wedge, SpotCheck, VanishingReport};
pub use weight::Weight;
