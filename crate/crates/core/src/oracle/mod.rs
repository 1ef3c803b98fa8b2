//! Numerical cross-checks of the symbolic classification.
//!
//! The half-cone measure is defined by pushing forward Lebesgue measure on
//! `V_1 = ℝ²` through the moment map, so every pairing here is a quadrature
//! over the `(a, b)` plane. Nothing computed in this module feeds back into
//! the exact modules.

mod pairing;
mod quadrature;
mod symmetric;
mod test_function;

pub use pairing::{
    invariance_residual, invariance_residual_with, level_set_moments, moment_map,
    moment_map_exact, odd_section_obstruction, odd_section_obstruction_with, pair_delta_nplus,
    predict_scalar_pairing, scalar_consistency, InvarianceVariant, LevelSetMoments, Pairing,
    Residual, ScalarConsistency, SectionVariant, CONE_DENSITY,
};

/// Relative residual below which an invariance check passes.
pub const INVARIANCE_TOLERANCE: f64 = 1e-6;
/// Relative size below which the odd-`n` obstruction counts as cancelled.
pub const OBSTRUCTION_TOLERANCE: f64 = 1e-12;
/// A negative-control variant must stay above this to show the check has teeth.
pub const NEGATIVE_CONTROL_FLOOR: f64 = 1e-3;
/// Relative gap below which the scalar consistency check passes.
pub const CONSISTENCY_TOLERANCE: f64 = 1e-6;

/// Square `[−R, R]²` used for a Gaussian of width `σ`: wide enough for the
/// Gaussian tail and for the moment map to reach a unit-size center.
pub fn default_radius(sigma: f64) -> f64 {
    (6.0 * sigma).max(3.0)
}
pub use quadrature::{pairwise_sum, Node, QuadratureGrid, Rule};
pub use symmetric::SymmetricPowerBasis;
pub use test_function::{Exponent, GaussPoly, TestFunction};
