//! Logarithmic derivations and forms: graded pieces by exact linear
//! algebra, Hilbert series, freeness, and the invariant `N`.

mod generators;
mod hilbert;
mod invariant;
mod pieces;
mod twists;
mod wedge;

pub use generators::{is_free_saito, poly_determinant, Freeness, GeneratorSearch};
pub use hilbert::{hilbert_series, GradedDims, HilbertSeries, SeriesConfig};
pub use invariant::{
    check_zero_dimensional_nonfree_locus, n_central, n_generic_closed_form, n_projective, LocalContribution,
    NCentral, NProjective,
};
pub use pieces::{
    der_graded_dim, omega0_graded_dim, omega_graded_dim, subsets, Element, LogContext, ModuleKind, Piece,
};
pub use twists::{twist_lists, TwistList};
pub use wedge::wedge_defect;

use crate::arrangement::Arrangement;

/// Limits shared by the module computations.
#[derive(Clone, Copy, Debug, Default)]
pub struct LogConfig {
    /// Overrides the span of degrees searched above the lowest one.
    pub degree_cap: Option<i64>,
}

impl LogConfig {
    /// Highest derivation degree searched for generators.
    pub fn freeness_cap(&self, a: &Arrangement) -> i64 {
        -1 + self
            .degree_cap
            .unwrap_or(SeriesConfig::for_arrangement(a.n(), a.l()).cap_span)
    }
}
