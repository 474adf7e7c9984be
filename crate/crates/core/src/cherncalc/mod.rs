//! Chern classes of sheaves with a free resolution of length one, via
//! truncated symmetric series, and of logarithmic 1-forms on projective
//! arrangements.

mod chern;
mod series;

pub use chern::{
    chern_from_twists, chern_of_log_forms, chern_via_twists, consistency_checks, ChernPoly, ChernTheorem,
    ConsistencyEntry, ConsistencyReport, HypothesisCheck, LogFormsChern, TwistRoute,
};
pub use series::{
    borel_serre_top, c_series, decomposition, f_series, koszul_point_character, lebelt_polys, reparameterized,
    s_membership_check, top_lebelt_closed_forms, LebeltReport, LebeltSet,
};
