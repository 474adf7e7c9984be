//! The non-freeness invariant `N` from Hilbert series.

use serde::Serialize;

use super::generators::is_free_saito;
use super::hilbert::SeriesConfig;
use super::pieces::{LogContext, ModuleKind};
use super::LogConfig;
use crate::arrangement::{Arrangement, IntersectionLattice};
use crate::error::{Error, Result};
use crate::IntLaurent;

/// `N(A)` together with the data it was computed from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NCentral {
    pub value: i64,
    /// Hilbert numerator of `D(A)`.
    pub der_numerator: IntLaurent,
    /// Hilbert numerator of `Ω^1(A)`.
    pub omega_numerator: IntLaurent,
    /// `(P_D(t) - P_Ω(1/t)) / (1-t)^l`, whose value at 1 is `N`.
    pub quotient: IntLaurent,
    /// Uniform degree shift applied to reconcile the two gradings.
    pub grading_shift: i64,
    /// Proper localizations of codimension at least 3 verified free.
    pub localizations_checked: usize,
}

fn series_config(a: &Arrangement, cfg: &LogConfig) -> SeriesConfig {
    SeriesConfig::for_arrangement(a.n(), a.l()).with_cap_span(cfg.degree_cap)
}

/// Verifies that every proper localization of codimension at least 3 is
/// free; rank at most 2 arrangements are always free.
pub fn check_zero_dimensional_nonfree_locus(a: &Arrangement, cfg: &LogConfig) -> Result<usize> {
    let lattice = IntersectionLattice::build(a);
    let mut checked = 0;
    for c in 3..lattice.rank() {
        for x in lattice.flats(c) {
            let loc = a.localization(x)?.essentialize();
            let verdict = is_free_saito(&loc, cfg.freeness_cap(&loc))?;
            if !verdict.free {
                return Err(Error::Hypothesis(format!(
                    "localization at flat {:?} is not free, so the non-free locus is not zero-dimensional",
                    x.hyperplanes()
                )));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// `N(A)` by comparing `h(D, t)` with `h(Ω^1, 1/t) / (-t)^l`.
pub fn n_central(a: &Arrangement, cfg: &LogConfig) -> Result<NCentral> {
    if !a.is_essential() {
        return Err(Error::Precondition(format!(
            "arrangement has rank {} in dimension {}; essentialize it first",
            a.rank(),
            a.l()
        )));
    }
    let checked = check_zero_dimensional_nonfree_locus(a, cfg)?;
    let ctx = LogContext::new(a);
    let config = series_config(a, cfg);
    let der = ctx.hilbert_series(ModuleKind::Derivations, config)?.numerator;
    let omega = ctx.hilbert_series(ModuleKind::Forms(1), config)?.numerator;
    let diff = &der - &omega.invert();
    let quotient = diff
        .div_one_minus_t_pow(a.l() as u32)
        .map_err(|_| Error::Calibration {
            der: format!("{der:?}"),
            omega: format!("{omega:?}"),
        })?;
    let value = quotient.eval_at_one();
    if value < 0 {
        return Err(Error::Calibration {
            der: format!("{der:?}"),
            omega: format!("{omega:?}"),
        });
    }
    Ok(NCentral {
        value,
        der_numerator: der,
        omega_numerator: omega,
        quotient,
        grading_shift: 0,
        localizations_checked: checked,
    })
}

/// One summand of `N(PA)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalContribution {
    pub hyperplanes: Vec<usize>,
    pub labels: Vec<String>,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NProjective {
    pub value: i64,
    /// Contributions of flats with nonzero local `N`.
    pub nonzero: Vec<LocalContribution>,
    pub flats_examined: usize,
}

/// `N(PA)`: the sum of `N` over localizations at flats of codimension
/// `rank - 1`.
pub fn n_projective(a: &Arrangement, cfg: &LogConfig) -> Result<NProjective> {
    let lattice = IntersectionLattice::build(a);
    let r = lattice.rank();
    let flats = if r == 0 { &[][..] } else { lattice.flats(r - 1) };
    let mut value = 0;
    let mut nonzero = Vec::new();
    for x in flats {
        let loc = a.localization(x)?.essentialize();
        let local = if loc.l() <= 2 {
            0
        } else {
            n_central(&loc, cfg)
                .map_err(|e| Error::AtFlat {
                    flat: format!("{:?}", x.hyperplanes()),
                    source: Box::new(e),
                })?
                .value
        };
        if local != 0 {
            nonzero.push(LocalContribution {
                hyperplanes: x.hyperplanes().to_vec(),
                labels: loc.labels().to_vec(),
                value: local,
            });
        }
        value += local;
    }
    Ok(NProjective {
        value,
        nonzero,
        flats_examined: flats.len(),
    })
}

/// `Σ_{X ∈ L_c} binom(#A_X - 1, c)`, valid for `(c-1)`-generic
/// arrangements. With `c = rank` this is the generic central value
/// `binom(n-1, l)`; with `c = rank - 1` it is `N(PA)`. Localizations of
/// rank at most 2 are free, so the sum is zero for `c ≤ 2`.
pub fn n_generic_closed_form(lattice: &IntersectionLattice, c: usize) -> Result<i64> {
    if c == 0 || !lattice.is_k_generic(c - 1) {
        return Err(Error::Precondition(format!(
            "closed form over codimension {c} needs a {}-generic arrangement",
            c.saturating_sub(1)
        )));
    }
    if c <= 2 {
        return Ok(0);
    }
    Ok(lattice
        .flats(c)
        .iter()
        .map(|x| crate::exact::laurent::binom_i64(x.hyperplanes().len() as u64 - 1, c as u64))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(l: usize, rows: &[&[i64]]) -> Arrangement {
        Arrangement::from_integer_rows(l, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn boolean_has_zero() {
        let r = n_central(&arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), &LogConfig::default()).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.quotient.is_zero());
    }

    #[test]
    fn four_generic_planes() {
        let a = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let r = n_central(&a, &LogConfig::default()).unwrap();
        assert_eq!(r.value, 1);
        let lat = IntersectionLattice::build(&a);
        assert_eq!(n_generic_closed_form(&lat, 3).unwrap(), 1);
        assert_eq!(n_generic_closed_form(&lat, 2).unwrap(), 0);
        assert_eq!(n_projective(&a, &LogConfig::default()).unwrap().value, 0);
    }

    #[test]
    fn non_essential_input_rejected() {
        let a = arr(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert!(matches!(n_central(&a, &LogConfig::default()), Err(Error::Precondition(_))));
    }

    #[test]
    fn rank_two_points_contribute_nothing() {
        let braid = crate::corpus::braid3();
        let lat = IntersectionLattice::build(&braid);
        assert_eq!(n_generic_closed_form(&lat, 2).unwrap(), 0);
        assert_eq!(n_projective(&braid, &LogConfig::default()).unwrap().value, 0);
    }

    #[test]
    fn closed_form_precondition() {
        let pencil = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]);
        let lat = IntersectionLattice::build(&pencil);
        assert!(n_generic_closed_form(&lat, 3).is_err());
    }
}
