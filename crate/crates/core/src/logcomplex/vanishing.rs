//! Exactness of `ω_λ ∧ -` on graded pieces of the relative log forms.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use super::weight::Weight;
use crate::arrangement::Arrangement;
use crate::error::Result;
use crate::exact::{Matrix, MonomialBasis};
use crate::logmod::{Element, LogContext, ModuleKind};
use crate::{QPoly, Rational};

/// `ω_λ ∧ η` for a form numerator `η`: `Σ_H λ_H (dα_H ∧ η) / α_H`.
pub fn omega_wedge(ctx: &LogContext, weight: &Weight, eta: &Element) -> Result<Element> {
    let p = eta.kind.form_degree().expect("a form");
    let kind = match eta.kind {
        ModuleKind::Forms(_) => ModuleKind::Forms(p + 1),
        _ => ModuleKind::RelativeForms(p + 1),
    };
    let l = ctx.l();
    let mut polys = vec![QPoly::zero(l); kind.components(l).len()];
    for (h, lambda) in weight.0.iter().enumerate() {
        if num_traits::Zero::is_zero(lambda) {
            continue;
        }
        for (acc, c) in polys.iter_mut().zip(ctx.wedge_dalpha(h, eta)) {
            let q = c.div_exact_linear(&ctx.forms()[h])?;
            *acc = &*acc + &q.scale(lambda);
        }
    }
    Ok(Element {
        kind,
        degree: eta.degree,
        polys,
    })
}

/// Rank of `ω_λ ∧ -` from `Ω^p_0` to `Ω^{p+1}_0` in degree `d`.
fn map_rank(ctx: &LogContext, weight: &Weight, p: usize, d: i64) -> Result<usize> {
    if p >= ctx.l() {
        return Ok(0);
    }
    let source = ModuleKind::RelativeForms(p);
    let target = ModuleKind::RelativeForms(p + 1);
    let k = target.coeff_degree(ctx.n(), d);
    if source.coeff_degree(ctx.n(), d) < 0 || k < 0 {
        return Ok(0);
    }
    let piece = ctx.piece(source, d)?;
    if piece.elements.is_empty() {
        return Ok(0);
    }
    let basis = MonomialBasis::new(ctx.l(), k);
    let rows = piece
        .elements
        .iter()
        .map(|e| Ok(omega_wedge(ctx, weight, e)?.coords(&basis)))
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    let cols = rows[0].len();
    Ok(Matrix::from_rows(cols, rows).rank())
}

/// Exactness data at one spot `(p, d)` of the complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpotCheck {
    pub p: usize,
    pub d: i64,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VanishingReport {
    pub weight: Weight,
    pub degrees: (i64, i64),
    pub spots: Vec<SpotCheck>,
    /// Cases where `ω_λ ∧ ω_λ ∧ η` was found nonzero.
    pub square_failures: Vec<(usize, i64)>,
}

impl VanishingReport {
    pub fn passed(&self) -> bool {
        self.square_failures.is_empty() && self.spots.iter().all(|s| s.exact)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SpotCheck> {
        self.spots.iter().filter(|s| !s.exact)
    }
}

/// For every `p < l - 1` and `d` in the window, checks
/// `rank(in) + rank(out) = dim Ω^p_{0,d}`, and that `ω_λ ∧ ω_λ` kills
/// each basis element used.
pub fn cohomology_vanishing_check(a: &Arrangement, weight: &Weight, degrees: RangeInclusive<i64>) -> Result<VanishingReport> {
    weight.check_projective(a.n())?;
    let ctx = LogContext::new(a);
    let l = ctx.l();
    let top_p = l.saturating_sub(1);
    let cells: Vec<(usize, i64)> = (0..=top_p)
        .flat_map(|p| degrees.clone().map(move |d| (p, d)))
        .collect();
    // ranks of ω_λ out of Ω^p_0 for p ≤ l-2, plus dimensions
    let ranks: Vec<((usize, i64), usize)> = cells
        .par_iter()
        .filter(|(p, _)| *p + 1 < l)
        .map(|&(p, d)| Ok(((p, d), map_rank(&ctx, weight, p, d)?)))
        .collect::<Result<_>>()?;
    let rank = |p: usize, d: i64| {
        ranks
            .iter()
            .find(|((q, e), _)| *q == p && *e == d)
            .map(|(_, r)| *r)
            .unwrap_or(0)
    };
    let spots = cells
        .par_iter()
        .filter(|(p, _)| *p + 1 < l)
        .map(|&(p, d)| {
            let dim = ctx.dim(ModuleKind::RelativeForms(p), d)?;
            let rank_in = if p == 0 { 0 } else { rank(p - 1, d) };
            let rank_out = rank(p, d);
            Ok(SpotCheck {
                p,
                d,
                dim,
                rank_in,
                rank_out,
                exact: rank_in + rank_out == dim,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let square_failures = cells
        .par_iter()
        .filter(|(p, _)| *p + 2 <= l)
        .map(|&(p, d)| {
            if ModuleKind::RelativeForms(p).coeff_degree(ctx.n(), d) < 0 {
                return Ok(None);
            }
            let piece = ctx.piece(ModuleKind::RelativeForms(p), d)?;
            for e in piece.elements.iter().take(4) {
                let twice = omega_wedge(&ctx, weight, &omega_wedge(&ctx, weight, e)?)?;
                if !twice.is_zero() {
                    return Ok(Some((p, d)));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(VanishingReport {
        weight: weight.clone(),
        degrees: (*degrees.start(), *degrees.end()),
        spots,
        square_failures,
    })
}
