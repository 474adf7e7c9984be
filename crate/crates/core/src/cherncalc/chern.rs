//! Chern polynomials in `Z[t]/(t^l)`: from Chern roots, and for the sheaf
//! of logarithmic 1-forms on a projective arrangement.

use std::fmt;

use serde::Serialize;

use super::series::is_integral;
use crate::arrangement::{poincare_proj, Arrangement, IntersectionLattice};
use crate::error::{Error, Result};
use crate::logmod::{is_free_saito, n_projective, twist_lists, LogConfig, LogContext, ModuleKind, NProjective, SeriesConfig, TwistList};
use crate::scalar::q;
use crate::{IntLaurent, IntPoly, QSeries, Rational};

/// A total Chern class `1 + c_1 t + ... + c_{l-1} t^{l-1}`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct ChernPoly {
    coeffs: Vec<i64>,
}

impl ChernPoly {
    /// Coefficients `c_0, ..., c_{l-1}`; missing ones are zero.
    pub fn new(l: usize, coeffs: &[i64]) -> Self {
        let mut c = coeffs[..coeffs.len().min(l)].to_vec();
        c.resize(l, 0);
        ChernPoly { coeffs: c }
    }

    fn from_rationals(l: usize, cs: &[Rational]) -> Result<Self> {
        let ints = cs
            .iter()
            .take(l)
            .enumerate()
            .map(|(i, c)| {
                if is_integral(c) {
                    i64::try_from(c.to_integer()).map_err(|_| Error::NonIntegral(format!("c_{i} overflows")))
                } else {
                    Err(Error::NonIntegral(format!("c_{i} = {c}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(l, &ints))
    }

    /// Truncation length `l`.
    pub fn l(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }
}

impl fmt::Debug for ChernPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

fn elementary(roots: &[i64], order: usize) -> QSeries {
    roots.iter().fold(QSeries::one(order), |acc, &a| {
        &acc * &QSeries::from_t_coeffs(order, &[q(1), q(a)])
    })
}

/// `∏ (1 + α_i t) / ∏ (1 + β_j t)` modulo `t^l`.
pub fn chern_from_twists(alpha: &[i64], beta: &[i64], l: usize) -> Result<ChernPoly> {
    if l == 0 {
        return Err(Error::Precondition("truncation length must be positive".into()));
    }
    let quotient = elementary(alpha, l).try_div(&elementary(beta, l))?;
    let cs: Vec<Rational> = quotient.coeffs().iter().map(|c| c.coeff(0)).collect();
    ChernPoly::from_rationals(l, &cs)
}

/// The result that produced a Chern polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ChernTheorem {
    /// Locally free arrangements: `c_t = π(PA, t)`.
    LocallyFree,
    /// Zero-dimensional non-free locus: `c_t = π(PA, t) + N(PA) t^{l-1}`.
    ZeroDimensionalNonFreeLocus,
}

impl ChernTheorem {
    pub fn name(self) -> &'static str {
        match self {
            ChernTheorem::LocallyFree => "Mustață–Schenck formula for locally free arrangements",
            ChernTheorem::ZeroDimensionalNonFreeLocus => {
                "generalized Mustață–Schenck formula for a zero-dimensional non-free locus"
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// `c_t(Ω^1(PA)(1))` with the values it was assembled from.
#[derive(Clone, Debug, Serialize)]
pub struct LogFormsChern {
    pub chern: ChernPoly,
    pub poincare_proj: Vec<i64>,
    pub n: NProjective,
    pub theorem: ChernTheorem,
    pub theorem_name: String,
    pub hypotheses: Vec<HypothesisCheck>,
}

impl LogFormsChern {
    /// Codimension in `P^{l-1}` of the non-free locus, `None` when empty.
    pub fn nonfree_codim(&self) -> Option<usize> {
        match self.theorem {
            ChernTheorem::LocallyFree => None,
            ChernTheorem::ZeroDimensionalNonFreeLocus => Some(self.chern.l() - 1),
        }
    }
}

fn require_essential(a: &Arrangement) -> Result<()> {
    if a.is_essential() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "arrangement has rank {} in dimension {}; essentialize it first",
            a.rank(),
            a.l()
        )))
    }
}

/// `c_t(Ω^1(PA)(1))` computed as `π(PA, t) + N(PA) t^{l-1}`.
///
/// With `N(PA) = 0` every localization at a point of `P^{l-1}` is
/// additionally certified free by Saito's criterion. With `N(PA) > 0`
/// the local computations have checked that the non-free locus is
/// zero-dimensional; local tameness holds automatically only for `l ≤ 4`,
/// so larger ambient dimensions are rejected.
pub fn chern_of_log_forms(a: &Arrangement, cfg: &LogConfig) -> Result<LogFormsChern> {
    require_essential(a)?;
    let l = a.l();
    let lattice = IntersectionLattice::build(a);
    let pi = poincare_proj(&lattice.poincare())?;
    let n = n_projective(a, cfg)?;
    let mut hypotheses = vec![HypothesisCheck {
        name: "zero-dimensional non-free locus".into(),
        passed: true,
        detail: format!(
            "proper localizations of rank at least 3 inside the {} point localizations are free",
            n.flats_examined
        ),
    }];
    let theorem = if n.value == 0 {
        let mut certified = 0;
        for x in lattice.flats(l - 1) {
            let loc = a.localization(x)?.essentialize();
            if loc.l() < 3 {
                continue;
            }
            let verdict = is_free_saito(&loc, cfg.freeness_cap(&loc))?;
            if !verdict.free {
                return Err(Error::Hypothesis(format!(
                    "N vanishes but the localization at {:?} is not free",
                    x.hyperplanes()
                )));
            }
            certified += 1;
        }
        hypotheses.push(HypothesisCheck {
            name: "locally free".into(),
            passed: true,
            detail: format!("{certified} point localizations of rank at least 3 certified free"),
        });
        ChernTheorem::LocallyFree
    } else {
        if l > 4 {
            return Err(Error::Hypothesis(format!(
                "local tameness is not certified in dimension {l}"
            )));
        }
        hypotheses.push(HypothesisCheck {
            name: "locally tame".into(),
            passed: true,
            detail: "automatic in projective dimension at most 3".into(),
        });
        ChernTheorem::ZeroDimensionalNonFreeLocus
    };
    let mut coeffs = pi.coeffs().to_vec();
    coeffs.resize(l, 0);
    coeffs[l - 1] += n.value;
    Ok(LogFormsChern {
        chern: ChernPoly::new(l, &coeffs),
        poincare_proj: pi.coeffs().to_vec(),
        n,
        theorem,
        theorem_name: theorem.name().into(),
        hypotheses,
    })
}

/// The Chern polynomial of `Ω^1(PA)(1)` recovered from the Hilbert series
/// of the relative forms, assuming a free resolution of length one.
#[derive(Clone, Debug, Serialize)]
pub struct TwistRoute {
    pub numerator: IntLaurent,
    /// Generator degrees of the two free modules.
    pub generators: TwistList,
    pub relations: TwistList,
    pub chern: ChernPoly,
}

pub fn chern_via_twists(a: &Arrangement, cfg: &LogConfig) -> Result<TwistRoute> {
    require_essential(a)?;
    let l = a.l();
    let ctx = LogContext::new(a);
    let config = SeriesConfig::for_arrangement(a.n(), l).with_cap_span(cfg.degree_cap);
    let numerator = ctx.hilbert_series(ModuleKind::RelativeForms(1), config)?.numerator;
    let (generators, relations) = twist_lists(&numerator, l - 1)?;
    let chern = chern_from_twists(&generators.chern_roots(1), &relations.chern_roots(1), l)?;
    Ok(TwistRoute {
        numerator,
        generators,
        relations,
        chern,
    })
}

/// One line of a consistency report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyEntry {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub entries: Vec<ConsistencyEntry>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }
}

/// Compares `c` with the coefficients `b_i` of `π(PA, t)`: they must agree
/// for `i ≤ min(k, l-1)` when the non-free locus has codimension `> k`,
/// and for `l = 4` the congruence `c_1 c_2 ≡ c_3 (mod 2)` must hold, i.e.
/// `N ≡ b_1 b_2 + b_3`.
pub fn consistency_checks(a: &Arrangement, c: &ChernPoly, nonfree_codim: Option<usize>) -> ConsistencyReport {
    let l = a.l();
    let b: IntPoly = poincare_proj(&IntersectionLattice::build(a).poincare()).unwrap_or_else(|_| IntPoly::zero());
    let k = nonfree_codim.map_or(l - 1, |codim| codim.saturating_sub(1)).min(l - 1);
    let mut entries: Vec<ConsistencyEntry> = (0..=k)
        .map(|i| ConsistencyEntry {
            check: format!("c_{i} = b_{i}"),
            passed: c.coeff(i) == b.coeff(i),
            detail: format!("c_{i} = {}, b_{i} = {}", c.coeff(i), b.coeff(i)),
        })
        .collect();
    if l == 4 {
        let (b1, b2, b3) = (b.coeff(1), b.coeff(2), b.coeff(3));
        let n = c.coeff(3) - b3;
        entries.push(ConsistencyEntry {
            check: "N ≡ b_1 b_2 + b_3 (mod 2)".into(),
            passed: (n - b1 * b2 - b3).rem_euclid(2) == 0,
            detail: format!("N = {n}, b_1 b_2 + b_3 = {}", b1 * b2 + b3),
        });
    }
    ConsistencyReport { entries }
}
