//! Symmetric series in two variables built from lists of Chern roots, and
//! the Lebelt polynomials they define.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::UniPoly;
use crate::scalar::{format_rational, q};
use crate::{QSeries, QUniPoly, Rational};

/// `1 + u e^{a t}` truncated after `t^d`.
fn one_plus_u_exp(a: i64, d: usize) -> QSeries {
    let exp = QSeries::exp_t(d + 1, &q(a));
    let u = UniPoly::monomial(Rational::one(), 1);
    &QSeries::one(d + 1) + &exp.scale_u(&u)
}

/// `F_γ(t, u) = ∏ (1 + u e^{γ_i t})` modulo `t^{d+1}`.
pub fn f_series(gamma: &[i64], d: usize) -> QSeries {
    gamma
        .iter()
        .fold(QSeries::one(d + 1), |acc, &g| &acc * &one_plus_u_exp(g, d))
}

fn rank_difference(alpha: &[i64], beta: &[i64]) -> Result<usize> {
    alpha.len().checked_sub(beta.len()).ok_or_else(|| {
        Error::Precondition(format!(
            "{} roots in the numerator but {} in the denominator",
            alpha.len(),
            beta.len()
        ))
    })
}

/// `C(t, u) = F_α / F_β` modulo `t^{d+1}`. Its `t^k` coefficient is
/// `(1+u)^{r-k}` times a polynomial, so the quotient stays in `Q[u]` only
/// while `k ≤ r`; for `r < d` this returns an inexact-division error.
pub fn c_series(alpha: &[i64], beta: &[i64], d: usize) -> Result<QSeries> {
    let r = rank_difference(alpha, beta)?;
    f_series(alpha, d)
        .try_div(&f_series(beta, d))
        .map_err(|_| {
            Error::InexactDivision(format!(
                "C(t,u) has non-polynomial u-coefficients beyond t^{r}, truncation t^{d} requested"
            ))
        })
}

/// `F_γ((1+u) t, u) / (1+u)^{|γ|}`.
pub fn reparameterized(gamma: &[i64], d: usize) -> Result<QSeries> {
    f_series(gamma, d)
        .rescale_t_by_one_plus_u()
        .div_one_plus_u_pow(gamma.len())
}

/// Whether every `t^k` coefficient has `u`-degree at most `k`.
pub fn s_membership_check(series: &QSeries) -> bool {
    series.in_bounded_subring()
}

/// The polynomials `a_0, ..., a_d` with `C(t,u) = Σ (1+u)^{r-k} a_k(u) t^k`.
/// Valid for every `r ≥ 0`.
pub fn decomposition(alpha: &[i64], beta: &[i64], d: usize) -> Result<Vec<QUniPoly>> {
    rank_difference(alpha, beta)?;
    let num = reparameterized(alpha, d)?;
    let den = reparameterized(beta, d)?;
    Ok(num.try_div(&den)?.coeffs().to_vec())
}

/// The Lebelt polynomials `L^0, ..., L^r`, the `u`-coefficients of
/// `C(t, u)` in `Q[t]/(t^{d+1})[u]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LebeltSet {
    pub d: usize,
    pub r: usize,
    pub polys: Vec<QUniPoly>,
}

impl LebeltSet {
    /// `Σ_p L^p u^p` as a truncated series.
    pub fn reassemble(&self) -> QSeries {
        let coeffs = (0..=self.d)
            .map(|k| UniPoly::new(self.polys.iter().map(|l| l.coeff(k)).collect()))
            .collect();
        QSeries::new(self.d + 1, coeffs)
    }

    /// `Σ_p (-1)^p L^p`.
    pub fn alternating_sum(&self) -> QUniPoly {
        self.polys.iter().enumerate().fold(UniPoly::zero(), |acc, (p, l)| {
            if p % 2 == 0 {
                &acc + l
            } else {
                &acc - l
            }
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LebeltReport {
    pub d: usize,
    pub r: usize,
    /// Coefficients of each `L^p`, as reduced fractions.
    pub polys: Vec<Vec<String>>,
}

impl From<&LebeltSet> for LebeltReport {
    fn from(s: &LebeltSet) -> Self {
        LebeltReport {
            d: s.d,
            r: s.r,
            polys: s
                .polys
                .iter()
                .map(|p| (0..=s.d).map(|k| format_rational(&p.coeff(k))).collect())
                .collect(),
        }
    }
}

pub fn lebelt_polys(alpha: &[i64], beta: &[i64], d: usize) -> Result<LebeltSet> {
    let r = rank_difference(alpha, beta)?;
    if r < d {
        return Err(Error::Precondition(format!(
            "Lebelt polynomials need rank {r} at least the truncation {d}"
        )));
    }
    let c = c_series(alpha, beta, d)?;
    if c.u_degree().is_some_and(|deg| deg > r) {
        return Err(Error::InexactDivision(format!("C(t,u) has u-degree above {r}")));
    }
    Ok(LebeltSet {
        d,
        r,
        polys: (0..=r).map(|p| c.u_coeff(p).truncate(d + 1)).collect(),
    })
}

/// `L^r` and `L^{r-1}` from their closed forms `e^{(|α|-|β|) t}` and
/// `e^{(|α|-|β|) t} (Σ e^{-α_i t} - Σ e^{-β_j t})`, valid when `r = d`.
pub fn top_lebelt_closed_forms(alpha: &[i64], beta: &[i64], d: usize) -> (QUniPoly, QUniPoly) {
    let order = d + 1;
    let as_poly = |s: &QSeries| UniPoly::new(s.coeffs().iter().map(|c| c.coeff(0)).collect());
    let shift: i64 = alpha.iter().sum::<i64>() - beta.iter().sum::<i64>();
    let top = QSeries::exp_t(order, &q(shift));
    let sum = |roots: &[i64]| {
        roots
            .iter()
            .fold(QSeries::zero(order), |acc, &a| &acc + &QSeries::exp_t(order, &q(-a)))
    };
    let next = &top * &(&sum(alpha) - &sum(beta));
    (as_poly(&top), as_poly(&next))
}

/// `c_d = (-1)^d Σ (-1)^p L^p` read at `t^d`, for `r = d`.
pub fn borel_serre_top(alpha: &[i64], beta: &[i64], d: usize) -> Result<Rational> {
    let r = rank_difference(alpha, beta)?;
    if r != d {
        return Err(Error::Precondition(format!(
            "top Chern class formula needs rank {r} equal to dimension {d}"
        )));
    }
    let c = lebelt_polys(alpha, beta, d)?.alternating_sum().coeff(d);
    Ok(if d.is_multiple_of(2) { c } else { -c })
}

/// `(1 - e^{-t})^d` truncated after `t^d`: the Chern character of a
/// reduced point of `P^d`.
pub fn koszul_point_character(d: usize) -> QUniPoly {
    let one_minus = &QSeries::one(d + 1) - &QSeries::exp_t(d + 1, &q(-1));
    let mut acc = QSeries::one(d + 1);
    for _ in 0..d {
        acc = &acc * &one_minus;
    }
    UniPoly::new(acc.coeffs().iter().map(|c| c.coeff(0)).collect())
}

pub(crate) fn is_integral(c: &Rational) -> bool {
    c.denom().is_one() || c.is_zero()
}
