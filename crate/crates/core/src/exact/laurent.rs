//! Laurent polynomials in one variable, used for Hilbert series numerators.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Ring;

#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LaurentPoly<T: Ord = i64> {
    terms: BTreeMap<i64, T>,
}

impl<T: Ring + Ord> LaurentPoly<T> {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `c * t^e`.
    pub fn monomial(e: i64, c: T) -> Self {
        Self::from_terms([(e, c)])
    }

    fn add_term(&mut self, e: i64, c: T) {
        if c.is_zero() {
            return;
        }
        let s = self.terms.remove(&e).unwrap_or_else(T::zero) + c;
        if !s.is_zero() {
            self.terms.insert(e, s);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> T {
        self.terms.get(&e).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Substitutes `t -> 1/t`.
    pub fn invert(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (-e, c.clone())))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e + k, c.clone())))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (*e, x.clone() * c.clone())))
    }

    pub fn eval_at_one(&self) -> T {
        self.terms.values().fold(T::zero(), |a, c| a + c.clone())
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: u32) -> Self {
        let base = Self::from_terms([(0, T::one()), (1, -T::one())]);
        (0..k).fold(Self::monomial(0, T::one()), |acc, _| &acc * &base)
    }

    /// Exact quotient by `(1 - t)^k`; fails when the quotient is not a
    /// Laurent polynomial.
    pub fn div_one_minus_t_pow(&self, k: u32) -> Result<Self> {
        let mut cur = self.clone();
        for step in 0..k {
            let Some(lo) = cur.min_degree() else {
                return Ok(cur);
            };
            let hi = cur.max_degree().expect("nonzero");
            // p = (1 - t) q  gives q_j = Σ_{i <= j} p_i
            let mut acc = T::zero();
            let mut next = Self::zero();
            for j in lo..=hi {
                acc = acc + cur.coeff(j);
                if j < hi {
                    next.add_term(j, acc.clone());
                }
            }
            if !acc.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "{self:?} by (1-t)^{k}: factor {} does not divide",
                    step + 1
                )));
            }
            cur = next;
        }
        Ok(cur)
    }

    /// Power series coefficients of `self / (1-t)^k` for degrees
    /// `from..=to`.
    pub fn expand_over_one_minus_t_pow(&self, k: u32, from: i64, to: i64) -> Vec<T> {
        (from..=to)
            .map(|d| {
                self.terms
                    .iter()
                    .filter(|(e, _)| **e <= d)
                    .fold(T::zero(), |acc, (e, c)| {
                        acc + c.clone() * T::from_i64(binom_i64((d - e) as u64 + k as u64 - 1, k as u64 - 1))
                    })
            })
            .collect()
    }
}

pub(crate) fn binom_i64(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

impl<T: Ring + Ord> fmt::Debug for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("{c:?}*t^{e}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<T: Ring + Ord> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<T: Ring + Ord> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        self + &(-rhs)
    }
}

impl<T: Ring + Ord> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, -c.clone())))
    }
}

impl<T: Ring + Ord> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}
