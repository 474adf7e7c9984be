//! Truncated power series in `t` whose coefficients are polynomials in `u`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::upoly::UniPoly;
use crate::scalar::Field;

/// An element of `Q[u][[t]] / (t^order)`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<UniPoly<T>>,
}

impl<T: Field> TruncatedSeries<T> {
    /// Series with the given `t`-coefficients, truncated to `order` terms.
    pub fn new(order: usize, mut coeffs: Vec<UniPoly<T>>) -> Self {
        assert!(order > 0, "truncation order must be positive");
        coeffs.resize(order, UniPoly::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, UniPoly::one())
    }

    /// A series concentrated in `t^0`.
    pub fn constant(order: usize, c: UniPoly<T>) -> Self {
        Self::new(order, vec![c])
    }

    /// Series in `t` alone, `Σ c_k t^k`.
    pub fn from_t_coeffs(order: usize, cs: &[T]) -> Self {
        Self::new(
            order,
            cs.iter().map(|c| UniPoly::constant(c.clone())).collect(),
        )
    }

    /// `exp(a t)` truncated.
    pub fn exp_t(order: usize, a: &T) -> Self {
        let mut cs = Vec::with_capacity(order);
        let mut term = T::one();
        for k in 0..order {
            cs.push(term.clone());
            term = term * a.clone() / T::from_i64(k as i64 + 1);
        }
        Self::from_t_coeffs(order, &cs)
    }

    /// Number of retained `t`-powers, i.e. `d + 1`.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &UniPoly<T> {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[UniPoly<T>] {
        &self.coeffs
    }

    /// Reduces to a lower truncation order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order());
        Self::new(order, self.coeffs[..order].to_vec())
    }

    pub fn scale_u(&self, p: &UniPoly<T>) -> Self {
        Self::new(self.order(), self.coeffs.iter().map(|c| c * p).collect())
    }

    /// Multiplicative inverse; the `t^0` coefficient must be a nonzero
    /// constant.
    pub fn inv(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.degree() != Some(0) {
            return Err(Error::NonUnitConstant);
        }
        self.one_like().try_div(self)
    }

    fn one_like(&self) -> Self {
        Self::one(self.order())
    }

    /// Exact quotient `self / rhs`. Each step divides by the `t^0`
    /// coefficient of `rhs` in `Q[u]`; an inexact step is an error.
    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        assert_eq!(self.order(), rhs.order(), "truncation orders differ");
        let b0 = &rhs.coeffs[0];
        if b0.is_zero() {
            return Err(Error::NonUnitConstant);
        }
        let mut q: Vec<UniPoly<T>> = Vec::with_capacity(self.order());
        for k in 0..self.order() {
            let mut acc = self.coeffs[k].clone();
            for j in 0..k {
                acc = &acc - &(&q[j] * &rhs.coeffs[k - j]);
            }
            q.push(acc.div_exact_field(b0)?);
        }
        Ok(Self::new(self.order(), q))
    }

    /// Substitutes `t -> (1+u) t`.
    pub fn rescale_t_by_one_plus_u(&self) -> Self {
        Self::new(
            self.order(),
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * &UniPoly::one_plus_x_pow(k))
                .collect(),
        )
    }

    /// Divides every coefficient exactly by `(1+u)^n`.
    pub fn div_one_plus_u_pow(&self, n: usize) -> Result<Self> {
        let d = UniPoly::one_plus_x_pow(n);
        let cs = self
            .coeffs
            .iter()
            .map(|c| c.div_exact_field(&d))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(self.order(), cs))
    }

    /// Evaluates the `u`-coefficients at `u = x`, leaving a series in `t`.
    pub fn eval_u(&self, x: &T) -> Vec<T> {
        self.coeffs.iter().map(|c| c.eval(x)).collect()
    }

    /// Coefficient of `u^p` as a polynomial in `t`.
    pub fn u_coeff(&self, p: usize) -> UniPoly<T> {
        UniPoly::new(self.coeffs.iter().map(|c| c.coeff(p)).collect())
    }

    /// Largest `u`-degree among the coefficients.
    pub fn u_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(UniPoly::degree).max()
    }

    /// Whether the `t^k` coefficient has `u`-degree at most `k` for all `k`.
    pub fn in_bounded_subring(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| c.degree().is_none_or(|d| d <= k))
    }
}

impl<T: Field> fmt::Debug for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + O(t^{})", self.coeffs, self.order())
    }
}

impl<T: Field> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn add(self, rhs: &TruncatedSeries<T>) -> TruncatedSeries<T> {
        assert_eq!(self.order(), rhs.order(), "truncation orders differ");
        TruncatedSeries::new(
            self.order(),
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        )
    }
}

impl<T: Field> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn sub(self, rhs: &TruncatedSeries<T>) -> TruncatedSeries<T> {
        assert_eq!(self.order(), rhs.order(), "truncation orders differ");
        TruncatedSeries::new(
            self.order(),
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        )
    }
}

impl<T: Field> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries::new(self.order(), self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<T: Field> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn mul(self, rhs: &TruncatedSeries<T>) -> TruncatedSeries<T> {
        assert_eq!(self.order(), rhs.order(), "truncation orders differ");
        let n = self.order();
        let mut out = vec![UniPoly::zero(); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                out[i + j] = &out[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        TruncatedSeries::new(n, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};
    use num_rational::BigRational;
    use proptest::prelude::*;

    type S = TruncatedSeries<BigRational>;

    fn up(cs: &[i64]) -> UniPoly<BigRational> {
        UniPoly::new(cs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn one_plus_t_times_one_minus_t() {
        let a = S::from_t_coeffs(3, &[q(1), q(1)]);
        let b = S::from_t_coeffs(3, &[q(1), q(-1)]);
        assert_eq!(&a * &b, S::from_t_coeffs(3, &[q(1), q(0), q(-1)]));
    }

    #[test]
    fn inverse_of_one_plus_ut() {
        // 1/(1+ut) = 1 - ut + u^2 t^2 - ...
        let a = S::new(3, vec![up(&[1]), up(&[0, 1])]);
        let expected = S::new(3, vec![up(&[1]), up(&[0, -1]), up(&[0, 0, 1])]);
        assert_eq!(a.inv().unwrap(), expected);
    }

    #[test]
    fn non_unit_constant_rejected() {
        let a = S::new(2, vec![up(&[1, 1])]);
        assert!(matches!(a.inv(), Err(Error::NonUnitConstant)));
        assert!(matches!(S::zero(2).inv(), Err(Error::NonUnitConstant)));
    }

    #[test]
    fn exponential_coefficients() {
        let e = S::exp_t(4, &q(2));
        assert_eq!(e.eval_u(&q(0)), vec![q(1), q(2), q(2), qf(4, 3)]);
    }

    #[test]
    fn bounded_subring_membership() {
        assert!(S::one(3).in_bounded_subring());
        let bad = S::new(3, vec![up(&[1]), up(&[0, 0, 1])]);
        assert!(!bad.in_bounded_subring());
    }

    fn series(order: usize) -> impl Strategy<Value = S> {
        proptest::collection::vec(proptest::collection::vec(-3i64..4, 0..4), order)
            .prop_map(move |cs| S::new(order, cs.iter().map(|c| up(c)).collect()))
    }

    fn unit_series(order: usize) -> impl Strategy<Value = S> {
        (series(order), 1i64..4).prop_map(move |(s, c)| {
            let mut cs = s.coeffs().to_vec();
            cs[0] = up(&[c]);
            S::new(order, cs)
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in series(4), b in series(4), c in series(4)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn truncation_is_a_homomorphism(a in series(5), b in series(5)) {
            prop_assert_eq!((&a * &b).truncate(3), &a.truncate(3) * &b.truncate(3));
            prop_assert_eq!((&a + &b).truncate(2), &a.truncate(2) + &b.truncate(2));
        }

        #[test]
        fn inverse_is_inverse(a in unit_series(4)) {
            let inv = a.inv().unwrap();
            prop_assert_eq!(&a * &inv, S::one(4));
        }
    }
}
