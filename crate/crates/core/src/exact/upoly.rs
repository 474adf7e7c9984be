//! Dense univariate polynomials, lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Field, Ring};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> UniPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn truncate(&self, len: usize) -> Self {
        Self::new(self.coeffs.iter().take(len).cloned().collect())
    }

    /// `(1 + x)^k`.
    pub fn one_plus_x_pow(k: usize) -> Self {
        let base = Self::from_i64s(&[1, 1]);
        (0..k).fold(Self::one(), |acc, _| &acc * &base)
    }

    /// Exact quotient by a divisor whose leading coefficient is `±1`, which
    /// keeps the computation inside any ring.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let lead = divisor
            .coeffs
            .last()
            .ok_or_else(|| Error::InexactDivision("division by zero polynomial".into()))?
            .clone();
        let sign = if lead.is_one() {
            T::one()
        } else if (-lead.clone()).is_one() {
            -T::one()
        } else {
            return Err(Error::InexactDivision(format!(
                "leading coefficient {lead:?} is not a unit"
            )));
        };
        self.long_division(divisor, |c| c * sign.clone())
    }

    fn long_division(&self, divisor: &Self, div_lead: impl Fn(T) -> T) -> Result<Self> {
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(Error::InexactDivision(format!("{self:?} by {divisor:?}")))
            };
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = div_lead(rem[k + dd].clone());
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("{self:?} by {divisor:?}")));
        }
        Ok(Self::new(quot))
    }
}

impl<T: Field> UniPoly<T> {
    /// Exact quotient over a field.
    pub fn div_exact_field(&self, divisor: &Self) -> Result<Self> {
        let lead = divisor
            .coeffs
            .last()
            .ok_or_else(|| Error::InexactDivision("division by zero polynomial".into()))?
            .inv();
        self.long_division(divisor, |c| c * lead.clone())
    }
}

impl<T: Ring> fmt::Debug for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

impl<T: Ring> Add for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn add(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Ring> Sub for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn sub(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Ring> Mul for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn mul(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }
}

impl<T: Ring> Neg for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn neg(self) -> UniPoly<T> {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divide_by_one_plus_t() {
        let cube = UniPoly::<i64>::one_plus_x_pow(3);
        assert_eq!(cube.coeffs(), &[1, 3, 3, 1]);
        let q = cube.div_exact(&UniPoly::from_i64s(&[1, 1])).unwrap();
        assert_eq!(q, UniPoly::one_plus_x_pow(2));
        let generic = UniPoly::<i64>::from_i64s(&[1, 4, 6, 3]);
        assert_eq!(
            generic.div_exact(&UniPoly::from_i64s(&[1, 1])).unwrap().coeffs(),
            &[1, 3, 3]
        );
        assert!(UniPoly::<i64>::from_i64s(&[1, 2])
            .div_exact(&UniPoly::from_i64s(&[1, 1]))
            .is_err());
    }

    #[test]
    fn evaluation() {
        let p = UniPoly::<i64>::from_i64s(&[1, 3, 3]);
        assert_eq!(p.eval(&-1), 1);
        assert_eq!(p.eval(&2), 19);
    }
}
