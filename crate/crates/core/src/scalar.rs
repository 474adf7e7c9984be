//! Scalar traits shared by the polynomial, series and matrix code.
//!
//! Everything in this crate is exact. [`Ring`] is the coefficient bound for
//! polynomials and Laurent polynomials, [`Field`] adds division and picks the
//! elimination routine used by [`Matrix`](crate::exact::Matrix).

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

use crate::exact::matrix::{self, Echelon, Matrix};

/// A commutative ring with identity, usable as a coefficient type.
pub trait Ring: Num + Clone + fmt::Debug + Neg<Output = Self> + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;
}

/// A field. The elimination entry points dispatch through here so that the
/// rational field can use fraction-free integer arithmetic internally.
pub trait Field: Ring {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    fn echelon(m: &Matrix<Self>, reduced: bool) -> Echelon<Self> {
        matrix::gauss_jordan(m, reduced)
    }
}

impl Ring for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Ring for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Field for BigRational {
    fn echelon(m: &Matrix<Self>, reduced: bool) -> Echelon<Self> {
        matrix::fraction_free_echelon(m, reduced)
    }
}

/// Rational from an integer.
pub fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Rational `num/den`.
pub fn qf(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or an integer string into a reduced rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Formats a rational as `"p"` or `"p/q"`.
pub fn format_rational(v: &BigRational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}
