//! Twist lists of a length-one free resolution read off a Hilbert
//! numerator.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::IntLaurent;

/// A multiset of generator degrees, one per free summand `R(-a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistList(pub Vec<i64>);

impl TwistList {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Chern roots of the sheafified summands twisted by `O(shift)`: the
    /// summand `R(-a)` becomes `O(shift - a)`.
    pub fn chern_roots(&self, shift: i64) -> Vec<i64> {
        self.0.iter().map(|a| shift - a).collect()
    }
}

/// Splits a numerator `P - Q` into the generator degrees of `F_0`
/// (positive part) and `F_1` (negative part), checking that the ranks
/// differ by `rank`.
pub fn twist_lists(numerator: &IntLaurent, rank: usize) -> Result<(TwistList, TwistList)> {
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    for (e, &c) in numerator.terms() {
        let target = if c > 0 { &mut alpha } else { &mut beta };
        target.extend(std::iter::repeat_n(e, c.unsigned_abs() as usize));
    }
    let got = alpha.len() as i64 - beta.len() as i64;
    if got != rank as i64 {
        return Err(Error::TwistBalance {
            got,
            expected: rank as i64,
        });
    }
    Ok((TwistList(alpha), TwistList(beta)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reading_supports() {
        let (a, b) = twist_lists(&IntLaurent::monomial(0, 3), 3).unwrap();
        assert_eq!(a.0, vec![0, 0, 0]);
        assert!(b.is_empty());
        let p = IntLaurent::from_terms([(1, 2), (3, -1)]);
        let (a, b) = twist_lists(&p, 1).unwrap();
        assert_eq!(a.0, vec![1, 1]);
        assert_eq!(b.0, vec![3]);
    }

    #[test]
    fn imbalance_is_an_error() {
        let p = IntLaurent::from_terms([(1, 2), (3, -1)]);
        assert!(matches!(twist_lists(&p, 2), Err(Error::TwistBalance { got: 1, expected: 2 })));
    }

    #[test]
    fn roots_negate_degrees() {
        assert_eq!(TwistList(vec![-1, 0]).chern_roots(1), vec![2, 1]);
    }
}
