use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::format_rational;
use crate::Rational;

/// Weights `λ_H`, one per hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn from_integers(values: &[i64]) -> Self {
        Weight(values.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ| = Σ λ_H`.
    pub fn total(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, v| acc + v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Checks `|λ| = 0`, `λ ≠ 0` and one entry per hyperplane.
    pub fn check_projective(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::Weight(format!("{} weights for {n} hyperplanes", self.len())));
        }
        if self.is_zero() {
            return Err(Error::Weight("weight vector is zero".into()));
        }
        if !self.total().is_zero() {
            return Err(Error::Weight(format!("weights sum to {}, not 0", self.total())));
        }
        Ok(())
    }

    /// A random integer weight with entries in `[-bound, bound]` and
    /// total zero; the last entry absorbs the sum.
    pub fn random(n: usize, bound: i64, rng: &mut ChaCha8Rng) -> Self {
        loop {
            let mut v: Vec<i64> = (0..n.saturating_sub(1)).map(|_| rng.gen_range(-bound..=bound)).collect();
            v.push(-v.iter().sum::<i64>());
            let w = Weight::from_integers(&v);
            if !w.is_zero() {
                return w;
            }
        }
    }

    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}
