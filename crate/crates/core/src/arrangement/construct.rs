use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Arrangement, IntersectionLattice};
use crate::error::{Error, Result};
use crate::Rational;

const MAX_ATTEMPTS: usize = 200;

impl Arrangement {
    /// Appends a hyperplane in general position: stacking its form onto any
    /// flat of codimension below `l` raises the rank by one. Coefficients
    /// are random integers from a range that grows with each failed try.
    pub fn add_generic_hyperplane(&self, seed: u64) -> Result<Arrangement> {
        let lattice = IntersectionLattice::build(self);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for attempt in 0..MAX_ATTEMPTS {
            let bound = 3 + 2 * attempt as i64;
            let form: Vec<Rational> = (0..self.l)
                .map(|_| Rational::from_integer(rng.gen_range(-bound..=bound).into()))
                .collect();
            if form.iter().all(Zero::is_zero) {
                continue;
            }
            if self.is_transversal(&lattice, &form) {
                let label = format!("H{}", self.n());
                return self.with_hyperplane(form, label);
            }
        }
        Err(Error::Hypothesis(format!(
            "no generic hyperplane found in {MAX_ATTEMPTS} attempts"
        )))
    }

    /// Whether the form meets every flat of codimension `< l` transversally.
    pub fn is_transversal(&self, lattice: &IntersectionLattice, form: &[Rational]) -> bool {
        (0..=lattice.rank()).all(|c| {
            c >= self.l
                || lattice.flats(c).iter().all(|x| {
                    let mut s = crate::exact::RowSpace::new(self.l);
                    for &h in x.hyperplanes() {
                        s.insert(self.form(h).to_vec());
                    }
                    s.insert(form.to_vec())
                })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::UniPoly;

    #[test]
    fn generic_extension_multiplies_poincare_by_one_plus_t() {
        let a = Arrangement::from_integer_rows(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]])
            .unwrap()
            .lift(1);
        let b = a.add_generic_hyperplane(7).unwrap();
        assert_eq!(b.n(), 4);
        assert_eq!(b.rank(), 3);
        let pa = IntersectionLattice::build(&a).poincare();
        let pb = IntersectionLattice::build(&b).poincare();
        assert_eq!(pb, &pa * &UniPoly::from_i64s(&[1, 1]));
        // old flats keep their hyperplane sets
        let lb = IntersectionLattice::build(&b);
        for (x, _) in IntersectionLattice::build(&a).iter() {
            assert!(lb.find(x.hyperplanes()).is_some());
        }
    }

    #[test]
    fn deterministic_in_seed() {
        let a = Arrangement::from_integer_rows(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(a.add_generic_hyperplane(3).unwrap(), a.add_generic_hyperplane(3).unwrap());
    }
}
