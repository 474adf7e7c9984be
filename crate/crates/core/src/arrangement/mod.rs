//! Central hyperplane arrangements over the rationals.

mod construct;
mod iso;
mod json;
mod lattice;

pub use iso::lattice_isomorphism;
pub use lattice::{beta_invariant, poincare_proj, Flat, IntersectionLattice};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{Matrix, RowSpace};
use crate::scalar::Field;
use crate::{QPoly, Rational};

/// A central simple arrangement: `n` pairwise non-proportional nonzero
/// linear forms on a space of dimension `l`.
#[derive(Clone, Debug, PartialEq)]
pub struct Arrangement {
    l: usize,
    forms: Vec<Vec<Rational>>,
    labels: Vec<String>,
}

impl Arrangement {
    pub fn new(l: usize, forms: Vec<Vec<Rational>>) -> Result<Self> {
        let labels = (0..forms.len()).map(|i| format!("H{i}")).collect();
        Self::with_labels(l, forms, labels)
    }

    pub fn with_labels(l: usize, forms: Vec<Vec<Rational>>, labels: Vec<String>) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidArrangement("ambient dimension must be positive".into()));
        }
        if labels.len() != forms.len() {
            return Err(Error::InvalidArrangement(format!(
                "{} labels for {} hyperplanes",
                labels.len(),
                forms.len()
            )));
        }
        for (i, f) in forms.iter().enumerate() {
            if f.len() != l {
                return Err(Error::InvalidArrangement(format!(
                    "hyperplane {i} has {} coefficients, expected {l}",
                    f.len()
                )));
            }
            if f.iter().all(Zero::is_zero) {
                return Err(Error::InvalidArrangement(format!("hyperplane {i} is zero")));
            }
        }
        let normalized: Vec<_> = forms.iter().map(|f| normalize(f)).collect();
        for i in 0..forms.len() {
            for j in 0..i {
                if normalized[i] == normalized[j] {
                    return Err(Error::InvalidArrangement(format!(
                        "hyperplanes {j} and {i} are proportional"
                    )));
                }
            }
        }
        Ok(Arrangement { l, forms, labels })
    }

    /// Convenience constructor from integer rows.
    pub fn from_integer_rows(l: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            l,
            rows.iter()
                .map(|r| r.iter().map(|&c| Rational::from_integer(c.into())).collect())
                .collect(),
        )
    }

    /// Ambient dimension.
    pub fn l(&self) -> usize {
        self.l
    }

    /// Number of hyperplanes.
    pub fn n(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[Vec<Rational>] {
        &self.forms
    }

    pub fn form(&self, i: usize) -> &[Rational] {
        &self.forms[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.rank_of(&(0..self.n()).collect::<Vec<_>>())
    }

    pub fn rank_of(&self, hyperplanes: &[usize]) -> usize {
        let mut s = RowSpace::new(self.l);
        for &h in hyperplanes {
            s.insert(self.forms[h].clone());
        }
        s.dim()
    }

    pub fn is_essential(&self) -> bool {
        self.rank() == self.l
    }

    /// Forms rescaled to primitive integer vectors with positive leading
    /// entry; they define the same hyperplanes.
    pub fn primitive_forms(&self) -> Vec<Vec<Rational>> {
        self.forms.iter().map(|f| primitive(f)).collect()
    }

    pub fn linear_form(&self, i: usize) -> QPoly {
        QPoly::linear_form(&self.forms[i])
    }

    /// The defining polynomial, the product of all forms.
    pub fn defining_polynomial(&self) -> QPoly {
        (0..self.n()).fold(QPoly::constant(self.l, Rational::one()), |acc, i| {
            &acc * &self.linear_form(i)
        })
    }

    /// Closure of a set of hyperplanes: every hyperplane containing their
    /// common intersection.
    pub fn closure(&self, hyperplanes: &[usize]) -> Vec<usize> {
        let mut s = RowSpace::new(self.l);
        for &h in hyperplanes {
            s.insert(self.forms[h].clone());
        }
        (0..self.n()).filter(|&h| s.contains(&self.forms[h])).collect()
    }

    /// The flat cut out by the given hyperplanes.
    pub fn flat_of(&self, hyperplanes: &[usize]) -> Result<Flat> {
        if let Some(&h) = hyperplanes.iter().find(|&&h| h >= self.n()) {
            return Err(Error::NoSuchHyperplane(h));
        }
        Ok(Flat::new(self, self.closure(hyperplanes)))
    }

    /// The subarrangement of hyperplanes containing the flat.
    pub fn localization(&self, flat: &Flat) -> Result<Arrangement> {
        let hs = flat.hyperplanes();
        if hs.iter().any(|&h| h >= self.n()) || self.closure(hs) != hs {
            return Err(Error::NotAFlat(format!("{hs:?}")));
        }
        Arrangement::with_labels(
            self.l,
            hs.iter().map(|&h| self.forms[h].clone()).collect(),
            hs.iter().map(|&h| self.labels[h].clone()).collect(),
        )
    }

    /// The arrangement induced on hyperplane `h`, in coordinates obtained by
    /// dropping the pivot variable of its form. Proportional images are
    /// merged, keeping the first label.
    pub fn restriction(&self, h: usize) -> Result<Arrangement> {
        if h >= self.n() {
            return Err(Error::NoSuchHyperplane(h));
        }
        if self.l == 1 {
            return Err(Error::InvalidArrangement("restriction of a line arrangement".into()));
        }
        let alpha = &self.forms[h];
        let q = alpha.iter().rposition(|c| !c.is_zero()).expect("nonzero form");
        let inv = alpha[q].inv();
        let mut forms: Vec<Vec<Rational>> = Vec::new();
        let mut labels = Vec::new();
        let mut seen = Vec::new();
        for (k, beta) in self.forms.iter().enumerate() {
            if k == h {
                continue;
            }
            let ratio = &beta[q] * &inv;
            let image: Vec<Rational> = (0..self.l)
                .filter(|&i| i != q)
                .map(|i| &beta[i] - &ratio * &alpha[i])
                .collect();
            if image.iter().all(Zero::is_zero) {
                continue;
            }
            let key = normalize(&image);
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            forms.push(image);
            labels.push(self.labels[k].clone());
        }
        Arrangement::with_labels(self.l - 1, forms, labels)
    }

    /// Rewrites the arrangement on the quotient by the common intersection
    /// of its hyperplanes, so that the result is essential.
    pub fn essentialize(&self) -> Arrangement {
        let m = Matrix::from_rows(self.l, self.forms.clone());
        let pivots = Rational::echelon(&m, true).pivots;
        let forms = self
            .forms
            .iter()
            .map(|f| pivots.iter().map(|&p| f[p].clone()).collect())
            .collect();
        Arrangement::with_labels(pivots.len(), forms, self.labels.clone())
            .expect("essentialization keeps the arrangement simple")
    }

    /// The same hyperplanes in a space with `extra` additional coordinates
    /// on which none of the forms depend.
    pub fn lift(&self, extra: usize) -> Arrangement {
        let forms = self
            .forms
            .iter()
            .map(|f| {
                let mut g = f.clone();
                g.extend(std::iter::repeat_n(Rational::zero(), extra));
                g
            })
            .collect();
        Arrangement::with_labels(self.l + extra, forms, self.labels.clone())
            .expect("lifting keeps the arrangement simple")
    }

    /// Hyperplanes reordered so that new position `i` holds old `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Arrangement> {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (0..self.n()).collect::<Vec<_>>() {
            return Err(Error::Precondition(format!("{perm:?} is not a permutation")));
        }
        Arrangement::with_labels(
            self.l,
            perm.iter().map(|&i| self.forms[i].clone()).collect(),
            perm.iter().map(|&i| self.labels[i].clone()).collect(),
        )
    }

    /// The arrangement in new coordinates `x = M y`, i.e. `α ↦ α M`. `M`
    /// must be invertible.
    pub fn change_coordinates(&self, m: &Matrix<Rational>) -> Result<Arrangement> {
        if m.rows() != self.l || m.cols() != self.l || m.rank() != self.l {
            return Err(Error::Precondition("coordinate change must be invertible".into()));
        }
        let forms = self
            .forms
            .iter()
            .map(|f| m.transpose().mul_vec(f))
            .collect();
        Arrangement::with_labels(self.l, forms, self.labels.clone())
    }

    /// The same arrangement with each form scaled to a primitive integer
    /// vector.
    pub fn primitive(&self) -> Arrangement {
        Arrangement::with_labels(self.l, self.primitive_forms(), self.labels.clone())
            .expect("scaling keeps the arrangement simple")
    }

    /// A copy with one more hyperplane appended.
    pub fn with_hyperplane(&self, form: Vec<Rational>, label: String) -> Result<Arrangement> {
        let mut forms = self.forms.clone();
        let mut labels = self.labels.clone();
        forms.push(form);
        labels.push(label);
        Arrangement::with_labels(self.l, forms, labels)
    }
}

/// Scales a nonzero vector so that its first nonzero entry is 1.
fn normalize(f: &[Rational]) -> Vec<Rational> {
    let lead = f.iter().find(|c| !c.is_zero()).expect("nonzero").clone();
    f.iter().map(|c| c / &lead).collect()
}

fn primitive(f: &[Rational]) -> Vec<Rational> {
    let lcm = f
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let lead_negative = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    ints.into_iter()
        .map(|x| {
            let x = x / &g;
            Rational::from_integer(if lead_negative { -x } else { x })
        })
        .collect()
}
