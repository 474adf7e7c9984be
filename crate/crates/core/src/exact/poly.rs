//! Sparse multivariate polynomials with terms kept in graded lexicographic
//! order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Field, Ring};

/// An exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All monomials of total degree `d` in `nvars` variables, ascending in
/// grlex order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    if nvars == 0 {
        return if d == 0 { vec![Monomial(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; nvars], &mut out);
    out.sort();
    out
}

/// Number of monomials of degree `d` in `nvars` variables.
pub fn monomial_count(nvars: usize, d: i64) -> usize {
    if d < 0 {
        return 0;
    }
    if nvars == 0 {
        return usize::from(d == 0);
    }
    let (n, k) = (d as u128 + nvars as u128 - 1, nvars as u128 - 1);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc as usize
}

/// The monomials of one degree together with their positions; used to turn
/// homogeneous polynomials into coordinate vectors.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, d: i64) -> Self {
        let monomials = if d < 0 {
            Vec::new()
        } else {
            monomials_of_degree(nvars, d as u32)
        };
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        MonomialBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of `p`; panics if `p` has a term outside this degree.
    pub fn coords<T: Ring>(&self, p: &MultiPoly<T>) -> Vec<T> {
        let mut v = vec![T::zero(); self.len()];
        for (m, c) in p.terms() {
            let i = self
                .index_of(m)
                .unwrap_or_else(|| panic!("monomial {m:?} outside basis"));
            v[i] = c.clone();
        }
        v
    }

    pub fn poly<T: Ring>(&self, nvars: usize, coords: &[T]) -> MultiPoly<T> {
        MultiPoly::from_terms(
            nvars,
            self.monomials.iter().cloned().zip(coords.iter().cloned()),
        )
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<T> {
    nvars: usize,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Ring> MultiPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        Self::from_terms(nvars, [(Monomial::one(nvars), c)])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_terms(nvars, [(Monomial::var(nvars, i), T::one())])
    }

    /// The linear form `Σ a_i x_i`.
    pub fn linear_form(a: &[T]) -> Self {
        let n = a.len();
        Self::from_terms(
            n,
            a.iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
    }

    /// Sums repeated monomials and drops zero coefficients.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, T)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), nvars, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.clone() * c.clone()))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.nvars, T::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial(&self, i: usize) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m.0[i] > 0).map(|(m, c)| {
                let mut e = m.0.clone();
                let k = e[i];
                e[i] -= 1;
                (Monomial(e), c.clone() * T::from_i64(k as i64))
            }),
        )
    }

    pub fn eval(&self, point: &[T]) -> T {
        self.terms.iter().fold(T::zero(), |acc, (m, c)| {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc + t
        })
    }

    /// Replaces `x_i` by `value` everywhere.
    pub fn substitute(&self, i: usize, value: &MultiPoly<T>) -> Self {
        let mut powers: Vec<MultiPoly<T>> = vec![Self::constant(self.nvars, T::one())];
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            while powers.len() <= e {
                let next = powers.last().expect("nonempty") * value;
                powers.push(next);
            }
            let mut rest = m.0.clone();
            rest[i] = 0;
            for (k, v) in powers[e].mul_monomial(&Monomial(rest)).terms {
                out.add_term(k, v * c.clone());
            }
        }
        out
    }
}

/// Index of the pivot variable of a linear form: the largest index with a
/// nonzero coefficient.
pub fn pivot_index<T: Ring>(alpha: &[T]) -> Result<usize> {
    alpha
        .iter()
        .rposition(|c| !c.is_zero())
        .ok_or(Error::ZeroLinearForm)
}

/// The value `x_q = -(Σ_{i≠q} α_i x_i)/α_q` of the pivot variable on the
/// hyperplane `α = 0`.
pub fn pivot_substitute<T: Field>(alpha: &[T]) -> Result<(usize, MultiPoly<T>)> {
    let q = pivot_index(alpha)?;
    let inv = alpha[q].inv();
    let n = alpha.len();
    let value = MultiPoly::from_terms(
        n,
        (0..n)
            .filter(|&i| i != q)
            .map(|i| (Monomial::var(n, i), -(alpha[i].clone() * inv.clone()))),
    );
    Ok((q, value))
}

impl<T: Field> MultiPoly<T> {
    /// Canonical representative of `self` modulo the linear form `α`,
    /// obtained by eliminating the pivot variable.
    pub fn reduce_mod_linear(&self, alpha: &[T]) -> Result<Self> {
        let (q, value) = pivot_substitute(alpha)?;
        Ok(self.substitute(q, &value))
    }

    /// Division with remainder by the linear form `α` with respect to its
    /// pivot variable; the remainder does not involve that variable.
    pub fn div_rem_linear(&self, alpha: &[T]) -> Result<(Self, Self)> {
        let q = pivot_index(alpha)?;
        let lead_inv = alpha[q].inv();
        let form = MultiPoly::linear_form(alpha);
        let mut quot = Self::zero(self.nvars);
        let mut rem = self.clone();
        loop {
            let next = rem
                .terms
                .iter()
                .filter(|(m, _)| m.0[q] > 0)
                .max_by_key(|(m, _)| m.0[q])
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = next else { break };
            let mut e = m.0;
            e[q] -= 1;
            let t = MultiPoly::from_terms(self.nvars, [(Monomial(e), c * lead_inv.clone())]);
            rem = &rem - &(&t * &form);
            quot = &quot + &t;
        }
        Ok((quot, rem))
    }

    /// Exact quotient by the linear form `α`.
    pub fn div_exact_linear(&self, alpha: &[T]) -> Result<Self> {
        let (quot, rem) = self.div_rem_linear(alpha)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision(format!(
                "{self:?} by linear form {alpha:?}"
            )))
        }
    }

    /// Exact quotient by a product of linear forms.
    pub fn div_exact_product(&self, forms: &[Vec<T>]) -> Result<Self> {
        forms
            .iter()
            .try_fold(self.clone(), |p, a| p.div_exact_linear(a))
    }
}

impl<T: Ring> fmt::Debug for MultiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("x{i}")
                        } else {
                            format!("x{i}^{e}")
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    format!("{c:?}")
                } else {
                    format!("{c:?}*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<T: Ring> Add for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn add(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<T: Ring> Sub for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn sub(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<T: Ring> Mul for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn mul(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        let mut out = MultiPoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x.clone() * y.clone());
            }
        }
        out
    }
}

impl<T: Ring> Neg for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn neg(self) -> MultiPoly<T> {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type P = MultiPoly<BigRational>;

    fn x(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    #[test]
    fn reduce_xy_mod_y() {
        let p = &x(2, 0) * &x(2, 1);
        assert!(p.reduce_mod_linear(&[q(0), q(1)]).unwrap().is_zero());
    }

    #[test]
    fn reduce_sum_of_squares_mod_x_minus_y() {
        let p = &(&x(2, 0) * &x(2, 0)) + &(&x(2, 1) * &x(2, 1));
        let r = p.reduce_mod_linear(&[q(1), q(-1)]).unwrap();
        assert_eq!(r, (&x(2, 0) * &x(2, 0)).scale(&q(2)));
    }

    #[test]
    fn reduce_constant_is_constant() {
        let one = P::constant(3, q(1));
        assert_eq!(one.reduce_mod_linear(&[q(2), q(0), q(-5)]).unwrap(), one);
    }

    #[test]
    fn zero_form_rejected() {
        let one = P::constant(2, q(1));
        assert!(matches!(
            one.reduce_mod_linear(&[q(0), q(0)]),
            Err(Error::ZeroLinearForm)
        ));
    }

    #[test]
    fn grlex_order_and_counts() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(monomial_count(3, 2), 6);
        assert_eq!(monomial_count(4, 18), 1330);
        assert_eq!(monomial_count(2, -1), 0);
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
        assert!(Monomial::one(3) < ms[0]);
    }

    #[test]
    fn partial_derivative() {
        // d/dx (x^2 y + 3y) = 2xy
        let p = &(&(&x(2, 0) * &x(2, 0)) * &x(2, 1)) + &x(2, 1).scale(&q(3));
        assert_eq!(p.partial(0), (&x(2, 0) * &x(2, 1)).scale(&q(2)));
    }

    fn linear_form() -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-3i64..4, 3).prop_filter("nonzero", |v| v.iter().any(|&c| c != 0))
    }

    fn homogeneous(deg: u32) -> impl Strategy<Value = P> {
        let basis = monomials_of_degree(3, deg);
        proptest::collection::vec(-4i64..5, basis.len()).prop_map(move |cs| {
            P::from_terms(3, basis.iter().cloned().zip(cs.into_iter().map(q)))
        })
    }

    proptest! {
        #[test]
        fn remainder_agrees_with_substitution(p in homogeneous(3), a in linear_form()) {
            let a: Vec<_> = a.into_iter().map(q).collect();
            let (quot, rem) = p.div_rem_linear(&a).unwrap();
            prop_assert_eq!(&rem, &p.reduce_mod_linear(&a).unwrap());
            prop_assert_eq!(&(&quot * &P::linear_form(&a)) + &rem, p);
        }

        #[test]
        fn multiples_reduce_to_zero(p in homogeneous(2), a in linear_form(), b in linear_form()) {
            let a: Vec<_> = a.into_iter().map(q).collect();
            let prod = &p * &P::linear_form(&a);
            prop_assert!(prod.reduce_mod_linear(&a).unwrap().is_zero());
            prop_assert_eq!(prod.div_exact_linear(&a).unwrap(), p.clone());
            // a homogeneous polynomial reduces to zero iff the form divides it
            let b: Vec<_> = b.into_iter().map(q).collect();
            let divisible = p.div_rem_linear(&b).unwrap().1.is_zero();
            prop_assert_eq!(p.reduce_mod_linear(&b).unwrap().is_zero(), divisible);
        }

        #[test]
        fn dense_round_trip(p in homogeneous(4)) {
            let basis = MonomialBasis::new(3, 4);
            prop_assert_eq!(basis.poly(3, &basis.coords(&p)), p);
        }
    }
}
