//! Minimal homogeneous generators, extracted degree by degree, and Saito's
//! freeness criterion.

use num_traits::{One, Zero};
use serde::Serialize;

use super::pieces::{Element, LogContext, ModuleKind};
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exact::{monomials_of_degree, RowSpace};
use crate::{QPoly, Rational};

/// Walks the degrees of a module upward, keeping a minimal generating set
/// of everything seen so far.
pub struct GeneratorSearch<'a> {
    ctx: &'a LogContext,
    kind: ModuleKind,
    next_degree: i64,
    generators: Vec<Element>,
}

impl<'a> GeneratorSearch<'a> {
    pub fn new(ctx: &'a LogContext, kind: ModuleKind) -> Self {
        GeneratorSearch {
            ctx,
            kind,
            next_degree: kind.min_degree(ctx.n()),
            generators: Vec::new(),
        }
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn into_generators(self) -> Vec<Element> {
        self.generators
    }

    /// The next degree to be processed.
    pub fn next_degree(&self) -> i64 {
        self.next_degree
    }

    /// Processes one more degree and returns how many generators it added.
    pub fn step(&mut self) -> Result<usize> {
        let d = self.next_degree;
        self.next_degree += 1;
        let piece = self.ctx.piece(self.kind, d)?;
        if piece.elements.is_empty() {
            return Ok(0);
        }
        let cols = piece.elements[0].polys.len() * piece.basis.len();
        let mut span = RowSpace::<Rational>::new(cols);
        for g in &self.generators {
            let shift = d - g.degree;
            if shift < 0 {
                continue;
            }
            for m in monomials_of_degree(self.ctx.l(), shift as u32) {
                span.insert(g.mul_monomial(&m).coords(&piece.basis));
                if span.dim() == piece.dim() {
                    return Ok(0);
                }
            }
        }
        let mut added = 0;
        for e in piece.elements {
            if span.insert(e.coords(&piece.basis)) {
                self.generators.push(e);
                added += 1;
            }
        }
        Ok(added)
    }

    /// Processes all degrees up to and including `d`.
    pub fn run_through(&mut self, d: i64) -> Result<()> {
        while self.next_degree <= d {
            self.step()?;
        }
        Ok(())
    }
}

/// Outcome of the freeness test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Freeness {
    pub free: bool,
    /// Polynomial degrees `d_i + 1` of a basis when free.
    pub exponents: Vec<i64>,
    /// Degrees of the minimal generators found before deciding.
    pub generator_degrees: Vec<i64>,
    pub evidence: String,
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
pub fn poly_determinant(m: &[Vec<QPoly>]) -> QPoly {
    let k = m.len();
    let nvars = m[0][0].nvars();
    if k == 1 {
        return m[0][0].clone();
    }
    let mut acc = QPoly::zero(nvars);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<QPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = entry * &poly_determinant(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Whether `p` is a nonzero constant multiple of `f`.
fn is_scalar_multiple(p: &QPoly, f: &QPoly) -> bool {
    let (Some((mp, cp)), Some((mf, cf))) = (p.terms().next_back(), f.terms().next_back()) else {
        return false;
    };
    if mp != mf || cp.is_zero() {
        return false;
    }
    &f.scale(&(cp / cf)) == p
}

/// Saito's criterion: extract minimal generators of `D(A)` degree by
/// degree; more than `l` of them means not free, `l` of them whose
/// coefficient determinant is a nonzero multiple of the defining polynomial
/// means free. `cap` bounds the degrees searched.
pub fn is_free_saito(a: &Arrangement, cap: i64) -> Result<Freeness> {
    let ctx = LogContext::new(a);
    let l = a.l();
    let f = ctx
        .forms()
        .iter()
        .fold(QPoly::constant(l, Rational::one()), |acc, form| &acc * &QPoly::linear_form(form));
    let mut search = GeneratorSearch::new(&ctx, ModuleKind::Derivations);
    while search.next_degree() <= cap {
        search.step()?;
        let gens = search.generators();
        let degrees: Vec<i64> = gens.iter().map(|g| g.degree).collect();
        if gens.len() > l {
            return Ok(Freeness {
                free: false,
                exponents: Vec::new(),
                evidence: format!(
                    "{} minimal generators in degrees {:?} exceed the rank {l}",
                    gens.len(),
                    degrees
                ),
                generator_degrees: degrees,
            });
        }
        if gens.len() == l {
            let sum: i64 = degrees.iter().map(|d| d + 1).sum();
            if sum == a.n() as i64 {
                let m: Vec<Vec<QPoly>> = gens.iter().map(|g| g.polys.clone()).collect();
                let det = poly_determinant(&m);
                if is_scalar_multiple(&det, &f) {
                    let mut exponents: Vec<i64> = degrees.iter().map(|d| d + 1).collect();
                    exponents.sort_unstable();
                    return Ok(Freeness {
                        free: true,
                        exponents,
                        evidence: "coefficient determinant is a nonzero multiple of the defining polynomial".into(),
                        generator_degrees: degrees,
                    });
                }
            }
        }
    }
    Err(Error::GeneratorCap(cap))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(l: usize, rows: &[&[i64]]) -> Arrangement {
        Arrangement::from_integer_rows(l, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn boolean_is_free() {
        let r = is_free_saito(&arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 10).unwrap();
        assert!(r.free);
        assert_eq!(r.exponents, vec![1, 1, 1]);
    }

    #[test]
    fn generic_planes_are_not_free() {
        let r = is_free_saito(&arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]), 10).unwrap();
        assert!(!r.free);
        assert!(r.generator_degrees.len() > 3);
    }

    #[test]
    fn cap_is_reported_distinctly() {
        let err = is_free_saito(&arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]), 0).unwrap_err();
        assert!(matches!(err, Error::GeneratorCap(0)));
    }

    #[test]
    fn determinant_of_diagonal() {
        let x = QPoly::var(2, 0);
        let y = QPoly::var(2, 1);
        let z = QPoly::zero(2);
        let det = poly_determinant(&[vec![x.clone(), z.clone()], vec![z, y.clone()]]);
        assert_eq!(det, &x * &y);
    }
}
