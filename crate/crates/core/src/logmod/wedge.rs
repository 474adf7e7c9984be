//! Cokernel dimensions of the wedge map `⋀^p Ω^1(A) → Ω^p(A)`.

use std::collections::HashMap;

use super::generators::GeneratorSearch;
use super::pieces::{subsets, Element, LogContext, ModuleKind};
use crate::error::{Error, Result};
use crate::exact::{monomials_of_degree, RowSpace};
use crate::{QPoly, Rational};

/// Wedge of a `q`-form numerator with a 1-form numerator.
fn wedge_one(ctx: &LogContext, a: &[QPoly], q: usize, b: &[QPoly]) -> Vec<QPoly> {
    let l = ctx.l();
    let lower: HashMap<Vec<usize>, usize> = subsets(l, q).into_iter().enumerate().map(|(i, s)| (s, i)).collect();
    subsets(l, q + 1)
        .into_iter()
        .map(|big| {
            big.iter().fold(QPoly::zero(l), |acc, &j| {
                let rest: Vec<usize> = big.iter().copied().filter(|&i| i != j).collect();
                // dx_rest ∧ dx_j = (-1)^{#{i in rest : i > j}} dx_big
                let after = rest.iter().filter(|&&i| i > j).count();
                let term = &a[lower[&rest]] * &b[j];
                if after % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                }
            })
        })
        .collect()
}

/// `dim Ω^p_d - dim (image of ⋀^p Ω^1)_d`. The image is spanned by
/// monomial multiples of wedges of minimal generators of `Ω^1`.
pub fn wedge_defect(ctx: &LogContext, p: usize, d: i64) -> Result<usize> {
    if p == 0 || p > ctx.l() {
        return Err(Error::FormDegree { p, l: ctx.l() });
    }
    let target = ctx.piece(ModuleKind::Forms(p), d)?;
    if p == 1 || target.dim() == 0 {
        return Ok(0);
    }
    let lowest = ModuleKind::Forms(1).min_degree(ctx.n());
    let top = d - (p as i64 - 1) * lowest;
    let mut search = GeneratorSearch::new(ctx, ModuleKind::Forms(1));
    search.run_through(top)?;
    let gens = search.into_generators();
    let forms: Vec<Vec<Rational>> = ctx.forms().to_vec();
    let cols = target.elements[0].polys.len() * target.basis.len();
    let mut span = RowSpace::<Rational>::new(cols);

    // increasing index tuples of generators with total degree at most d
    fn rec(
        start: usize,
        left: usize,
        deg: i64,
        d: i64,
        gens: &[Element],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            if deg <= d {
                out.push(cur.clone());
            }
            return;
        }
        for i in start..gens.len() {
            cur.push(i);
            rec(i + 1, left - 1, deg + gens[i].degree, d, gens, cur, out);
            cur.pop();
        }
    }
    let mut tuples = Vec::new();
    rec(0, p, 0, d, &gens, &mut Vec::new(), &mut tuples);

    for t in tuples {
        let mut acc = gens[t[0]].polys.clone();
        for (q, &i) in t.iter().enumerate().skip(1) {
            acc = wedge_one(ctx, &acc, q, &gens[i].polys);
        }
        let mut divisor = Vec::new();
        for _ in 1..p {
            divisor.extend(forms.iter().cloned());
        }
        let numer = acc
            .iter()
            .map(|c| c.div_exact_product(&divisor))
            .collect::<Result<Vec<_>>>()?;
        let degree: i64 = t.iter().map(|&i| gens[i].degree).sum();
        let w = Element {
            kind: ModuleKind::Forms(p),
            degree,
            polys: numer,
        };
        if w.is_zero() {
            continue;
        }
        for m in monomials_of_degree(ctx.l(), (d - degree) as u32) {
            span.insert(w.mul_monomial(&m).coords(&target.basis));
            if span.dim() == target.dim() {
                return Ok(0);
            }
        }
    }
    Ok(target.dim() - span.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Arrangement;

    #[test]
    fn free_arrangement_has_no_defect() {
        let a = Arrangement::from_integer_rows(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let ctx = LogContext::new(&a);
        for p in 1..=3 {
            for d in -1..3 {
                assert_eq!(wedge_defect(&ctx, p, d).unwrap(), 0, "p={p} d={d}");
            }
        }
    }
}
