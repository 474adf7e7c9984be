//! The critical ideal of a master function and the length of its
//! projective critical scheme.

use rayon::prelude::*;
use serde::Serialize;

use super::weight::Weight;
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exact::{monomial_count, monomials_of_degree, Matrix, MonomialBasis};
use crate::logmod::{GeneratorSearch, LogConfig, LogContext, ModuleKind};
use crate::{QPoly, Rational};

/// `⟨ω_λ, δ⟩ = Σ_H λ_H δ(α_H) / α_H`.
pub fn pairing(ctx: &LogContext, weight: &Weight, delta: &crate::logmod::Element) -> Result<QPoly> {
    let mut acc = QPoly::zero(ctx.l());
    for (h, lambda) in weight.0.iter().enumerate() {
        if num_traits::Zero::is_zero(lambda) {
            continue;
        }
        let q = ctx.apply_derivation(delta, h).div_exact_linear(&ctx.forms()[h])?;
        acc = &acc + &q.scale(lambda);
    }
    Ok(acc)
}

/// Generators of the critical ideal and the Hilbert function of its
/// quotient ring.
#[derive(Clone, Debug, Serialize)]
pub struct CriticalIdealData {
    pub l: usize,
    pub weight: Weight,
    /// Pairings of `ω_λ` with the minimal generators of `D(A)`, zero ones
    /// dropped.
    #[serde(skip)]
    pub generators: Vec<QPoly>,
    pub generator_degrees: Vec<i64>,
    /// Highest derivation degree searched for generators of `D(A)`.
    pub derivation_degree_cap: i64,
    /// `dim (R/I)_d` for `d = 0, 1, ...`.
    pub quotient_dims: Vec<usize>,
}

impl CriticalIdealData {
    /// Number of equal trailing values required to call the Hilbert
    /// function stable.
    pub fn window(&self) -> usize {
        self.l + 2
    }

    /// The stable value, if the last `l + 2` computed values agree and lie
    /// above every generator degree.
    pub fn stable_value(&self) -> Option<usize> {
        let w = self.window();
        let dims = &self.quotient_dims;
        if dims.len() < w {
            return None;
        }
        let top = self.generator_degrees.iter().copied().max().unwrap_or(0);
        let first = dims.len() - w;
        if (first as i64) <= top {
            return None;
        }
        let tail = &dims[first..];
        tail.iter().all(|&v| v == tail[0]).then_some(tail[0])
    }
}

/// `dim (R/I)_d` where `I` is spanned in degree `d` by monomial multiples
/// of the generators.
fn quotient_dim(l: usize, gens: &[QPoly], degrees: &[i64], d: i64) -> usize {
    let total = monomial_count(l, d);
    let basis = MonomialBasis::new(l, d);
    let rows: Vec<Vec<Rational>> = gens
        .iter()
        .zip(degrees)
        .filter(|(_, &deg)| deg <= d)
        .flat_map(|(g, &deg)| {
            monomials_of_degree(l, (d - deg) as u32)
                .into_iter()
                .map(|m| basis.coords(&g.mul_monomial(&m)))
                .collect::<Vec<_>>()
        })
        .collect();
    if rows.is_empty() {
        return total;
    }
    total - Matrix::from_rows(total, rows).rank()
}

fn pairings(ctx: &LogContext, weight: &Weight, top: i64) -> Result<(Vec<QPoly>, Vec<i64>)> {
    let mut search = GeneratorSearch::new(ctx, ModuleKind::Derivations);
    search.run_through(top)?;
    let mut gens = Vec::new();
    let mut degrees = Vec::new();
    for delta in search.generators() {
        let p = pairing(ctx, weight, delta)?;
        if !p.is_zero() {
            degrees.push(delta.degree);
            gens.push(p);
        }
    }
    Ok((gens, degrees))
}

/// The critical ideal of `λ`, with its quotient Hilbert function computed
/// until it is constant over `l + 2` consecutive degrees above the
/// generator degrees. When it does not settle, generators of `D(A)` of
/// higher degree are added before giving up.
pub fn critical_ideal(a: &Arrangement, weight: &Weight, cfg: &LogConfig) -> Result<CriticalIdealData> {
    weight.check_projective(a.n())?;
    let ctx = LogContext::new(a);
    let l = a.l();
    let cap = cfg.freeness_cap(a);
    let mut top = (a.n() as i64 - l as i64).max(1).min(cap);
    loop {
        let (gens, degrees) = pairings(&ctx, weight, top)?;
        let mut data = CriticalIdealData {
            l,
            weight: weight.clone(),
            generator_degrees: degrees.clone(),
            generators: gens,
            derivation_degree_cap: top,
            quotient_dims: Vec::new(),
        };
        let last = top + 2 * l as i64 + 4;
        let mut next = 0i64;
        while next <= last {
            let batch: Vec<i64> = (next..(next + l as i64).min(last + 1)).collect();
            let dims: Vec<usize> = batch
                .par_iter()
                .map(|&d| quotient_dim(l, &data.generators, &degrees, d))
                .collect();
            next += batch.len() as i64;
            data.quotient_dims.extend(dims);
            if data.stable_value().is_some() {
                return Ok(data);
            }
        }
        if top >= cap {
            return Ok(data);
        }
        top = (top + l as i64).min(cap);
    }
}

/// The stable value of `dim (R/I)_d`: the length of the critical scheme.
pub fn critical_degree(data: &CriticalIdealData) -> Result<usize> {
    data.stable_value().ok_or_else(|| {
        Error::NotStabilized(format!(
            "quotient dimensions {:?} do not settle with derivations through degree {}: \
             λ not generic or hypotheses fail",
            data.quotient_dims, data.derivation_degree_cap
        ))
    })
}

/// Critical degrees for several random weights, resampling with a wider
/// range after a failure.
#[derive(Clone, Debug, Serialize)]
pub struct CriticalSamples {
    pub degrees: Vec<usize>,
    pub weights: Vec<Weight>,
    /// Weights rejected because their Hilbert function did not settle.
    pub rejected: usize,
}

impl CriticalSamples {
    pub fn agreed(&self) -> Option<usize> {
        let first = *self.degrees.first()?;
        self.degrees.iter().all(|&d| d == first).then_some(first)
    }
}

pub fn sample_critical_degrees(a: &Arrangement, samples: usize, seed: u64, cfg: &LogConfig) -> Result<CriticalSamples> {
    const MAX_REJECTIONS: usize = 8;
    let mut rng = Weight::rng(seed);
    let mut bound = 2 * a.n() as i64;
    let mut out = CriticalSamples {
        degrees: Vec::new(),
        weights: Vec::new(),
        rejected: 0,
    };
    while out.degrees.len() < samples {
        let batch: Vec<Weight> = (out.degrees.len()..samples)
            .map(|_| Weight::random(a.n(), bound, &mut rng))
            .collect();
        let results: Vec<Result<usize>> = batch
            .par_iter()
            .map(|w| critical_ideal(a, w, cfg).and_then(|data| critical_degree(&data)))
            .collect();
        for (w, r) in batch.into_iter().zip(results) {
            match r {
                Ok(d) => {
                    out.weights.push(w);
                    out.degrees.push(d);
                }
                Err(Error::NotStabilized(_)) => out.rejected += 1,
                Err(e) => return Err(e),
            }
        }
        if out.rejected > MAX_REJECTIONS {
            return Err(Error::NotStabilized(format!(
                "{} weights failed to give a stable critical degree",
                out.rejected
            )));
        }
        bound += a.n() as i64;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn euler_pairs_to_the_total_weight() {
        let a = corpus::generic(4, 3);
        let ctx = LogContext::new(&a);
        let w = Weight::from_integers(&[1, 2, 3, 4]);
        let p = pairing(&ctx, &w, &ctx.euler()).unwrap();
        assert_eq!(p, QPoly::constant(3, Rational::from_integer(10.into())));
        let w = Weight::from_integers(&[1, 2, 3, -6]);
        assert!(pairing(&ctx, &w, &ctx.euler()).unwrap().is_zero());
    }

    #[test]
    fn boolean_plane_has_empty_critical_scheme() {
        let a = corpus::boolean(2);
        let data = critical_ideal(&a, &Weight::from_integers(&[1, -1]), &LogConfig::default()).unwrap();
        assert!(data.quotient_dims.iter().all(|&d| d == 0));
        assert_eq!(critical_degree(&data).unwrap(), 0);
    }

    #[test]
    fn four_generic_planes_have_one_critical_point() {
        let a = corpus::generic(4, 3);
        let s = sample_critical_degrees(&a, 3, 7, &LogConfig::default()).unwrap();
        assert_eq!(s.agreed(), Some(1));
    }

    #[test]
    fn weight_preconditions() {
        let a = corpus::boolean(2);
        let cfg = LogConfig::default();
        assert!(matches!(critical_ideal(&a, &Weight::from_integers(&[0, 0]), &cfg), Err(Error::Weight(_))));
        assert!(matches!(critical_ideal(&a, &Weight::from_integers(&[1, 1]), &cfg), Err(Error::Weight(_))));
    }
}
