//! Hilbert series numerators reconstructed from graded dimensions.

use rayon::prelude::*;
use serde::Serialize;

use super::pieces::{LogContext, ModuleKind};
use crate::error::{Error, Result};
use crate::exact::LaurentPoly;
use crate::IntLaurent;

/// Dimensions of consecutive graded pieces starting at `d_min`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    pub module: String,
    pub d_min: i64,
    pub dims: Vec<usize>,
}

impl GradedDims {
    pub fn d_max(&self) -> i64 {
        self.d_min + self.dims.len() as i64 - 1
    }

    pub fn get(&self, d: i64) -> Option<usize> {
        if d < self.d_min {
            return Some(0);
        }
        self.dims.get((d - self.d_min) as usize).copied()
    }
}

/// `numerator / (1 - t)^l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub numerator: IntLaurent,
    pub l: usize,
    pub dims: GradedDims,
}

impl HilbertSeries {
    /// Coefficient of `t^d` in the expanded series.
    pub fn coefficient(&self, d: i64) -> i64 {
        self.numerator
            .expand_over_one_minus_t_pow(self.l as u32, d, d)
            .pop()
            .expect("one value")
    }
}

/// Degree window and stabilization rule for series reconstruction.
#[derive(Clone, Copy, Debug)]
pub struct SeriesConfig {
    /// Number of trailing zero numerator coefficients required.
    pub window: usize,
    /// Degrees computed first, counted from the lowest degree.
    pub initial_span: i64,
    /// Largest degree ever computed, counted from the lowest degree.
    pub cap_span: i64,
}

impl SeriesConfig {
    pub fn for_arrangement(n: usize, l: usize) -> Self {
        let nl = (n + l) as i64;
        SeriesConfig {
            window: l + 2,
            initial_span: nl + 4,
            cap_span: 3 * nl,
        }
    }

    pub fn with_cap_span(mut self, cap_span: Option<i64>) -> Self {
        if let Some(c) = cap_span {
            self.cap_span = c;
            self.initial_span = self.initial_span.min(c);
        }
        self
    }
}

/// Reconstructs a Hilbert series from a dimension oracle: the numerator
/// `(1-t)^l Σ dims(d) t^d` is accepted once its top `window` coefficients
/// vanish. Degrees are evaluated in parallel.
pub fn hilbert_series<F>(module: &str, dims: F, l: usize, d_min: i64, config: SeriesConfig) -> Result<HilbertSeries>
where
    F: Fn(i64) -> Result<usize> + Sync,
{
    let mut values: Vec<usize> = Vec::new();
    let mut d_max = d_min + config.initial_span;
    let cap = d_min + config.cap_span;
    let factor: IntLaurent = LaurentPoly::one_minus_t_pow(l as u32);
    loop {
        let start = d_min + values.len() as i64;
        let fresh: Vec<usize> = (start..=d_max)
            .into_par_iter()
            .map(&dims)
            .collect::<Result<Vec<_>>>()?;
        values.extend(fresh);
        let series = LaurentPoly::from_terms(
            values
                .iter()
                .enumerate()
                .map(|(i, &v)| (d_min + i as i64, v as i64)),
        );
        let full = &series * &factor;
        // coefficients above d_max are artifacts of truncation
        let numerator = LaurentPoly::from_terms(full.terms().filter(|(e, _)| *e <= d_max).map(|(e, c)| (e, *c)));
        let top_zero = (0..config.window as i64).all(|i| numerator.coeff(d_max - i) == 0);
        if top_zero {
            return Ok(HilbertSeries {
                numerator,
                l,
                dims: GradedDims {
                    module: module.to_string(),
                    d_min,
                    dims: values,
                },
            });
        }
        if d_max >= cap {
            return Err(Error::NoStabilization {
                cap,
                partial: format!("{numerator:?}"),
            });
        }
        d_max = (d_max + config.window as i64).min(cap);
    }
}

impl LogContext {
    /// Hilbert series of one of the logarithmic modules.
    pub fn hilbert_series(&self, kind: ModuleKind, config: SeriesConfig) -> Result<HilbertSeries> {
        hilbert_series(
            &kind.name(),
            |d| self.dim(kind, d),
            self.l(),
            kind.min_degree(self.n()),
            config,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Arrangement;

    fn boolean(l: usize) -> Arrangement {
        let rows: Vec<Vec<i64>> = (0..l)
            .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
            .collect();
        Arrangement::from_integer_rows(l, &rows).unwrap()
    }

    #[test]
    fn boolean_numerators() {
        let a = boolean(2);
        let ctx = LogContext::new(&a);
        let cfg = SeriesConfig::for_arrangement(2, 2);
        let h = ctx.hilbert_series(ModuleKind::Derivations, cfg).unwrap();
        assert_eq!(h.numerator, LaurentPoly::monomial(0, 2));
        let b = boolean(3);
        let h = LogContext::new(&b)
            .hilbert_series(ModuleKind::Forms(1), SeriesConfig::for_arrangement(3, 3))
            .unwrap();
        assert_eq!(h.numerator, LaurentPoly::monomial(0, 3));
        assert_eq!(h.coefficient(1), 9);
    }

    #[test]
    fn shifted_rank_one_module() {
        // free module of rank one generated in degree -2
        let dims = |d: i64| Ok(usize::from(d >= -2));
        let h = hilbert_series("R(2)", dims, 1, -2, SeriesConfig { window: 3, initial_span: 4, cap_span: 20 }).unwrap();
        assert_eq!(h.numerator, LaurentPoly::monomial(-2, 1));
    }

    #[test]
    fn runaway_growth_fails_loudly() {
        let dims = |d: i64| Ok((d * d) as usize);
        let err = hilbert_series("bad", dims, 1, 0, SeriesConfig { window: 2, initial_span: 3, cap_span: 9 }).unwrap_err();
        assert!(matches!(err, Error::NoStabilization { cap: 9, .. }), "{err}");
    }
}
