//! Graded pieces of the logarithmic modules as kernels of one linear
//! system per degree.
//!
//! Grading: `deg x_i = deg dx_i = 1`, `deg ∂_i = -1`. A derivation
//! `Σ θ_i ∂_i` with coefficients of degree `k` has degree `k - 1`; a form
//! `η / f` with `η` a `p`-form with coefficients of degree `k` has degree
//! `k + p - n`.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exact::poly::pivot_substitute;
use crate::exact::{Matrix, Monomial, MonomialBasis, MultiPoly};
use crate::{QPoly, Rational};

/// Which graded module a piece belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModuleKind {
    /// Logarithmic derivations `D(A)`.
    Derivations,
    /// Logarithmic `p`-forms `Ω^p(A)`.
    Forms(usize),
    /// Relative logarithmic `p`-forms, the kernel of contraction with the
    /// Euler field.
    RelativeForms(usize),
}

impl ModuleKind {
    /// Degree of the polynomial coefficients of a degree-`d` element.
    pub fn coeff_degree(self, n: usize, d: i64) -> i64 {
        match self {
            ModuleKind::Derivations => d + 1,
            ModuleKind::Forms(p) | ModuleKind::RelativeForms(p) => d + n as i64 - p as i64,
        }
    }

    /// Lowest degree in which the module can be nonzero.
    pub fn min_degree(self, n: usize) -> i64 {
        match self {
            ModuleKind::Derivations => -1,
            ModuleKind::Forms(p) | ModuleKind::RelativeForms(p) => p as i64 - n as i64,
        }
    }

    /// Index sets labelling the components of an element: coordinates
    /// `i` for derivations, increasing `p`-subsets for forms.
    pub fn components(self, l: usize) -> Vec<Vec<usize>> {
        match self {
            ModuleKind::Derivations => (0..l).map(|i| vec![i]).collect(),
            ModuleKind::Forms(p) | ModuleKind::RelativeForms(p) => subsets(l, p),
        }
    }

    pub fn form_degree(self) -> Option<usize> {
        match self {
            ModuleKind::Derivations => None,
            ModuleKind::Forms(p) | ModuleKind::RelativeForms(p) => Some(p),
        }
    }

    pub fn name(self) -> String {
        match self {
            ModuleKind::Derivations => "D".into(),
            ModuleKind::Forms(p) => format!("Omega^{p}"),
            ModuleKind::RelativeForms(p) => format!("Omega0^{p}"),
        }
    }
}

/// All increasing `p`-subsets of `0..l` in lexicographic order.
pub fn subsets(l: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, l: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..l {
            cur.push(i);
            rec(i + 1, l, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= l {
        rec(0, l, p, &mut Vec::new(), &mut out);
    }
    out
}

/// An element of a logarithmic module: one polynomial per component. For
/// forms these are the coefficients of the numerator `η` of `η / f`.
#[derive(Clone, Debug, PartialEq)]
pub struct Element {
    pub kind: ModuleKind,
    pub degree: i64,
    pub polys: Vec<QPoly>,
}

impl Element {
    pub fn mul_monomial(&self, m: &Monomial) -> Element {
        Element {
            kind: self.kind,
            degree: self.degree + m.degree() as i64,
            polys: self.polys.iter().map(|p| p.mul_monomial(m)).collect(),
        }
    }

    pub fn coords(&self, basis: &MonomialBasis) -> Vec<Rational> {
        self.polys.iter().flat_map(|p| basis.coords(p)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.polys.iter().all(MultiPoly::is_zero)
    }
}

/// A graded piece with an explicit basis.
#[derive(Clone, Debug)]
pub struct Piece {
    pub kind: ModuleKind,
    pub degree: i64,
    pub basis: MonomialBasis,
    pub elements: Vec<Element>,
}

impl Piece {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }
}

/// Precomputed data for one arrangement: primitive integral forms and, for
/// each hyperplane, the substitution eliminating its pivot variable.
#[derive(Clone, Debug)]
pub struct LogContext {
    l: usize,
    n: usize,
    forms: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    substitutions: Vec<QPoly>,
    /// The variable `x_i` when the form is a multiple of it.
    coordinate: Vec<Option<usize>>,
    /// The same arrangement in coordinates where `l` independent
    /// hyperplanes are coordinate hyperplanes; used for dimensions only.
    normalized: Option<Box<LogContext>>,
}

/// Columns of a constraint system that survive after the conditions of the
/// coordinate hyperplanes have forced the others to zero.
struct System {
    matrix: Matrix<Rational>,
    basis: MonomialBasis,
    kept: Vec<usize>,
    full_cols: usize,
}

fn single_variable(form: &[Rational]) -> Option<usize> {
    let mut support = form.iter().enumerate().filter(|(_, c)| !c.is_zero());
    let (i, _) = support.next()?;
    support.next().is_none().then_some(i)
}

/// `A` in coordinates `y_j = α_{b_j}` for the first `l` independent forms
/// `b_1, ..., b_l`, or `None` when `A` is not essential.
fn normalized_arrangement(a: &Arrangement) -> Option<Arrangement> {
    let l = a.l();
    let mut chosen: Vec<usize> = Vec::new();
    for h in 0..a.n() {
        let mut trial = chosen.clone();
        trial.push(h);
        if a.rank_of(&trial) == trial.len() {
            chosen = trial;
        }
        if chosen.len() == l {
            break;
        }
    }
    if chosen.len() < l {
        return None;
    }
    // [B | I] reduces to [I | B^{-1}]; α ↦ α B^{-1} sends α_{b_j} to e_j
    let rows: Vec<Vec<Rational>> = chosen
        .iter()
        .enumerate()
        .map(|(j, &h)| {
            let mut row = a.form(h).to_vec();
            row.extend((0..l).map(|k| if k == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let (_, kernel) = Matrix::from_rows(2 * l, rows).rank_and_kernel();
    // kernel vectors (-B^{-1} column k ; e_k) come out in normal form
    let inverse = Matrix::from_rows(
        l,
        (0..l)
            .map(|i| (0..l).map(|k| -kernel[k][i].clone()).collect())
            .collect(),
    );
    a.change_coordinates(&inverse).ok()
}

impl LogContext {
    pub fn new(a: &Arrangement) -> Self {
        let mut ctx = Self::in_given_coordinates(a);
        if ctx.coordinate.iter().flatten().count() < a.l() {
            ctx.normalized = normalized_arrangement(a).map(|b| Box::new(Self::in_given_coordinates(&b)));
        }
        ctx
    }

    fn in_given_coordinates(a: &Arrangement) -> Self {
        let forms = a.primitive_forms();
        let (pivots, substitutions) = forms
            .iter()
            .map(|f| pivot_substitute(f).expect("nonzero form"))
            .unzip();
        let coordinate = forms.iter().map(|f| single_variable(f)).collect();
        LogContext {
            l: a.l(),
            n: a.n(),
            forms,
            pivots,
            substitutions,
            coordinate,
            normalized: None,
        }
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn forms(&self) -> &[Vec<Rational>] {
        &self.forms
    }

    fn check_kind(&self, kind: ModuleKind) -> Result<()> {
        match kind.form_degree() {
            Some(p) if p > self.l => Err(Error::FormDegree { p, l: self.l }),
            _ => Ok(()),
        }
    }

    /// Images of all basis monomials modulo hyperplane `h`.
    fn reduced_basis(&self, h: usize, basis: &MonomialBasis) -> Vec<QPoly> {
        let q = self.pivots[h];
        let value = &self.substitutions[h];
        let mut powers: Vec<QPoly> = vec![QPoly::constant(self.l, Rational::one())];
        basis
            .monomials()
            .iter()
            .map(|m| {
                let e = m.exponents()[q] as usize;
                while powers.len() <= e {
                    let next = powers.last().expect("nonempty") * value;
                    powers.push(next);
                }
                let mut rest = m.exponents().to_vec();
                rest[q] = 0;
                powers[e].mul_monomial(&Monomial::from_exponents(rest))
            })
            .collect()
    }

    /// Whether column `(comp, monomial)` is forced to vanish by a
    /// coordinate hyperplane `x_i`: derivation components `θ_i` and form
    /// components `f_I` with `i ∉ I` must be divisible by `x_i`.
    fn forced_zero(&self, kind: ModuleKind, comp: &[usize], m: &Monomial) -> bool {
        self.coordinate.iter().flatten().any(|&i| {
            m.exponents()[i] == 0
                && match kind {
                    ModuleKind::Derivations => comp[0] == i,
                    _ => !comp.contains(&i),
                }
        })
    }

    /// The linear system whose kernel is the degree-`d` piece. Columns are
    /// indexed by (component, monomial) with the forced zeros removed;
    /// coordinate hyperplanes contribute no rows.
    fn constraint_system(&self, kind: ModuleKind, d: i64) -> Result<System> {
        self.check_kind(kind)?;
        let k = kind.coeff_degree(self.n, d);
        let basis = MonomialBasis::new(self.l, k);
        let comps = kind.components(self.l);
        let nmon = basis.len();
        let full_cols = comps.len() * nmon;
        let kept: Vec<usize> = (0..full_cols)
            .filter(|&c| !self.forced_zero(kind, &comps[c / nmon.max(1)], &basis.monomials()[c % nmon.max(1)]))
            .collect();
        if kept.is_empty() {
            return Ok(System {
                matrix: Matrix::zeros(0, 0),
                basis,
                kept,
                full_cols,
            });
        }
        let mut column = vec![usize::MAX; full_cols];
        for (new, &old) in kept.iter().enumerate() {
            column[old] = new;
        }
        let cols = kept.len();
        let comp_index: HashMap<&[usize], usize> =
            comps.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();

        let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();
        let mut row_of: HashMap<(usize, usize, usize), usize> = HashMap::new();
        let mut push = |key: (usize, usize, usize), col: usize, v: Rational, rows: &mut Vec<Vec<(usize, Rational)>>| {
            let r = *row_of.entry(key).or_insert_with(|| {
                rows.push(Vec::new());
                rows.len() - 1
            });
            rows[r].push((col, v));
        };

        for h in 0..self.n {
            if self.coordinate[h].is_some() {
                continue;
            }
            let alpha = &self.forms[h];
            let q = self.pivots[h];
            let reduced = self.reduced_basis(h, &basis);
            match kind {
                ModuleKind::Derivations => {
                    // Σ_i α_i θ_i ≡ 0 mod α
                    for (i, a) in alpha.iter().enumerate() {
                        if a.is_zero() {
                            continue;
                        }
                        for (mi, red) in reduced.iter().enumerate() {
                            for (m, c) in red.terms() {
                                let row = basis.index_of(m).expect("same degree");
                                push((h, 0, row), i * nmon + mi, a * c, &mut rows);
                            }
                        }
                    }
                }
                ModuleKind::Forms(p) | ModuleKind::RelativeForms(p) => {
                    // dα ∧ η ≡ 0 mod α; only (p+1)-subsets containing the
                    // pivot give independent conditions
                    for (ji, big) in subsets(self.l, p + 1).iter().enumerate() {
                        if !big.contains(&q) {
                            continue;
                        }
                        for (pos, &j) in big.iter().enumerate() {
                            if alpha[j].is_zero() {
                                continue;
                            }
                            let small: Vec<usize> = big.iter().copied().filter(|&i| i != j).collect();
                            let ci = comp_index[small.as_slice()];
                            let coef = if pos % 2 == 0 {
                                alpha[j].clone()
                            } else {
                                -alpha[j].clone()
                            };
                            for (mi, red) in reduced.iter().enumerate() {
                                for (m, c) in red.terms() {
                                    let row = basis.index_of(m).expect("same degree");
                                    push((h, ji, row), ci * nmon + mi, &coef * c, &mut rows);
                                }
                            }
                        }
                    }
                }
            }
        }

        if let ModuleKind::RelativeForms(p) = kind {
            if p > 0 {
                // ι_χ(dx_I) = Σ_s (-1)^s x_{i_s} dx_{I \ i_s}
                let up = MonomialBasis::new(self.l, k + 1);
                let lower: HashMap<Vec<usize>, usize> = subsets(self.l, p - 1)
                    .into_iter()
                    .enumerate()
                    .map(|(i, s)| (s, i))
                    .collect();
                for (ci, comp) in comps.iter().enumerate() {
                    for (s, &i) in comp.iter().enumerate() {
                        let rest: Vec<usize> = comp.iter().copied().filter(|&x| x != i).collect();
                        let ki = lower[&rest];
                        let xi = Monomial::var(self.l, i);
                        let sign = if s % 2 == 0 { Rational::one() } else { -Rational::one() };
                        for (mi, m) in basis.monomials().iter().enumerate() {
                            let row = up.index_of(&m.mul(&xi)).expect("degree k+1");
                            push((self.n + 1, ki, row), ci * nmon + mi, sign.clone(), &mut rows);
                        }
                    }
                }
            }
        }

        let mut m = Matrix::<Rational>::zeros(rows.len(), cols);
        for (r, entries) in rows.into_iter().enumerate() {
            for (c, v) in entries {
                let c = column[c];
                if c == usize::MAX {
                    continue;
                }
                let cur = m.get(r, c).clone();
                m.set(r, c, cur + v);
            }
        }
        Ok(System {
            matrix: m,
            basis,
            kept,
            full_cols,
        })
    }

    /// The full constraint matrix with columns indexed by (component,
    /// monomial), forced-zero columns included as unit rows.
    pub fn constraint_matrix(&self, kind: ModuleKind, d: i64) -> Result<(Matrix<Rational>, MonomialBasis)> {
        let sys = self.constraint_system(kind, d)?;
        let forced: Vec<usize> = {
            let mut keep = vec![false; sys.full_cols];
            for &c in &sys.kept {
                keep[c] = true;
            }
            (0..sys.full_cols).filter(|&c| !keep[c]).collect()
        };
        let mut m = Matrix::<Rational>::zeros(sys.matrix.rows() + forced.len(), sys.full_cols);
        for r in 0..sys.matrix.rows() {
            for (j, &c) in sys.kept.iter().enumerate() {
                m.set(r, c, sys.matrix.get(r, j).clone());
            }
        }
        for (i, &c) in forced.iter().enumerate() {
            m.set(sys.matrix.rows() + i, c, Rational::one());
        }
        Ok((m, sys.basis))
    }

    /// Dimension of the degree-`d` piece.
    pub fn dim(&self, kind: ModuleKind, d: i64) -> Result<usize> {
        if kind.coeff_degree(self.n, d) < 0 {
            self.check_kind(kind)?;
            return Ok(0);
        }
        if let Some(normal) = &self.normalized {
            return normal.dim(kind, d);
        }
        let sys = self.constraint_system(kind, d)?;
        let m = &sys.matrix;
        if sys.kept.is_empty() {
            return Ok(0);
        }
        if m.rows() == 0 {
            return Ok(sys.kept.len());
        }
        Ok(sys.kept.len() - m.rank())
    }

    /// The degree-`d` piece with an explicit basis.
    pub fn piece(&self, kind: ModuleKind, d: i64) -> Result<Piece> {
        let sys = self.constraint_system(kind, d)?;
        let (m, basis) = (&sys.matrix, sys.basis);
        let ncomp = kind.components(self.l).len();
        let nmon = basis.len();
        let reduced: Vec<Vec<Rational>> = if sys.kept.is_empty() {
            Vec::new()
        } else if m.rows() == 0 {
            let id = Matrix::<Rational>::identity(sys.kept.len());
            (0..sys.kept.len()).map(|i| id.row(i).to_vec()).collect()
        } else {
            m.rank_and_kernel().1
        };
        let kernel = reduced.into_iter().map(|v| {
            let mut full = vec![Rational::zero(); sys.full_cols];
            for (x, &c) in v.into_iter().zip(&sys.kept) {
                full[c] = x;
            }
            full
        });
        let elements = kernel
            .map(|v| Element {
                kind,
                degree: d,
                polys: (0..ncomp)
                    .map(|c| basis.poly(self.l, &v[c * nmon..(c + 1) * nmon]))
                    .collect(),
            })
            .collect();
        Ok(Piece {
            kind,
            degree: d,
            basis,
            elements,
        })
    }

    /// The Euler derivation `Σ x_i ∂_i`.
    pub fn euler(&self) -> Element {
        Element {
            kind: ModuleKind::Derivations,
            degree: 0,
            polys: (0..self.l).map(|i| QPoly::var(self.l, i)).collect(),
        }
    }

    /// `δ(α_h)` for a derivation `δ`.
    pub fn apply_derivation(&self, delta: &Element, h: usize) -> QPoly {
        delta
            .polys
            .iter()
            .zip(&self.forms[h])
            .fold(QPoly::zero(self.l), |acc, (p, a)| &acc + &p.scale(a))
    }

    /// `dα_h ∧ η` as a `(p+1)`-form numerator.
    pub fn wedge_dalpha(&self, h: usize, eta: &Element) -> Vec<QPoly> {
        let p = eta.kind.form_degree().expect("form");
        let comps = subsets(self.l, p);
        let index: HashMap<&[usize], usize> =
            comps.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
        subsets(self.l, p + 1)
            .iter()
            .map(|big| {
                big.iter().enumerate().fold(QPoly::zero(self.l), |acc, (pos, &j)| {
                    let a = &self.forms[h][j];
                    if a.is_zero() {
                        return acc;
                    }
                    let small: Vec<usize> = big.iter().copied().filter(|&i| i != j).collect();
                    let term = eta.polys[index[small.as_slice()]].scale(a);
                    if pos % 2 == 0 {
                        &acc + &term
                    } else {
                        &acc - &term
                    }
                })
            })
            .collect()
    }
}

/// Dimension of `D(A)_d`.
pub fn der_graded_dim(a: &Arrangement, d: i64) -> Result<usize> {
    LogContext::new(a).dim(ModuleKind::Derivations, d)
}

/// Dimension of `Ω^p(A)_d`.
pub fn omega_graded_dim(a: &Arrangement, p: usize, d: i64) -> Result<usize> {
    LogContext::new(a).dim(ModuleKind::Forms(p), d)
}

/// Dimension of `Ω^p_0(A)_d`.
pub fn omega0_graded_dim(a: &Arrangement, p: usize, d: i64) -> Result<usize> {
    LogContext::new(a).dim(ModuleKind::RelativeForms(p), d)
}
