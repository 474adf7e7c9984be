use std::collections::HashMap;

use serde::Serialize;

use super::Arrangement;
use crate::error::Result;
use crate::exact::{Matrix, UniPoly};
use crate::{IntPoly, Rational};

/// An element of the intersection lattice, identified by its closed set of
/// containing hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Flat {
    codim: usize,
    hyperplanes: Vec<usize>,
    #[serde(skip)]
    subspace: Vec<Vec<Rational>>,
}

impl Flat {
    pub(crate) fn new(a: &Arrangement, mut hyperplanes: Vec<usize>) -> Self {
        hyperplanes.sort_unstable();
        hyperplanes.dedup();
        let rows: Vec<Vec<Rational>> = hyperplanes.iter().map(|&h| a.form(h).to_vec()).collect();
        let (codim, subspace) = if rows.is_empty() {
            let id = Matrix::<Rational>::identity(a.l());
            (0, (0..a.l()).map(|i| id.row(i).to_vec()).collect())
        } else {
            Matrix::from_rows(a.l(), rows).rank_and_kernel()
        };
        Flat {
            codim,
            hyperplanes,
            subspace,
        }
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    /// Indices of the hyperplanes containing this flat, ascending.
    pub fn hyperplanes(&self) -> &[usize] {
        &self.hyperplanes
    }

    /// A basis of the flat as a linear subspace.
    pub fn subspace(&self) -> &[Vec<Rational>] {
        &self.subspace
    }

    /// Whether `self` lies below `other` in the lattice (`self ⊇ other` as
    /// subspaces).
    pub fn is_below(&self, other: &Flat) -> bool {
        self.hyperplanes.iter().all(|h| other.hyperplanes.binary_search(h).is_ok())
    }
}

/// The intersection lattice with its Möbius function.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    l: usize,
    n: usize,
    levels: Vec<Vec<Flat>>,
    mobius: Vec<Vec<i64>>,
    covers: Vec<Vec<Vec<usize>>>,
}

impl IntersectionLattice {
    /// Builds all flats by repeatedly intersecting the flats of one
    /// codimension with single hyperplanes and closing.
    pub fn build(a: &Arrangement) -> Self {
        let mut levels: Vec<Vec<Flat>> = vec![vec![Flat::new(a, Vec::new())]];
        let mut covers: Vec<Vec<Vec<usize>>> = Vec::new();
        loop {
            let current = levels.last().expect("nonempty");
            let mut next: Vec<Flat> = Vec::new();
            let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut level_covers = Vec::with_capacity(current.len());
            for x in current {
                let mut up = Vec::new();
                for h in 0..a.n() {
                    if x.hyperplanes.binary_search(&h).is_ok() {
                        continue;
                    }
                    let mut gens = x.hyperplanes.clone();
                    gens.push(h);
                    let closed = a.closure(&gens);
                    let id = *index.entry(closed.clone()).or_insert_with(|| {
                        next.push(Flat::new(a, closed));
                        next.len() - 1
                    });
                    if !up.contains(&id) {
                        up.push(id);
                    }
                }
                up.sort_unstable();
                level_covers.push(up);
            }
            covers.push(level_covers);
            if next.is_empty() {
                break;
            }
            next.sort_by(|p, q| p.hyperplanes.cmp(&q.hyperplanes));
            // remap cover indices after sorting
            let order: HashMap<Vec<usize>, usize> = next
                .iter()
                .enumerate()
                .map(|(i, f)| (f.hyperplanes.clone(), i))
                .collect();
            let unsorted: Vec<Vec<usize>> = {
                let mut v = vec![Vec::new(); index.len()];
                for (k, i) in &index {
                    v[*i] = k.clone();
                }
                v
            };
            for up in covers.last_mut().expect("pushed").iter_mut() {
                for id in up.iter_mut() {
                    *id = order[&unsorted[*id]];
                }
                up.sort_unstable();
            }
            levels.push(next);
        }
        let mobius = compute_mobius(&levels);
        IntersectionLattice {
            l: a.l(),
            n: a.n(),
            levels,
            mobius,
            covers,
        }
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the arrangement, the largest codimension of a flat.
    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    /// Flats of codimension `c` (empty beyond the rank).
    pub fn flats(&self, c: usize) -> &[Flat] {
        self.levels.get(c).map_or(&[], Vec::as_slice)
    }

    pub fn mobius(&self, c: usize) -> &[i64] {
        self.mobius.get(c).map_or(&[], Vec::as_slice)
    }

    /// Indices into `flats(c + 1)` of the flats covering `flats(c)[i]`.
    pub fn covers(&self, c: usize, i: usize) -> &[usize] {
        &self.covers[c][i]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Flat, i64)> {
        self.levels
            .iter()
            .zip(&self.mobius)
            .flat_map(|(fs, ms)| fs.iter().zip(ms.iter().copied()))
    }

    pub fn find(&self, hyperplanes: &[usize]) -> Option<&Flat> {
        let mut key = hyperplanes.to_vec();
        key.sort_unstable();
        self.levels
            .iter()
            .flat_map(|fs| fs.iter())
            .find(|f| f.hyperplanes == key)
    }

    /// `π(A, t) = Σ μ(X) (-t)^{codim X}`.
    pub fn poincare(&self) -> IntPoly {
        UniPoly::new(
            self.mobius
                .iter()
                .enumerate()
                .map(|(c, ms)| {
                    let s: i64 = ms.iter().sum();
                    if c % 2 == 0 {
                        s
                    } else {
                        -s
                    }
                })
                .collect(),
        )
    }

    /// Whether every flat of codimension `k` lies on exactly `k`
    /// hyperplanes.
    pub fn is_k_generic(&self, k: usize) -> bool {
        self.flats(k).iter().all(|x| x.hyperplanes.len() == k)
    }
}

fn compute_mobius(levels: &[Vec<Flat>]) -> Vec<Vec<i64>> {
    let mut mobius: Vec<Vec<i64>> = Vec::with_capacity(levels.len());
    for (c, flats) in levels.iter().enumerate() {
        let row = flats
            .iter()
            .map(|x| {
                if c == 0 {
                    return 1;
                }
                let below: i64 = levels[..c]
                    .iter()
                    .zip(&mobius)
                    .flat_map(|(fs, ms)| fs.iter().zip(ms))
                    .filter(|(y, _)| y.is_below(x))
                    .map(|(_, m)| *m)
                    .sum();
                -below
            })
            .collect();
        mobius.push(row);
    }
    mobius
}

/// `π(PA, t) = π(A, t) / (1 + t)`.
pub fn poincare_proj(pi: &IntPoly) -> Result<IntPoly> {
    pi.div_exact(&UniPoly::from_i64s(&[1, 1]))
}

/// `(-1)^{l-1} π(PA, -1)`.
pub fn beta_invariant(pi_proj: &IntPoly, l: usize) -> i64 {
    let v = pi_proj.eval(&-1);
    if l % 2 == 1 {
        v
    } else {
        -v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arr(l: usize, rows: &[&[i64]]) -> Arrangement {
        Arrangement::from_integer_rows(l, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn generic4() -> Arrangement {
        arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]])
    }

    #[test]
    fn boolean_plane() {
        let lat = IntersectionLattice::build(&arr(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(lat.mobius(0), &[1]);
        assert_eq!(lat.mobius(1), &[-1, -1]);
        assert_eq!(lat.mobius(2), &[1]);
        assert_eq!(lat.covers(0, 0), &[0, 1]);
        assert_eq!(lat.covers(1, 1), &[0]);
    }

    #[test]
    fn single_hyperplane() {
        let lat = IntersectionLattice::build(&arr(3, &[&[1, 2, 3]]));
        assert_eq!(lat.rank(), 1);
        assert_eq!(lat.iter().map(|(_, m)| m).collect::<Vec<_>>(), vec![1, -1]);
    }

    /// Möbius values by brute force over all subsets of hyperplanes: the
    /// flats are the distinct closures, μ by the defining recursion.
    fn brute_mobius(a: &Arrangement) -> Vec<(Vec<usize>, i64)> {
        let n = a.n();
        let mut flats: Vec<Vec<usize>> = (0u32..1 << n)
            .map(|mask| a.closure(&(0..n).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>()))
            .collect();
        flats.sort_by_key(|f| (a.rank_of(f), f.clone()));
        flats.dedup();
        let mut mu: Vec<(Vec<usize>, i64)> = Vec::new();
        for x in &flats {
            let s: i64 = mu
                .iter()
                .filter(|(y, _)| y != x && y.iter().all(|h| x.contains(h)))
                .map(|(_, m)| m)
                .sum();
            mu.push((x.clone(), if x.is_empty() { 1 } else { -s }));
        }
        mu
    }

    #[test]
    fn four_generic_planes() {
        let lat = IntersectionLattice::build(&generic4());
        assert_eq!(lat.mobius(1), &[-1; 4]);
        assert_eq!(lat.mobius(2), &[1; 6]);
        assert_eq!(lat.mobius(3), &[-3]);
        let mut ours: Vec<_> = lat.iter().map(|(f, m)| (f.hyperplanes().to_vec(), m)).collect();
        let mut brute = brute_mobius(&generic4());
        ours.sort();
        brute.sort();
        assert_eq!(ours, brute);
        let pi = lat.poincare();
        assert_eq!(pi.coeffs(), &[1, 4, 6, 3]);
        let proj = poincare_proj(&pi).unwrap();
        assert_eq!(proj.coeffs(), &[1, 3, 3]);
        assert_eq!(beta_invariant(&proj, 3), 1);
    }

    #[test]
    fn boolean_poincare_and_beta() {
        let lat = IntersectionLattice::build(&arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(lat.poincare(), IntPoly::one_plus_x_pow(3));
        let proj = poincare_proj(&lat.poincare()).unwrap();
        assert_eq!(proj, IntPoly::one_plus_x_pow(2));
        assert_eq!(beta_invariant(&proj, 3), 0);
        assert!(lat.is_k_generic(2));
        assert!(lat.is_k_generic(3));
    }

    #[test]
    fn projective_poincare_of_rank_four_example() {
        let pi = IntPoly::from_i64s(&[1, 9, 30, 22]);
        assert_eq!(beta_invariant(&pi, 4), 0);
        let full = &IntPoly::from_i64s(&[1, 8, 22]) * &IntPoly::one_plus_x_pow(2);
        assert_eq!(poincare_proj(&full).unwrap(), pi);
    }

    #[test]
    fn genericity() {
        let five = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[1, 2, 3]]);
        assert!(IntersectionLattice::build(&five).is_k_generic(2));
        let pencil = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]);
        assert!(!IntersectionLattice::build(&pencil).is_k_generic(2));
    }

    fn small_arrangement() -> impl Strategy<Value = Arrangement> {
        proptest::collection::vec(proptest::collection::vec(-2i64..3, 3), 1..7).prop_filter_map(
            "simple",
            |rows| Arrangement::from_integer_rows(3, &rows).ok(),
        )
    }

    proptest! {
        #[test]
        fn lattice_identities(a in small_arrangement()) {
            let lat = IntersectionLattice::build(&a);
            // Möbius recursion at every flat above the bottom
            for (x, _) in lat.iter().filter(|(x, _)| x.codim() > 0) {
                let s: i64 = lat.iter().filter(|(y, _)| y.is_below(x)).map(|(_, m)| m).sum();
                prop_assert_eq!(s, 0);
            }
            // sign alternation
            for (x, m) in lat.iter() {
                let sign = if x.codim() % 2 == 0 { 1 } else { -1 };
                prop_assert!(m * sign > 0);
            }
            let pi = lat.poincare();
            prop_assert!(pi.coeffs().iter().all(|&c| c >= 0));
            prop_assert!(poincare_proj(&pi).is_ok());
            // localization lattice equals the interval below the flat
            for (x, _) in lat.iter() {
                let loc = a.localization(x).unwrap();
                let sub = IntersectionLattice::build(&loc);
                let mut below: Vec<Vec<usize>> = lat
                    .iter()
                    .filter(|(y, _)| y.is_below(x))
                    .map(|(y, _)| y.hyperplanes().to_vec())
                    .collect();
                let mut mapped: Vec<Vec<usize>> = sub
                    .iter()
                    .map(|(y, _)| y.hyperplanes().iter().map(|&i| x.hyperplanes()[i]).collect())
                    .collect();
                below.sort();
                mapped.sort();
                prop_assert_eq!(below, mapped);
            }
        }
    }
}
