//! Dense exact matrices and Gaussian elimination.
//!
//! Two elimination routes exist. [`gauss_jordan`] works over any [`Field`].
//! [`fraction_free_echelon`] is used for rationals: rows are scaled to
//! primitive integer vectors and kept primitive after every row operation,
//! which keeps coefficient growth far below naive rational elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::scalar::{Field, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Builds a matrix from row vectors; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        Matrix {
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&T) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Field> Matrix<T> {
    pub fn rank(&self) -> usize {
        T::echelon(self, false).rank
    }

    /// Rank together with a kernel basis. Kernel vectors are in the normal
    /// form determined by the reduced row echelon form: a single 1 in a free
    /// column, zeros in the other free columns.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<T>>) {
        let e = T::echelon(self, true);
        let kernel = e.kernel(self.cols);
        (e.rank, kernel)
    }
}

/// Row echelon form. When produced with `reduced = true` the pivot entries
/// are 1 and every pivot column is zero outside its pivot row.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<T>>,
}

impl<T: Field> Echelon<T> {
    fn kernel(&self, cols: usize) -> Vec<Vec<T>> {
        let mut is_pivot = vec![false; cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&j| !is_pivot[j])
            .map(|j| {
                let mut v = vec![T::zero(); cols];
                v[j] = T::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[j].is_zero() {
                        v[p] = -row[j].clone();
                    }
                }
                v
            })
            .collect()
    }
}

/// Textbook Gauss-Jordan elimination over an arbitrary field.
pub fn gauss_jordan<T: Field>(m: &Matrix<T>, reduced: bool) -> Echelon<T> {
    let mut rows: Vec<Vec<T>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for x in rows[r].iter_mut().skip(c) {
            *x = x.clone() * inv.clone();
        }
        let prow = rows[r].clone();
        let range: Box<dyn Iterator<Item = usize>> = if reduced {
            Box::new((0..rows.len()).filter(move |&i| i != r))
        } else {
            Box::new(r + 1..rows.len())
        };
        for i in range {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in c..m.cols() {
                if !prow[j].is_zero() {
                    let v = rows[i][j].clone() - f.clone() * prow[j].clone();
                    rows[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon {
        rank: r,
        pivots,
        rows,
    }
}

fn content(row: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in row {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

fn make_primitive(row: &mut [BigInt]) {
    let g = content(row);
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x = &*x / &g;
            }
        }
    }
}

/// `row <- p' * row - a' * prow` where `a = row[c]`, `p = prow[c]`, divided
/// by their gcd; the result is made primitive.
fn eliminate(row: &mut [BigInt], prow: &[BigInt], support: &[usize], c: usize) {
    let a = row[c].clone();
    if a.is_zero() {
        return;
    }
    let p = &prow[c];
    let g = a.gcd(p);
    let a = a / &g;
    let p = p / &g;
    if !p.is_one() {
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x *= &p;
            }
        }
    }
    for &j in support {
        row[j] -= &a * &prow[j];
    }
    make_primitive(row);
}

/// Elimination over the rationals with integer rows kept primitive.
pub fn fraction_free_echelon(m: &Matrix<BigRational>, reduced: bool) -> Echelon<BigRational> {
    let cols = m.cols();
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows())
        .filter_map(|r| {
            let row = m.row(r);
            let lcm = row
                .iter()
                .filter(|x| !x.is_zero())
                .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            let mut ints: Vec<BigInt> = row
                .iter()
                .map(|x| {
                    if x.is_zero() {
                        BigInt::zero()
                    } else {
                        x.numer() * (&lcm / x.denom())
                    }
                })
                .collect();
            if ints.iter().all(|x| x.is_zero()) {
                return None;
            }
            make_primitive(&mut ints);
            Some(ints)
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let best = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| (rows[i][c].bits(), rows[i].iter().filter(|x| !x.is_zero()).count()));
        let Some(best) = best else { continue };
        rows.swap(r, best);
        let (head, tail) = rows.split_at_mut(r + 1);
        let prow = &head[r];
        let support: Vec<usize> = (c..cols).filter(|&j| !prow[j].is_zero()).collect();
        let work = tail.iter().filter(|row| !row[c].is_zero()).count();
        if work * support.len() > 4096 {
            tail.par_iter_mut()
                .for_each(|row| eliminate(row, prow, &support, c));
        } else {
            tail.iter_mut()
                .for_each(|row| eliminate(row, prow, &support, c));
        }
        // drop rows that became zero so later pivot searches stay short
        let mut k = r + 1;
        while k < rows.len() {
            if rows[k].iter().all(|x| x.is_zero()) {
                rows.swap_remove(k);
            } else {
                k += 1;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);

    if reduced {
        for i in (0..r).rev() {
            let (head, tail) = rows.split_at_mut(i);
            let prow = &tail[0];
            let pc = pivots[i];
            let support: Vec<usize> = (pc..cols).filter(|&j| !prow[j].is_zero()).collect();
            head.par_iter_mut()
                .for_each(|row| eliminate(row, prow, &support, pc));
        }
    }

    let rows = rows
        .into_iter()
        .zip(&pivots)
        .map(|(row, &pc)| {
            let mut lead = row[pc].clone();
            let flip = lead.is_negative();
            if !reduced {
                lead = BigInt::one();
            }
            row.into_iter()
                .map(|x| {
                    let x = if flip && !reduced { -x } else { x };
                    BigRational::new(x, lead.clone())
                })
                .collect()
        })
        .collect();
    Echelon {
        rank: r,
        pivots,
        rows,
    }
}

/// Row space built one vector at a time; used for greedy basis extraction.
#[derive(Clone, Debug)]
pub struct RowSpace<T> {
    cols: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<T>>,
}

impl<T: Field> RowSpace<T> {
    pub fn new(cols: usize) -> Self {
        RowSpace {
            cols,
            pivots: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<T>) -> Vec<T> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for j in p..self.cols {
                if !row[j].is_zero() {
                    v[j] = v[j].clone() - f.clone() * row[j].clone();
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns `true` iff it was not already in the span.
    pub fn insert(&mut self, v: Vec<T>) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv();
        for x in v.iter_mut().skip(p) {
            *x = x.clone() * inv.clone();
        }
        self.pivots.push(p);
        self.rows.push(v);
        true
    }
}
