//! Bundled test arrangements, including a verified realization of the
//! two Ziegler arrangements.

use num_traits::{One, Zero};

use crate::arrangement::{lattice_isomorphism, Arrangement, IntersectionLattice};
use crate::error::{Error, Result};
use crate::exact::Matrix;
use crate::Rational;

fn rows(l: usize, rows: &[Vec<i64>]) -> Arrangement {
    Arrangement::from_integer_rows(l, rows).expect("corpus arrangements are simple")
}

/// The coordinate hyperplanes of an `l`-dimensional space.
pub fn boolean(l: usize) -> Arrangement {
    let forms: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
        .collect();
    rows(l, &forms)
}

/// The essential braid arrangement of rank 3: `x_i - x_j` for
/// `0 ≤ i < j ≤ 3` with `x_3 = 0`.
pub fn braid3() -> Arrangement {
    let mut forms = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let mut f = vec![0; 3];
            f[i] = 1;
            if j < 3 {
                f[j] = -1;
            }
            forms.push(f);
        }
    }
    rows(3, &forms)
}

/// `n` hyperplanes in general position in dimension `l`, with Vandermonde
/// rows `(1, s, ..., s^{l-1})` for `s = 1..=n`.
pub fn generic(n: usize, l: usize) -> Arrangement {
    let forms: Vec<Vec<i64>> = (1..=n as i64)
        .map(|s| (0..l as u32).map(|k| s.pow(k)).collect())
        .collect();
    rows(l, &forms)
}

/// Points of the projective plane whose connecting lines form a Ziegler
/// arrangement: line `a_i b_j` for each pair, so the six points are the
/// triple points and the incidence graph is `K_{3,3}`.
#[derive(Clone, Debug)]
pub struct ZieglerPoints {
    pub a: [[i64; 3]; 3],
    pub b: [[i64; 3]; 3],
}

impl ZieglerPoints {
    /// Six points `(s, s^2, 1)` on the conic `yz = x^2`.
    pub fn on_conic() -> Self {
        let p = |s: i64| [s, s * s, 1];
        ZieglerPoints {
            a: [p(0), p(1), p(-1)],
            b: [p(2), p(-2), p(3)],
        }
    }

    /// The same configuration with the last point moved off the conic.
    pub fn off_conic() -> Self {
        let mut z = Self::on_conic();
        z.b[2] = [3, 8, 1];
        z
    }

    fn points(&self) -> impl Iterator<Item = &[i64; 3]> {
        self.a.iter().chain(self.b.iter())
    }

    /// Whether the six points lie on a common conic, via the determinant of
    /// the rows `(x^2, y^2, z^2, xy, xz, yz)`.
    pub fn on_common_conic(&self) -> bool {
        let m = Matrix::from_rows(
            6,
            self.points()
                .map(|&[x, y, z]| {
                    [x * x, y * y, z * z, x * y, x * z, y * z]
                        .iter()
                        .map(|&v| Rational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
        );
        m.rank() < 6
    }

    pub fn arrangement(&self) -> Arrangement {
        let mut forms = Vec::new();
        let mut labels = Vec::new();
        for (i, p) in self.a.iter().enumerate() {
            for (j, q) in self.b.iter().enumerate() {
                let line = [
                    p[1] * q[2] - p[2] * q[1],
                    p[2] * q[0] - p[0] * q[2],
                    p[0] * q[1] - p[1] * q[0],
                ];
                forms.push(line.iter().map(|&v| Rational::from_integer(v.into())).collect());
                labels.push(format!("a{}b{}", i + 1, j + 1));
            }
        }
        Arrangement::with_labels(3, forms, labels)
            .expect("distinct points give distinct lines")
            .primitive()
    }
}

/// Checks that a point configuration realizes the Ziegler lattice: nine
/// lines, six triple points, eighteen double points.
pub fn check_ziegler_lattice(lattice: &IntersectionLattice) -> Result<()> {
    let mut triple = 0;
    let mut double = 0;
    for x in lattice.flats(2) {
        match x.hyperplanes().len() {
            2 => double += 1,
            3 => triple += 1,
            k => {
                return Err(Error::InvalidArrangement(format!(
                    "point of multiplicity {k} in a Ziegler configuration"
                )))
            }
        }
    }
    if lattice.n() != 9 || lattice.rank() != 3 || triple != 6 || double != 18 {
        return Err(Error::InvalidArrangement(format!(
            "{} lines with {triple} triple and {double} double points",
            lattice.n()
        )));
    }
    Ok(())
}

/// The pair `(Z1, Z2)`: same lattice, triple points off and on a conic.
/// Both conditions are verified exactly before the pair is returned.
pub fn ziegler_pair() -> Result<(Arrangement, Arrangement)> {
    let (p1, p2) = (ZieglerPoints::off_conic(), ZieglerPoints::on_conic());
    if p1.on_common_conic() || !p2.on_common_conic() {
        return Err(Error::InvalidArrangement("conic condition not as required".into()));
    }
    let (z1, z2) = (p1.arrangement(), p2.arrangement());
    let (l1, l2) = (IntersectionLattice::build(&z1), IntersectionLattice::build(&z2));
    check_ziegler_lattice(&l1)?;
    check_ziegler_lattice(&l2)?;
    if lattice_isomorphism(&l1, &l2).is_none() {
        return Err(Error::InvalidArrangement("the two lattices differ".into()));
    }
    Ok((z1, z2))
}

/// A Ziegler arrangement coned into dimension 4 and extended by a generic
/// hyperplane. Its only non-free localization is the Ziegler arrangement
/// itself, at an isolated point of the projective 3-space.
pub fn ziegler_plus(z: &Arrangement, seed: u64) -> Result<Arrangement> {
    z.lift(1).add_generic_hyperplane(seed)
}

/// `x, y, z, x+y+z, w` together with a generic hyperplane in dimension
/// 4: a 2-generic arrangement whose one non-generic point is four planes
/// through a line.
pub fn closed_form_example(seed: u64) -> Result<Arrangement> {
    rows(4, &[
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        vec![1, 1, 1, 0],
        vec![0, 0, 0, 1],
    ])
    .add_generic_hyperplane(seed)
}

/// The named arrangements shipped with the tool.
pub fn bundled() -> Result<Vec<(String, Arrangement)>> {
    let mut out = Vec::new();
    for l in 2..=4 {
        out.push((format!("boolean-{l}"), boolean(l)));
    }
    out.push(("braid-3".into(), braid3()));
    for l in 2..=4 {
        for n in l + 1..=7 {
            out.push((format!("generic-{n}-{l}"), generic(n, l)));
        }
    }
    let (z1, z2) = ziegler_pair()?;
    out.push(("ziegler-1-plus".into(), ziegler_plus(&z1, 1)?));
    out.push(("ziegler-2-plus".into(), ziegler_plus(&z2, 1)?));
    out.push(("ziegler-1".into(), z1));
    out.push(("ziegler-2".into(), z2));
    Ok(out)
}

/// Whether every coefficient is a rational with denominator one.
pub fn is_integral(a: &Arrangement) -> bool {
    a.forms().iter().flatten().all(|c| c.denom().is_one() || c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ziegler_pair_is_verified() {
        let (z1, z2) = ziegler_pair().unwrap();
        assert!(is_integral(&z1) && is_integral(&z2));
        let lat = IntersectionLattice::build(&z2);
        assert_eq!(lat.poincare().coeffs(), &[1, 9, 30, 22]);
    }

    #[test]
    fn generic_members_are_generic() {
        for l in 2..=4 {
            for n in l + 1..=7 {
                let lat = IntersectionLattice::build(&generic(n, l));
                assert!(lat.is_k_generic(l - 1), "n={n} l={l}");
            }
        }
    }

    #[test]
    fn braid_poincare() {
        let lat = IntersectionLattice::build(&braid3());
        assert_eq!(lat.poincare().coeffs(), &[1, 6, 11, 6]);
    }
}
