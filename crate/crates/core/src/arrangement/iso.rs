use std::collections::HashSet;

use super::IntersectionLattice;

/// A bijection of hyperplanes inducing an isomorphism of intersection
/// lattices, if one exists. `map[i]` is the image of hyperplane `i`.
pub fn lattice_isomorphism(a: &IntersectionLattice, b: &IntersectionLattice) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.rank() != b.rank() {
        return None;
    }
    for c in 0..=a.rank() {
        if a.flats(c).len() != b.flats(c).len() {
            return None;
        }
    }
    let n = a.n();
    let target: Vec<HashSet<Vec<usize>>> = (0..=b.rank())
        .map(|c| b.flats(c).iter().map(|f| f.hyperplanes().to_vec()).collect())
        .collect();
    // flats of `a` grouped by their largest hyperplane, so each one is
    // checked as soon as it is fully assigned
    let mut by_last: Vec<Vec<(usize, Vec<usize>)>> = vec![Vec::new(); n];
    for c in 1..=a.rank() {
        for f in a.flats(c) {
            let hs = f.hyperplanes();
            by_last[*hs.last().expect("nonempty")].push((c, hs.to_vec()));
        }
    }
    let degree = |lat: &IntersectionLattice, h: usize| -> Vec<usize> {
        (1..=lat.rank())
            .map(|c| lat.flats(c).iter().filter(|f| f.hyperplanes().contains(&h)).count())
            .collect()
    };
    let deg_a: Vec<_> = (0..n).map(|h| degree(a, h)).collect();
    let deg_b: Vec<_> = (0..n).map(|h| degree(b, h)).collect();

    fn extend(
        k: usize,
        map: &mut Vec<usize>,
        used: &mut [bool],
        by_last: &[Vec<(usize, Vec<usize>)>],
        target: &[HashSet<Vec<usize>>],
        deg_a: &[Vec<usize>],
        deg_b: &[Vec<usize>],
    ) -> bool {
        if k == map.capacity() {
            return true;
        }
        for img in 0..used.len() {
            if used[img] || deg_a[k] != deg_b[img] {
                continue;
            }
            map.push(img);
            used[img] = true;
            let ok = by_last[k].iter().all(|(c, hs)| {
                let mut m: Vec<usize> = hs.iter().map(|&h| map[h]).collect();
                m.sort_unstable();
                target[*c].contains(&m)
            });
            if ok && extend(k + 1, map, used, by_last, target, deg_a, deg_b) {
                return true;
            }
            map.pop();
            used[img] = false;
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(0, &mut map, &mut used, &by_last, &target, &deg_a, &deg_b).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Arrangement;

    fn lat(rows: &[Vec<i64>]) -> IntersectionLattice {
        IntersectionLattice::build(&Arrangement::from_integer_rows(3, rows).unwrap())
    }

    #[test]
    fn relabeled_arrangements_are_isomorphic() {
        let a = lat(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0], vec![0, 0, 1]]);
        let b = lat(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]);
        let map = lattice_isomorphism(&a, &b).unwrap();
        assert_eq!(map[3], 0);
    }

    #[test]
    fn pencil_is_not_generic() {
        let a = lat(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0], vec![0, 0, 1]]);
        let b = lat(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]);
        assert!(lattice_isomorphism(&a, &b).is_none());
    }
}
