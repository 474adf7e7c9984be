use logforms::cherncalc::{borel_serre_top, chern_from_twists, decomposition, lebelt_polys};
use logforms::exact::UniPoly;
use logforms::logmod::{is_free_saito, n_central, LogConfig, LogContext, ModuleKind, SeriesConfig};
use logforms::scalar::q;
use logforms::{Arrangement, IntLaurent, IntersectionLattice};
use proptest::prelude::*;

/// Essential arrangements of 3 to 6 planes in 3-space.
fn essential_plane_arrangement() -> impl Strategy<Value = Arrangement> {
    proptest::collection::vec(proptest::collection::vec(-2i64..3, 3), 3..7).prop_filter_map("essential", |rows| {
        Arrangement::from_integer_rows(3, &rows).ok().filter(Arrangement::is_essential)
    })
}

fn twist_pair() -> impl Strategy<Value = (Vec<i64>, Vec<i64>, usize)> {
    (1usize..5, 0usize..4).prop_flat_map(|(d, extra)| {
        (
            proptest::collection::vec(-3i64..4, d + extra),
            proptest::collection::vec(-3i64..4, extra),
            Just(d),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn forms_split_into_relative_pieces(a in essential_plane_arrangement()) {
        let ctx = LogContext::new(&a);
        let n = a.n() as i64;
        for d in -n..=1 {
            for p in 1..=3 {
                let full = ctx.dim(ModuleKind::Forms(p), d).unwrap();
                let rel = ctx.dim(ModuleKind::RelativeForms(p), d).unwrap();
                let lower = ctx.dim(ModuleKind::RelativeForms(p - 1), d).unwrap();
                prop_assert_eq!(full, rel + lower, "p = {}, d = {}", p, d);
            }
            prop_assert_eq!(ctx.dim(ModuleKind::RelativeForms(3), d).unwrap(), 0);
        }
    }

    #[test]
    fn top_relative_forms_are_free_of_rank_one(a in essential_plane_arrangement()) {
        let ctx = LogContext::new(&a);
        let config = SeriesConfig::for_arrangement(a.n(), 3);
        let h = ctx.hilbert_series(ModuleKind::RelativeForms(2), config).unwrap();
        prop_assert_eq!(h.numerator, IntLaurent::monomial(3 - a.n() as i64, 1));
    }

    #[test]
    fn hilbert_numerator_ignores_the_search_window(a in essential_plane_arrangement()) {
        let ctx = LogContext::new(&a);
        let base = SeriesConfig::for_arrangement(a.n(), 3);
        let wider = SeriesConfig { initial_span: base.initial_span + 3, window: base.window + 2, ..base };
        for kind in [ModuleKind::Derivations, ModuleKind::Forms(1)] {
            let h1 = ctx.hilbert_series(kind, base).unwrap();
            let h2 = ctx.hilbert_series(kind, wider).unwrap();
            prop_assert_eq!(h1.numerator, h2.numerator);
        }
    }

    #[test]
    fn n_vanishes_exactly_for_free_arrangements(a in essential_plane_arrangement()) {
        let cfg = LogConfig::default();
        let n = n_central(&a, &cfg).unwrap();
        let free = is_free_saito(&a, cfg.freeness_cap(&a)).unwrap();
        prop_assert!(n.value >= 0);
        prop_assert_eq!(n.value == 0, free.free);
        if free.free {
            let pi = IntersectionLattice::build(&a).poincare();
            let product = free
                .exponents
                .iter()
                .fold(UniPoly::one(), |acc, &e| &acc * &UniPoly::from_i64s(&[1, e]));
            prop_assert_eq!(product, pi);
        }
    }

    #[test]
    fn n_is_invariant_under_relabeling(a in essential_plane_arrangement(), seed in 0u64..1000) {
        let cfg = LogConfig::default();
        let mut perm: Vec<usize> = (0..a.n()).collect();
        let k = (seed as usize) % perm.len();
        perm.rotate_left(k);
        let last = perm.len() - 1;
        perm.swap(0, last);
        let b = a.permuted(&perm).unwrap();
        prop_assert_eq!(n_central(&a, &cfg).unwrap().value, n_central(&b, &cfg).unwrap().value);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn lebelt_alternating_sum_is_a_single_term((alpha, beta, d) in twist_pair()) {
        let set = lebelt_polys(&alpha, &beta, d).unwrap();
        let a = decomposition(&alpha, &beta, d).unwrap();
        let expected = UniPoly::monomial(a[d].eval(&q(-1)), d);
        prop_assert_eq!(set.alternating_sum(), expected);
        prop_assert!(set.reassemble().u_degree().is_none_or(|g| g <= d));
    }

    #[test]
    fn borel_serre_matches_the_chern_quotient((alpha, beta, d) in twist_pair()) {
        let top = borel_serre_top(&alpha, &beta, d).unwrap();
        let c = chern_from_twists(&alpha, &beta, d + 1).unwrap();
        prop_assert_eq!(top, q(c.coeff(d)));
    }

    #[test]
    fn common_twists_cancel((alpha, beta, d) in twist_pair(), common in proptest::collection::vec(-3i64..4, 0..3)) {
        let plain = chern_from_twists(&alpha, &beta, d + 1).unwrap();
        let a2: Vec<i64> = alpha.iter().chain(&common).copied().collect();
        let b2: Vec<i64> = beta.iter().chain(&common).copied().collect();
        prop_assert_eq!(chern_from_twists(&a2, &b2, d + 1).unwrap(), plain);
    }
}
