use mldeg::exactmath::{
    rat, ratio, sylvester_resultant, BiPoly, RatMatrix, Rational, UniPoly, Var,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn rref_is_idempotent(rows in 1usize..5, cols in 1usize..5, entries in prop::collection::vec(-6i64..6, 25)) {
        let m = RatMatrix::new(rows, cols, entries[..rows * cols].iter().map(|&c| rat(c)).collect()).unwrap();
        let (rank, once) = m.rref();
        let (rank2, twice) = once.rref();
        prop_assert_eq!(rank, rank2);
        prop_assert_eq!(once, twice);
    }
}

fn unipoly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-5i64..=5, 1..5)
        .prop_map(|c| UniPoly::from_i64(&c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn bipoly(max_deg: u32) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0..=max_deg, 1..=max_deg), -4i64..=4), 1..5)
        .prop_map(|t| BiPoly::from_terms(t.into_iter().map(|(e, c)| (e, rat(c)))))
        .prop_filter("positive degree in y", |p| {
            p.degree(Var::Y).unwrap_or(0) > 0
        })
}

proptest! {
    #[test]
    fn squaring_keeps_distinct_roots(p in unipoly()) {
        prop_assert_eq!((&p * &p).distinct_root_count().unwrap(), p.distinct_root_count().unwrap());
    }

    #[test]
    fn distinct_rational_roots_are_counted(roots in prop::collection::btree_set(-20i64..20, 1..7), scale in 1i64..9) {
        let k = roots.len();
        let roots: Vec<Rational> = roots.into_iter().map(|r| ratio(r, scale)).collect();
        let p = UniPoly::from_roots(&roots);
        prop_assert_eq!(p.distinct_root_count().unwrap(), k);
        prop_assert!(p.is_squarefree().unwrap());
        let doubled = &p * &UniPoly::from_roots(&roots[..1]);
        prop_assert_eq!(doubled.distinct_root_count().unwrap(), k);
        prop_assert!(!doubled.is_squarefree().unwrap());
    }

    #[test]
    fn resultant_swap_sign(p in bipoly(2), q in bipoly(2)) {
        let a = sylvester_resultant(&p, &q, Var::Y).unwrap();
        let b = sylvester_resultant(&q, &p, Var::Y).unwrap();
        let e = p.degree(Var::Y).unwrap() * q.degree(Var::Y).unwrap();
        let sign = if e % 2 == 0 { rat(1) } else { rat(-1) };
        prop_assert_eq!(a, b.scale(&sign));
    }

    #[test]
    fn resultant_vanishes_at_common_roots(a in -4i64..4, b in -4i64..4, p in bipoly(2), q in bipoly(2)) {
        // force a common zero at (a, b)
        let (x0, y0) = (rat(a), rat(b));
        let p = &p - &BiPoly::constant(p.eval(&x0, &y0));
        let q = &q - &BiPoly::constant(q.eval(&x0, &y0));
        let r = sylvester_resultant(&p, &q, Var::Y).unwrap();
        prop_assert_eq!(r.eval(&x0), rat(0));
    }
}
