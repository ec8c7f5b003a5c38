mod common;

use common::arrangement_strategy;
use mldeg::arrangement::{
    char_poly, classify, csm_vector_arrangement, decone, finite_field_complement_count,
    is_good_prime, ml_degree_arrangement, triple, Arrangement, Hyperplane,
};
use mldeg::exactmath::{rat, BigInt, Rational, UniPoly};
use num_traits::Zero;
use proptest::prelude::*;

const PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Pulls back every hyperplane along `x = M y + c`.
fn change_coordinates(a: &Arrangement, m: &[Vec<i64>], c: &[i64]) -> Arrangement {
    let r = a.dim();
    let hyps = a
        .hyperplanes()
        .iter()
        .map(|h| {
            let normal: Vec<Rational> = (0..r)
                .map(|j| {
                    (0..r).fold(Rational::zero(), |acc, i| {
                        acc + &h.normal()[i] * rat(m[i][j])
                    })
                })
                .collect();
            let offset = (0..r).fold(h.offset().clone(), |acc, i| {
                acc + &h.normal()[i] * rat(c[i])
            });
            Hyperplane::new(normal, offset).unwrap()
        })
        .collect();
    Arrangement::new(r, hyps).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn deletion_restriction(a in arrangement_strategy(2, 6, 3)) {
        let chi = char_poly(&a);
        for h in a.hyperplanes() {
            let (del, res) = triple(&a, h).unwrap();
            prop_assert_eq!(chi.poly(), &(char_poly(&del).poly() - char_poly(&res).poly()));
            let ml = |x: &Arrangement| ml_degree_arrangement(x).ok();
            if let (Some(m1), Some(m), Some(m0)) = (ml(&a), ml(&del), ml(&res)) {
                prop_assert_eq!(m, m1 - m0);
            }
        }
    }

    #[test]
    fn deletion_restriction_3d(a in arrangement_strategy(3, 5, 2)) {
        let chi = char_poly(&a);
        for h in a.hyperplanes() {
            let (del, res) = triple(&a, h).unwrap();
            prop_assert_eq!(chi.poly(), &(char_poly(&del).poly() - char_poly(&res).poly()));
        }
    }

    #[test]
    fn char_poly_shape(a in arrangement_strategy(3, 6, 3)) {
        let c = char_poly(&a).coeffs();
        prop_assert_eq!(c.len(), 4);
        prop_assert_eq!(&c[3], &BigInt::from(1));
        prop_assert_eq!(&c[2], &BigInt::from(-(a.len() as i64)));
    }

    #[test]
    fn finite_field_agrees(a in arrangement_strategy(2, 6, 4)) {
        let chi = char_poly(&a);
        for p in PRIMES.into_iter().filter(|&p| is_good_prime(&a, p)).take(3) {
            prop_assert_eq!(BigInt::from(finite_field_complement_count(&a, p).unwrap()), chi.eval(p as i64));
        }
    }

    #[test]
    fn csm_vector_is_logconcave(a in arrangement_strategy(3, 7, 3)) {
        prop_assume!(classify(&a).essential);
        let v = csm_vector_arrangement(&a).unwrap();
        prop_assert_eq!(&v.values()[0], &BigInt::from(1));
        prop_assert!(v.properties().all(), "{:?}", v);
        prop_assert_eq!(v.ml_degree(), &ml_degree_arrangement(&a).unwrap());
    }

    #[test]
    fn invariant_under_permutation_and_coordinates(
        a in arrangement_strategy(2, 5, 3),
        m in prop::collection::vec(-3i64..=3, 4),
        c in prop::collection::vec(-3i64..=3, 2),
        rot in 0usize..5,
    ) {
        let mat = vec![vec![m[0], m[1]], vec![m[2], m[3]]];
        prop_assume!(m[0] * m[3] - m[1] * m[2] != 0);
        let chi = char_poly(&a);
        let mut hyps = a.hyperplanes().to_vec();
        if !hyps.is_empty() {
            let k = rot % hyps.len();
            hyps.rotate_left(k);
        }
        let permuted = Arrangement::new(2, hyps).unwrap();
        prop_assert_eq!(&char_poly(&permuted), &chi);
        prop_assert_eq!(&char_poly(&change_coordinates(&a, &mat, &c)), &chi);
    }

    #[test]
    fn decone_divides(normals in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 3..6), center in prop::collection::vec(-2i64..=2, 3)) {
        let hyps: Vec<Hyperplane> = normals.iter().filter_map(|a| {
            let b = -a.iter().zip(&center).map(|(x, y)| x * y).sum::<i64>();
            Hyperplane::from_i64(a, b).ok()
        }).collect();
        let a = Arrangement::deduplicated(3, hyps).unwrap();
        prop_assume!(!a.is_empty());
        let chi = char_poly(&a);
        for h in a.hyperplanes() {
            let d = decone(&a, h).unwrap();
            prop_assert_eq!(&(char_poly(&d).poly() * &UniPoly::from_i64(&[-1, 1])), chi.poly());
            prop_assert_eq!(d.len(), a.len() - 1);
        }
        if classify(&a).essential {
            prop_assert_eq!(ml_degree_arrangement(&a).unwrap(), BigInt::from(0));
        }
    }
}
