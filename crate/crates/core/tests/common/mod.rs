#![allow(dead_code)]

use mldeg::arrangement::{classify, Arrangement, Hyperplane};
use mldeg::polytope::LatticePolytope;
use proptest::prelude::*;
use rand::Rng;

pub fn big(v: &[i64]) -> Vec<num_bigint::BigInt> {
    v.iter().map(|&x| x.into()).collect()
}

pub fn points(
    dim: usize,
    count: std::ops::Range<usize>,
    lo: i64,
    hi: i64,
) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(lo..=hi, dim), count)
}

/// Nonempty lattice polytope in `R^dim` with small vertices.
pub fn polytope(dim: usize) -> impl Strategy<Value = LatticePolytope> {
    points(dim, 1..7, -2, 3).prop_map(move |pts| LatticePolytope::convex_hull(dim, &pts).unwrap())
}

pub fn full_dim_polytope(dim: usize) -> impl Strategy<Value = LatticePolytope> {
    polytope(dim).prop_filter("full-dimensional", |p| p.is_full_dimensional())
}

pub fn random_polytope<R: Rng>(
    rng: &mut R,
    dim: usize,
    lo: i64,
    hi: i64,
    full: bool,
) -> LatticePolytope {
    loop {
        let k = rng.gen_range(dim + 1..=dim + 5);
        let pts: Vec<Vec<i64>> = (0..k)
            .map(|_| (0..dim).map(|_| rng.gen_range(lo..=hi)).collect())
            .collect();
        let p = LatticePolytope::convex_hull(dim, &pts).unwrap();
        if !full || p.is_full_dimensional() {
            return p;
        }
    }
}

/// Arrangement of `n` distinct hyperplanes with small integer data; may be
/// non-essential.
pub fn random_arrangement<R: Rng>(rng: &mut R, dim: usize, n: usize, bound: i64) -> Arrangement {
    let mut hyps: Vec<Hyperplane> = Vec::new();
    while hyps.len() < n {
        let a: Vec<i64> = (0..dim).map(|_| rng.gen_range(-bound..=bound)).collect();
        let b = rng.gen_range(-bound..=bound);
        if let Ok(h) = Hyperplane::from_i64(&a, b) {
            if !hyps.contains(&h) {
                hyps.push(h);
            }
        }
    }
    Arrangement::new(dim, hyps).unwrap()
}

pub fn random_essential_arrangement<R: Rng>(
    rng: &mut R,
    dim: usize,
    n: usize,
    bound: i64,
) -> Arrangement {
    loop {
        let a = random_arrangement(rng, dim, n, bound);
        if classify(&a).essential {
            return a;
        }
    }
}

pub fn arrangement_strategy(
    dim: usize,
    max: usize,
    bound: i64,
) -> impl Strategy<Value = Arrangement> {
    prop::collection::vec(
        (prop::collection::vec(-bound..=bound, dim), -bound..=bound),
        0..=max,
    )
    .prop_map(move |rows| {
        let hyps: Vec<Hyperplane> = rows
            .iter()
            .filter_map(|(a, b)| Hyperplane::from_i64(a, *b).ok())
            .collect();
        Arrangement::deduplicated(dim, hyps).unwrap()
    })
}
