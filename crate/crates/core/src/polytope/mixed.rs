use super::{
    euclidean_volume, minkowski_sum, normalized_volume_int, LatticePolytope, PolytopeError,
};
use crate::exactmath::{binomial, rat, Rational, UniPoly};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// `[MV_n(p^(n-i), q^i) for i in 0..=n]`.
///
/// `vol(p + t q)` is a polynomial of degree `n` in `t` whose coefficient of
/// `t^i` is `C(n, i) * MV_i / n!`. It is sampled at `t = 0..=n` and
/// interpolated exactly.
pub fn mixed_volume_pair_sequence(
    p: &LatticePolytope,
    q: &LatticePolytope,
    n: usize,
) -> Result<Vec<BigInt>, PolytopeError> {
    for poly in [p, q] {
        if poly.ambient_dim() != n {
            return Err(PolytopeError::DimensionMismatch {
                expected: n,
                found: poly.ambient_dim(),
            });
        }
    }
    if q.is_empty() {
        return Err(PolytopeError::EmptySummand);
    }
    if !p.is_full_dimensional() {
        return Err(PolytopeError::BaseDegenerate);
    }
    let mut samples = Vec::with_capacity(n + 1);
    for t in 0..=n {
        let sum = minkowski_sum(p, &q.dilate(t as i64))?;
        samples.push((
            rat(t as i64),
            Rational::from_integer(normalized_volume_int(&sum)?),
        ));
    }
    let g = UniPoly::interpolate(&samples);
    (0..=n)
        .map(|i| {
            let mv = g.coeff(i) / Rational::from_integer(binomial(n, i));
            if mv.is_integer() && !mv.is_negative() {
                Ok(mv.to_integer())
            } else {
                Err(PolytopeError::NonIntegral {
                    index: i,
                    value: mv,
                })
            }
        })
        .collect()
}

/// Mixed volume of `n` polytopes in `R^n` by inclusion–exclusion over all
/// nonempty subfamilies of their Minkowski sums.
pub fn mixed_volume_inclusion_exclusion(ps: &[LatticePolytope]) -> Result<Rational, PolytopeError> {
    let n = ps.len();
    if let Some(p) = ps.iter().find(|p| p.ambient_dim() != n) {
        return Err(PolytopeError::DimensionMismatch {
            expected: n,
            found: p.ambient_dim(),
        });
    }
    if ps.iter().any(LatticePolytope::is_empty) {
        return Err(PolytopeError::Empty);
    }
    let mut total = Rational::zero();
    for mask in 1u32..(1u32 << n) {
        let mut sum: Option<LatticePolytope> = None;
        for (i, p) in ps.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum = Some(match sum {
                    None => p.clone(),
                    Some(s) => minkowski_sum(&s, p)?,
                });
            }
        }
        let vol = euclidean_volume(&sum.expect("mask is nonzero"))?;
        if (n - mask.count_ones() as usize).is_multiple_of(2) {
            total += vol;
        } else {
            total -= vol;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn seg(a: &[i64], b: &[i64]) -> LatticePolytope {
        LatticePolytope::convex_hull(a.len(), &[a.to_vec(), b.to_vec()]).unwrap()
    }

    #[test]
    fn pair_sequence_examples() {
        let d = LatticePolytope::standard_simplex(2);
        assert_eq!(
            mixed_volume_pair_sequence(&d, &d.dilate(2), 2).unwrap(),
            big(&[1, 2, 4])
        );
        let s = seg(&[0, 0], &[-2, 1]);
        assert_eq!(
            mixed_volume_pair_sequence(&d, &s, 2).unwrap(),
            big(&[1, 2, 0])
        );
        let pt = LatticePolytope::point(vec![1, 1]);
        assert_eq!(
            mixed_volume_pair_sequence(&d, &pt, 2).unwrap(),
            big(&[1, 0, 0])
        );
    }

    #[test]
    fn pair_sequence_errors() {
        let d = LatticePolytope::standard_simplex(2);
        let s = seg(&[0, 0], &[1, 1]);
        assert_eq!(
            mixed_volume_pair_sequence(&s, &d, 2),
            Err(PolytopeError::BaseDegenerate)
        );
        assert_eq!(
            mixed_volume_pair_sequence(&d, &LatticePolytope::empty(2), 2),
            Err(PolytopeError::EmptySummand)
        );
    }

    #[test]
    fn inclusion_exclusion_examples() {
        let d = LatticePolytope::standard_simplex(2);
        assert_eq!(
            mixed_volume_inclusion_exclusion(&[d.clone(), d.clone()]).unwrap(),
            rat(1)
        );
        assert_eq!(
            mixed_volume_inclusion_exclusion(&[d.clone(), d.dilate(2)]).unwrap(),
            rat(2)
        );
        let s = seg(&[0, 0], &[-2, 1]);
        assert_eq!(
            mixed_volume_inclusion_exclusion(&[d.clone(), s]).unwrap(),
            rat(2)
        );
        assert!(mixed_volume_inclusion_exclusion(&[d, LatticePolytope::empty(2)]).is_err());
    }

    #[test]
    fn simplex_mixed_volume_is_one_in_every_dimension() {
        for n in 1..=4 {
            let d = LatticePolytope::standard_simplex(n);
            let seq = mixed_volume_pair_sequence(&d, &d, n).unwrap();
            assert!(seq.iter().all(|v| *v == BigInt::from(1)));
        }
    }
}
