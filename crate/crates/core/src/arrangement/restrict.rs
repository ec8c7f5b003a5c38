use super::{char_poly, Arrangement, ArrangementError, Hyperplane};
use crate::exactmath::{RatMatrix, Rational, UniPoly};
use num_traits::Zero;

/// Rewrites `c·x + d = 0` on the hyperplane `x_p = -(b + Σ_{j≠p} a_j x_j)`,
/// dropping coordinate `p`. `None` when the normal vanishes there.
fn substitute(
    c: &[Rational],
    d: &Rational,
    a: &[Rational],
    b: &Rational,
    p: usize,
) -> Option<Hyperplane> {
    let cp = &c[p];
    let normal: Vec<Rational> = (0..c.len())
        .filter(|&j| j != p)
        .map(|j| &c[j] - cp * &a[j])
        .collect();
    Hyperplane::new(normal, d - cp * b).ok()
}

/// Deletion and restriction of `a1` with respect to its member `h`. The
/// restriction lives on `h`, coordinatized by dropping the pivot coordinate of
/// `h`, so that `χ_a1 = χ_deletion - χ_restriction`.
pub fn triple(
    a1: &Arrangement,
    h: &Hyperplane,
) -> Result<(Arrangement, Arrangement), ArrangementError> {
    let idx = a1.position(h).ok_or(ArrangementError::NotMember)?;
    let rest: Vec<Hyperplane> = a1
        .hyperplanes()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != idx)
        .map(|(_, k)| k.clone())
        .collect();
    let p = h.pivot();
    let restricted: Vec<Hyperplane> = rest
        .iter()
        .filter_map(|k| substitute(k.normal(), k.offset(), h.normal(), h.offset(), p))
        .collect();
    let deletion = Arrangement::new(a1.dim(), rest)?;
    let restriction = Arrangement::deduplicated(a1.dim() - 1, restricted)?;
    Ok((deletion, restriction))
}

/// Common point of a central arrangement.
fn center(a: &Arrangement) -> Result<Vec<Rational>, ArrangementError> {
    let r = a.dim();
    let mut x = vec![Rational::zero(); r];
    if a.is_empty() {
        return Ok(x);
    }
    let rows = a.hyperplanes().iter().map(|h| h.augmented()).collect();
    let m = RatMatrix::from_rows(r + 1, rows).expect("row lengths");
    let (_, reduced, pivots) = m.rref_with_pivots();
    if pivots.last() == Some(&r) {
        return Err(ArrangementError::NotCentral);
    }
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = -reduced.get(i, r).clone();
    }
    Ok(x)
}

/// Affine arrangement in `C^(r-1)` obtained from a central arrangement by
/// sending `h` to infinity: the chart `ℓ_h = 1` of the projectivized
/// arrangement, after translating the common point to the origin.
pub fn decone(a: &Arrangement, h: &Hyperplane) -> Result<Arrangement, ArrangementError> {
    let idx = a.position(h).ok_or(ArrangementError::NotMember)?;
    let x0 = center(a)?;
    let p = h.pivot();
    let minus_one = -Rational::from_integer(1.into());
    let hyperplanes: Vec<Hyperplane> = a
        .hyperplanes()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != idx)
        .map(|(_, k)| {
            debug_assert!(k.eval(&x0).is_zero());
            // ℓ_h = 1 reads x_p = 1 - Σ a_j x_j, i.e. offset -1 in substitute's convention.
            substitute(k.normal(), &Rational::zero(), h.normal(), &minus_one, p)
                .expect("distinct hyperplanes through a common point")
        })
        .collect();
    let out = Arrangement::new(a.dim() - 1, hyperplanes)?;
    let q_minus_one = UniPoly::from_i64(&[-1, 1]);
    if &(&char_poly(&out).poly * &q_minus_one) != char_poly(a).poly() {
        return Err(ArrangementError::Indivisible);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::tests::{arr, boolean2, concurrent3, generic3};
    use super::*;

    fn coeffs(a: &Arrangement) -> Vec<i64> {
        char_poly(a)
            .coeffs()
            .into_iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn triples() {
        let a = generic3();
        for h in a.hyperplanes() {
            let (del, res) = triple(&a, h).unwrap();
            assert_eq!(coeffs(&del), vec![1, -2, 1]);
            assert_eq!(coeffs(&res), vec![-2, 1]);
        }
        let b = boolean2();
        let y = Hyperplane::from_i64(&[0, 1], 0).unwrap();
        let (del, res) = triple(&b, &y).unwrap();
        assert_eq!(coeffs(&del), vec![0, -1, 1]);
        assert_eq!(coeffs(&res), vec![-1, 1]);

        let c = arr(2, &[(&[1, 0], 0), (&[1, 0], -1), (&[0, 1], 0)]);
        let (_, res) = triple(&c, &y).unwrap();
        assert_eq!(res.len(), 2);
        let missing = Hyperplane::from_i64(&[1, 1], 5).unwrap();
        assert_eq!(triple(&c, &missing), Err(ArrangementError::NotMember));
    }

    #[test]
    fn restriction_of_points_on_a_line() {
        let a = arr(1, &[(&[1], 0), (&[1], -1)]);
        let (_, res) = triple(&a, &a.hyperplanes()[0].clone()).unwrap();
        assert_eq!(res.dim(), 0);
        assert!(res.is_empty());
        assert_eq!(coeffs(&res), vec![1]);
    }

    #[test]
    fn restriction_merges_concurrent_traces() {
        let a = arr(
            2,
            &[(&[1, 0], 0), (&[0, 1], 0), (&[1, -1], 0), (&[1, 1], -1)],
        );
        let (_, res) = triple(&a, &a.hyperplanes()[0].clone()).unwrap();
        assert_eq!(res.len(), 2);
    }

    #[test]
    fn decones() {
        let a = concurrent3();
        let x = Hyperplane::from_i64(&[1, 0], 0).unwrap();
        let d = decone(&a, &x).unwrap();
        assert_eq!(d.dim(), 1);
        assert_eq!(coeffs(&d), vec![-2, 1]);

        let d = decone(&boolean2(), &x).unwrap();
        assert_eq!(coeffs(&d), vec![-1, 1]);

        let g = generic3();
        assert_eq!(
            decone(&g, &g.hyperplanes()[0].clone()),
            Err(ArrangementError::NotCentral)
        );
    }

    #[test]
    fn decone_off_origin() {
        let a = arr(
            3,
            &[
                (&[1, 0, 0], -1),
                (&[0, 1, 0], -2),
                (&[0, 0, 1], -3),
                (&[1, 1, 1], -6),
                (&[1, -1, 0], 1),
            ],
        );
        for h in a.hyperplanes() {
            let d = decone(&a, h).unwrap();
            assert_eq!(d.len(), 4);
        }
    }
}
