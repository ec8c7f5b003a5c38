//! Affine hyperplane arrangements: intersection posets, characteristic
//! polynomials, deletion-restriction, and the CSM vector and ML degree of the
//! complement.

mod finite;
mod hyperplane;
mod poset;
mod restrict;

pub use finite::{finite_field_complement_count, is_good_prime};
pub use hyperplane::{Arrangement, Hyperplane};
pub use poset::{intersection_poset, Flat, IntersectionPoset};
pub use restrict::{decone, triple};

use crate::csm::CsmVector;
use crate::exactmath::{rat, BigInt, Rational, UniPoly};
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("zero normal vector")]
    ZeroNormal,
    #[error("hyperplane has {found} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("duplicate hyperplanes {first} and {second}")]
    Duplicate { first: usize, second: usize },
    #[error("hyperplane is not a member of the arrangement")]
    NotMember,
    #[error("arrangement is not central")]
    NotCentral,
    #[error("not very affine: arrangement is not essential")]
    NotEssential,
    #[error("variety of critical points empty: arrangement is Boolean")]
    Boolean,
    #[error("coefficients are not integral")]
    NotIntegral,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("enumeration of {0} points exceeds the budget")]
    TooLarge(u128),
    #[error("characteristic polynomial of the cone is not divisible by q - 1")]
    Indivisible,
}

/// Characteristic polynomial `χ_A(q) = Σ μ(X) q^dim X`; integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    poly: UniPoly,
}

impl CharPoly {
    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    /// Coefficients from the constant term up.
    pub fn coeffs(&self) -> Vec<BigInt> {
        self.poly.integer_coeffs().expect("integer coefficients")
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn eval(&self, q: i64) -> BigInt {
        self.poly.eval(&rat(q)).to_integer()
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

pub fn char_poly(a: &Arrangement) -> CharPoly {
    char_poly_of(&intersection_poset(a))
}

pub(crate) fn char_poly_of(poset: &IntersectionPoset) -> CharPoly {
    let mut coeffs = vec![Rational::zero(); poset.dim() + 1];
    for flat in poset.flats() {
        coeffs[flat.dim] += Rational::from_integer(flat.mobius.clone());
    }
    CharPoly {
        poly: UniPoly::from_coeffs(coeffs),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub essential: bool,
    pub central: bool,
    pub boolean: bool,
}

pub fn classify(a: &Arrangement) -> Classification {
    let poset = intersection_poset(a);
    let essential = poset.flats().iter().any(|f| f.dim == 0);
    let central = poset.flats().iter().any(|f| f.hyperplanes.len() == a.len());
    Classification {
        essential,
        central,
        boolean: essential && a.len() == a.dim(),
    }
}

fn require_essential(a: &Arrangement) -> Result<IntersectionPoset, ArrangementError> {
    let poset = intersection_poset(a);
    if !poset.flats().iter().any(|f| f.dim == 0) {
        return Err(ArrangementError::NotEssential);
    }
    Ok(poset)
}

/// `v_i = (-1)^i [q^(r-i)] χ_A(q+1)`.
pub fn csm_vector_arrangement(a: &Arrangement) -> Result<CsmVector, ArrangementError> {
    let chi = char_poly_of(&require_essential(a)?);
    let shifted = chi.poly.shift(&Rational::one());
    let r = a.dim();
    let values = (0..=r)
        .map(|i| {
            let c = shifted.coeff(r - i).to_integer();
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    Ok(CsmVector::new(values))
}

/// `(-1)^r χ_A(1)`, the signed Euler characteristic of the complement.
pub fn ml_degree_arrangement(a: &Arrangement) -> Result<BigInt, ArrangementError> {
    let chi = char_poly_of(&require_essential(a)?);
    Ok(signed(a.dim(), chi.eval(1)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionCounts {
    pub regions: BigInt,
    pub bounded: BigInt,
    /// Bounded regions only carry their usual meaning when this holds.
    pub essential: bool,
}

/// Zaslavsky counts for a real arrangement.
pub fn region_counts(a: &Arrangement) -> RegionCounts {
    let poset = intersection_poset(a);
    let chi = char_poly_of(&poset);
    RegionCounts {
        regions: signed(a.dim(), chi.eval(-1)),
        bounded: signed(a.dim(), chi.eval(1)),
        essential: poset.flats().iter().any(|f| f.dim == 0),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bidegree {
    pub coefficient: BigInt,
    pub bidegree: (usize, usize),
}

/// Class of the variety of critical points: `v_i` paired with bidegree
/// `(r - i, n - 1 - r + i)` for `n` hyperplanes.
pub fn critical_class_bidegrees(a: &Arrangement) -> Result<Vec<Bidegree>, ArrangementError> {
    let v = csm_vector_arrangement(a)?;
    let (r, n) = (a.dim(), a.len());
    if n == r {
        return Err(ArrangementError::Boolean);
    }
    Ok(v.values()
        .iter()
        .enumerate()
        .map(|(i, c)| Bidegree {
            coefficient: c.clone(),
            bidegree: (r - i, n - 1 - r + i),
        })
        .collect())
}

fn signed(r: usize, v: BigInt) -> BigInt {
    if r.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn arr(dim: usize, hyps: &[(&[i64], i64)]) -> Arrangement {
        Arrangement::new(
            dim,
            hyps.iter()
                .map(|(a, b)| Hyperplane::from_i64(a, *b).unwrap())
                .collect(),
        )
        .unwrap()
    }

    pub(crate) fn generic3() -> Arrangement {
        arr(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], -1)])
    }

    pub(crate) fn boolean2() -> Arrangement {
        arr(2, &[(&[1, 0], 0), (&[0, 1], 0)])
    }

    pub(crate) fn concurrent3() -> Arrangement {
        arr(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, -1], 0)])
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn char_polys() {
        assert_eq!(char_poly(&generic3()).coeffs(), big(&[3, -3, 1]));
        assert_eq!(char_poly(&boolean2()).coeffs(), big(&[1, -2, 1]));
        assert_eq!(char_poly(&concurrent3()).coeffs(), big(&[2, -3, 1]));
        assert_eq!(char_poly(&arr(2, &[])).coeffs(), big(&[0, 0, 1]));
        assert_eq!(char_poly(&generic3()).to_string(), "q^2 - 3*q + 3");
    }

    #[test]
    fn classification() {
        let c = |essential, central, boolean| Classification {
            essential,
            central,
            boolean,
        };
        assert_eq!(classify(&boolean2()), c(true, true, true));
        assert_eq!(
            classify(&arr(2, &[(&[1, 0], 0), (&[1, 0], -1)])),
            c(false, false, false)
        );
        assert_eq!(classify(&generic3()), c(true, false, false));
    }

    #[test]
    fn csm_vectors() {
        assert_eq!(
            csm_vector_arrangement(&generic3()).unwrap().values(),
            big(&[1, 1, 1]).as_slice()
        );
        assert_eq!(
            csm_vector_arrangement(&boolean2()).unwrap().values(),
            big(&[1, 0, 0]).as_slice()
        );
        assert_eq!(
            csm_vector_arrangement(&concurrent3()).unwrap().values(),
            big(&[1, 1, 0]).as_slice()
        );
        let parallel = arr(2, &[(&[1, 0], 0), (&[1, 0], -1)]);
        assert_eq!(
            csm_vector_arrangement(&parallel),
            Err(ArrangementError::NotEssential)
        );
    }

    #[test]
    fn ml_degrees() {
        assert_eq!(ml_degree_arrangement(&generic3()).unwrap(), BigInt::from(1));
        assert_eq!(ml_degree_arrangement(&boolean2()).unwrap(), BigInt::from(0));
        assert_eq!(
            ml_degree_arrangement(&concurrent3()).unwrap(),
            BigInt::from(0)
        );
        let four = arr(
            2,
            &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], -1), (&[1, -2], -3)],
        );
        assert_eq!(ml_degree_arrangement(&four).unwrap(), BigInt::from(3));
    }

    #[test]
    fn regions() {
        let r = region_counts(&generic3());
        assert_eq!((r.regions, r.bounded), (BigInt::from(7), BigInt::from(1)));
        let r = region_counts(&boolean2());
        assert_eq!((r.regions, r.bounded), (BigInt::from(4), BigInt::from(0)));
        let r = region_counts(&arr(2, &[]));
        assert_eq!(
            (r.regions, r.bounded, r.essential),
            (BigInt::from(1), BigInt::from(1), false)
        );
    }

    #[test]
    fn bidegrees() {
        let pairs = |a: &Arrangement| -> Vec<(i64, (usize, usize))> {
            critical_class_bidegrees(a)
                .unwrap()
                .into_iter()
                .map(|b| (i64::try_from(b.coefficient).unwrap(), b.bidegree))
                .collect()
        };
        assert_eq!(
            pairs(&generic3()),
            vec![(1, (2, 0)), (1, (1, 1)), (1, (0, 2))]
        );
        assert_eq!(
            pairs(&concurrent3()),
            vec![(1, (2, 0)), (1, (1, 1)), (0, (0, 2))]
        );
        assert_eq!(
            critical_class_bidegrees(&boolean2()),
            Err(ArrangementError::Boolean)
        );
    }
}
