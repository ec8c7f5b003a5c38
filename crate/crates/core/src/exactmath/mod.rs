//! Exact arithmetic kernel.
//!
//! Everything here works over the rationals with arbitrary precision. There is
//! no floating point anywhere in the crate; every quantity the pipelines report
//! is an integer and is computed exactly.

mod bipoly;
mod matrix;
mod resultant;
mod sequence;
mod unipoly;

pub use bipoly::{BiPoly, Var};
pub use matrix::{integer_determinant, RatMatrix};
pub use resultant::sylvester_resultant;
pub use sequence::{logconcave_no_internal_zeros, SequenceProperties};
pub use unipoly::UniPoly;

pub use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Integer `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` reduced. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MathError {
    #[error("polynomial is identically zero")]
    IdenticallyZero,
    #[error("nothing to eliminate: input has degree 0 in the eliminated variable")]
    NothingToEliminate,
    #[error("empty sequence")]
    EmptySequence,
    #[error("division is not exact")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("matrix entries: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
