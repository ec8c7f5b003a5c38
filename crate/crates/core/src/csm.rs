use crate::exactmath::{logconcave_no_internal_zeros, SequenceProperties};
use num_bigint::BigInt;
use num_traits::Zero;

/// Unsigned CSM coefficients `v_0, …, v_r` of an `r`-dimensional very affine
/// variety, so that the class is `Σ (-1)^i v_i [P^(r-i)]`. Signs are applied
/// only when reporting.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CsmVector {
    values: Vec<BigInt>,
}

impl CsmVector {
    pub fn new(values: Vec<BigInt>) -> Self {
        assert!(!values.is_empty(), "a CSM vector has at least v_0");
        Self { values }
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Dimension `r`.
    pub fn r(&self) -> usize {
        self.values.len() - 1
    }

    /// `v_r`, the maximum likelihood degree.
    pub fn ml_degree(&self) -> &BigInt {
        self.values.last().expect("nonempty")
    }

    /// Topological Euler characteristic `(-1)^r v_r`.
    pub fn euler(&self) -> BigInt {
        if self.r().is_multiple_of(2) {
            self.ml_degree().clone()
        } else {
            -self.ml_degree().clone()
        }
    }

    /// `(-1)^i v_i`, the coefficients as they appear in the class.
    pub fn signed(&self) -> Vec<BigInt> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, v)| if i % 2 == 0 { v.clone() } else { -v.clone() })
            .collect()
    }

    pub fn sum(&self) -> BigInt {
        self.values.iter().fold(BigInt::zero(), |a, b| a + b)
    }

    pub fn properties(&self) -> SequenceProperties {
        logconcave_no_internal_zeros(&self.values).expect("nonempty")
    }
}
