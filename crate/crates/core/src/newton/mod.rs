//! Newton-polytope formulas for nondegenerate hypersurfaces.
//!
//! For a nondegenerate Laurent polynomial `g` in `n` variables, the CSM
//! coefficients of `{g = 0}` in the torus are mixed volumes of the standard
//! simplex against the Newton polytope of `g`; the last one is the ML degree.
//! Applied to every coordinate stratum of projective space, the same formula
//! gives the mixed Newton numbers and Milnor numbers of a homogeneous
//! polynomial, and hence the degree of its gradient map.
//!
//! Nondegeneracy is assumed, never certified: only the support of a
//! polynomial enters these formulas.

mod polynomial;
mod projective;

pub use polynomial::{HomogeneousPolynomial, LaurentPolynomial};
pub use projective::{
    gradient_degree, milnor_vector, newton_numbers, v_table, GradientReport, MilnorVector, VTable,
};

use crate::csm::CsmVector;
use crate::polytope::{mixed_volume_pair_sequence, LatticePolytope, PolytopeError};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NewtonError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial")]
    Constant,
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("exponent vector has {found} entries, expected {expected}")]
    VariableCount { expected: usize, found: usize },
    #[error("empty Newton polytope")]
    EmptyPolytope,
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

/// Hull of the exponents of `g`.
pub fn newton_polytope(g: &LaurentPolynomial) -> Result<LatticePolytope, NewtonError> {
    g.newton_polytope()
}

/// `v_i = MV_n(Δ^(r-i), Δ_g^(i+1))` for `i = 0..=r`, `r = n - 1`.
pub fn csm_hypersurface_vector(
    delta_g: &LatticePolytope,
    n: usize,
) -> Result<CsmVector, NewtonError> {
    if delta_g.is_empty() {
        return Err(NewtonError::EmptyPolytope);
    }
    let seq = mixed_volume_pair_sequence(&LatticePolytope::standard_simplex(n), delta_g, n)?;
    Ok(CsmVector::new(seq[1..].to_vec()))
}

/// Normalized volume of `Δ_g`, the last CSM coefficient.
pub fn ml_degree_hypersurface(delta_g: &LatticePolytope, n: usize) -> Result<BigInt, NewtonError> {
    Ok(csm_hypersurface_vector(delta_g, n)?.ml_degree().clone())
}

/// Sum of all `n` CSM coefficients: the ML degree of the hypersurface once the
/// coordinate hyperplanes and the hyperplane `Σ p_i = 0` are removed.
pub fn statistical_ml_degree(delta_g: &LatticePolytope, n: usize) -> Result<BigInt, NewtonError> {
    Ok(csm_hypersurface_vector(delta_g, n)?.sum())
}
