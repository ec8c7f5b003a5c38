//! Lattice polytopes: hulls, Minkowski sums, exact volumes and mixed volumes.
//!
//! Volumes follow the convention in which the standard simplex of `R^n` has
//! normalized volume 1 and `MV_n(Δ, …, Δ) = 1`.

mod ehrhart;
mod homogeneous;
pub(crate) mod hull;
mod mixed;
mod volume;

pub use ehrhart::ehrhart_normalized_volume;
pub use homogeneous::{coordinate_section, homog_project, m_sequence, HomogeneousPolytope};
pub use mixed::{mixed_volume_inclusion_exclusion, mixed_volume_pair_sequence};

use crate::exactmath::{factorial, Rational};
use hull::{full_dim_facets, hull_vertex_indices, Facet};
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("points have mixed lengths (expected {expected}, found {found})")]
    MixedLengths { expected: usize, found: usize },
    #[error("empty summand")]
    EmptySummand,
    #[error("empty polytope")]
    Empty,
    #[error("base polytope degenerate")]
    BaseDegenerate,
    #[error("polytope is not full-dimensional")]
    DimensionDeficient,
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("integer overflow in hull computation")]
    Overflow,
    #[error("lattice-point enumeration budget exceeded ({0} points)")]
    TooLarge(u128),
    #[error("not a homogeneous polytope: {0}")]
    NotHomogeneous(String),
    #[error("mixed volume {index} is not a nonnegative integer: {value}")]
    NonIntegral { index: usize, value: Rational },
}

/// Convex hull of finitely many integer points, stored by its vertices in
/// lexicographic order. May be empty, a point, or lower-dimensional.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePolytope {
    ambient_dim: usize,
    vertices: Vec<Vec<i64>>,
}

impl LatticePolytope {
    /// Hull of `points` in `Z^ambient_dim`.
    pub fn convex_hull(ambient_dim: usize, points: &[Vec<i64>]) -> Result<Self, PolytopeError> {
        if let Some(p) = points.iter().find(|p| p.len() != ambient_dim) {
            return Err(PolytopeError::MixedLengths {
                expected: ambient_dim,
                found: p.len(),
            });
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let keep = hull_vertex_indices(&pts)?;
        let vertices = keep.into_iter().map(|i| pts[i].clone()).collect();
        Ok(Self {
            ambient_dim,
            vertices,
        })
    }

    pub fn empty(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            vertices: Vec::new(),
        }
    }

    pub fn point(p: Vec<i64>) -> Self {
        Self {
            ambient_dim: p.len(),
            vertices: vec![p],
        }
    }

    /// `conv{0, e_1, …, e_n}`.
    pub fn standard_simplex(n: usize) -> Self {
        let mut vertices = vec![vec![0; n]];
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            vertices.push(e);
        }
        vertices.sort();
        Self {
            ambient_dim: n,
            vertices,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Affine dimension; `None` when empty.
    pub fn dimension(&self) -> Option<usize> {
        (!self.is_empty()).then(|| hull::affine_rank(&self.vertices))
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dimension() == Some(self.ambient_dim)
    }

    /// `k * P` for `k >= 0`.
    pub fn dilate(&self, k: i64) -> Self {
        assert!(k >= 0, "dilation factor must be nonnegative");
        if self.is_empty() {
            return self.clone();
        }
        if k == 0 {
            return Self::point(vec![0; self.ambient_dim]);
        }
        Self {
            ambient_dim: self.ambient_dim,
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().map(|x| x * k).collect())
                .collect(),
        }
    }

    pub fn translate(&self, t: &[i64]) -> Self {
        assert_eq!(t.len(), self.ambient_dim);
        let mut vertices: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(t).map(|(a, b)| a + b).collect())
            .collect();
        vertices.sort();
        Self {
            ambient_dim: self.ambient_dim,
            vertices,
        }
    }

    /// Whether every vertex of `self` lies in `other`.
    pub fn is_subpolytope_of(&self, other: &Self) -> Result<bool, PolytopeError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(PolytopeError::DimensionMismatch {
                expected: other.ambient_dim,
                found: self.ambient_dim,
            });
        }
        let mut union = other.vertices.clone();
        union.extend(self.vertices.iter().cloned());
        Ok(Self::convex_hull(self.ambient_dim, &union)? == *other)
    }

    pub(crate) fn facets(&self) -> Result<Vec<Facet>, PolytopeError> {
        full_dim_facets(&self.vertices, self.ambient_dim)
    }
}

/// Hull of all pairwise vertex sums.
pub fn minkowski_sum(
    p: &LatticePolytope,
    q: &LatticePolytope,
) -> Result<LatticePolytope, PolytopeError> {
    if p.ambient_dim != q.ambient_dim {
        return Err(PolytopeError::DimensionMismatch {
            expected: p.ambient_dim,
            found: q.ambient_dim,
        });
    }
    if p.is_empty() || q.is_empty() {
        return Err(PolytopeError::EmptySummand);
    }
    let sums: Vec<Vec<i64>> = p
        .vertices
        .iter()
        .flat_map(|a| {
            q.vertices
                .iter()
                .map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect())
        })
        .collect();
    LatticePolytope::convex_hull(p.ambient_dim, &sums)
}

/// `d! * volume`, as an integer. Zero when empty or lower-dimensional; a
/// nonempty polytope in `R^0` counts as 1.
pub(crate) fn normalized_volume_int(p: &LatticePolytope) -> Result<BigInt, PolytopeError> {
    if p.is_empty() {
        return Ok(BigInt::zero());
    }
    if p.ambient_dim == 0 {
        return Ok(BigInt::from(1));
    }
    if !p.is_full_dimensional() {
        return Ok(BigInt::zero());
    }
    let facets = p.facets()?;
    volume::normalized_volume_full(&p.vertices, &facets, p.ambient_dim)
}

/// Euclidean volume in the ambient space (zero unless full-dimensional).
pub fn euclidean_volume(p: &LatticePolytope) -> Result<Rational, PolytopeError> {
    Ok(Rational::new(
        normalized_volume_int(p)?,
        factorial(p.ambient_dim),
    ))
}

/// `d! * euclidean_volume(p)`; always an integer for lattice polytopes.
pub fn normalized_volume(p: &LatticePolytope) -> Result<Rational, PolytopeError> {
    Ok(Rational::from_integer(normalized_volume_int(p)?))
}
