use super::{mixed_volume_pair_sequence, LatticePolytope, PolytopeError};
use num_bigint::BigInt;

/// Lattice polytope lying in the hyperplane `x_0 + … + x_n = level` of
/// `R^(n+1)` with nonnegative coordinates, such as the Newton polytope of a
/// homogeneous polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogeneousPolytope {
    ambient_dim: usize,
    level: i64,
    vertices: Vec<Vec<i64>>,
}

impl HomogeneousPolytope {
    pub fn from_points(ambient_dim: usize, points: &[Vec<i64>]) -> Result<Self, PolytopeError> {
        let hull = LatticePolytope::convex_hull(ambient_dim, points)?;
        let level = points.first().map_or(0, |p| p.iter().sum());
        for p in points {
            if p.iter().any(|&c| c < 0) {
                return Err(PolytopeError::NotHomogeneous(format!(
                    "negative coordinate in {p:?}"
                )));
            }
            if p.iter().sum::<i64>() != level {
                return Err(PolytopeError::NotHomogeneous(format!(
                    "{p:?} does not sum to {level}"
                )));
            }
        }
        Ok(Self {
            ambient_dim,
            level,
            vertices: hull.vertices,
        })
    }

    pub fn empty(ambient_dim: usize, level: i64) -> Self {
        Self {
            ambient_dim,
            level,
            vertices: Vec::new(),
        }
    }

    /// `conv{e_0, …, e_n}` at level 1.
    pub fn standard_simplex(n: usize) -> Self {
        let points: Vec<Vec<i64>> = (0..=n)
            .map(|i| {
                let mut e = vec![0; n + 1];
                e[i] = 1;
                e
            })
            .collect();
        Self::from_points(n + 1, &points).expect("standard simplex is homogeneous")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Permutes coordinates: coordinate `i` of the result is coordinate
    /// `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self, PolytopeError> {
        let pts: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .map(|v| perm.iter().map(|&j| v[j]).collect())
            .collect();
        if pts.is_empty() {
            return Ok(Self::empty(self.ambient_dim, self.level));
        }
        Self::from_points(self.ambient_dim, &pts)
    }
}

/// Drops coordinate 0. On the level hyperplane this is a lattice-preserving
/// affine isomorphism onto `R^n`.
pub fn homog_project(p: &HomogeneousPolytope) -> Result<LatticePolytope, PolytopeError> {
    if p.is_empty() {
        return Err(PolytopeError::Empty);
    }
    let mut vertices: Vec<Vec<i64>> = p.vertices.iter().map(|v| v[1..].to_vec()).collect();
    vertices.sort();
    Ok(LatticePolytope {
        ambient_dim: p.ambient_dim - 1,
        vertices,
    })
}

/// Intersection of `p` with the coordinate plane spanned by the indices in
/// `coords`, re-indexed into `R^|coords|`.
///
/// With nonnegative coordinates the intersection is the face minimizing the
/// sum of the dropped coordinates (or empty), so it is the hull of the
/// vertices supported on `coords`.
pub fn coordinate_section(p: &HomogeneousPolytope, coords: &[usize]) -> HomogeneousPolytope {
    let mut j: Vec<usize> = coords.to_vec();
    j.sort_unstable();
    j.dedup();
    let vertices: Vec<Vec<i64>> = p
        .vertices
        .iter()
        .filter(|v| v.iter().enumerate().all(|(i, &c)| c == 0 || j.contains(&i)))
        .map(|v| j.iter().map(|&i| v[i]).collect())
        .collect();
    HomogeneousPolytope {
        ambient_dim: j.len(),
        level: p.level,
        vertices,
    }
}

/// `[m_0, …, m_k]` with `m_l = MV_k(Δ_o^(k-l), p^l)` for `p` in `R^(k+1)`;
/// all zeros when `p` is empty.
pub fn m_sequence(p: &HomogeneousPolytope) -> Result<Vec<BigInt>, PolytopeError> {
    let k = p.ambient_dim.saturating_sub(1);
    if p.is_empty() {
        return Ok(vec![BigInt::from(0); k + 1]);
    }
    if k == 0 {
        return Ok(vec![BigInt::from(1)]);
    }
    let proj = homog_project(p)?;
    mixed_volume_pair_sequence(&LatticePolytope::standard_simplex(k), &proj, k)
}
