//! Brute-force convex hull kernel for small integer point sets.
//!
//! Facets of a full-dimensional point set are found by trying every
//! `d`-subset of points as a supporting hyperplane. That is `O(N^d)` but the
//! point sets here stay below a few dozen points in dimension at most six.

use super::PolytopeError;
use crate::exactmath::{rat, RatMatrix};
use num_integer::Integer;
use std::collections::BTreeSet;

/// Inequality `normal · x <= offset` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    pub fn value(&self, p: &[i64]) -> i128 {
        dot(&self.normal, p)
    }

    pub fn is_tight(&self, p: &[i64]) -> bool {
        self.value(p) == i128::from(self.offset)
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| i128::from(x) * i128::from(y))
        .sum()
}

/// Determinant of a small square integer matrix by Bareiss elimination in
/// `i128`. `None` on overflow.
pub(crate) fn det_i128(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut negate = false;
    let mut prev: i128 = 1;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return Some(0);
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[k][k].checked_mul(m[i][j])?;
                let b = m[i][k].checked_mul(m[k][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
        }
        prev = m[k][k];
    }
    let d = m[n - 1][n - 1];
    Some(if negate { -d } else { d })
}

/// Rank of the affine span of `points` (0 for a single point).
pub(crate) fn affine_rank<P: AsRef<[i64]>>(points: &[P]) -> usize {
    affine_projection(points).len()
}

/// Coordinates onto which projection is injective on the affine span of
/// `points`; their number is the affine rank.
pub(crate) fn affine_projection<P: AsRef<[i64]>>(points: &[P]) -> Vec<usize> {
    let Some(first) = points.first() else {
        return Vec::new();
    };
    let base = first.as_ref();
    let diffs: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| p.as_ref().iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    if diffs.is_empty() {
        return Vec::new();
    }
    let m = RatMatrix::from_i64_rows(&diffs).expect("rows have equal length");
    m.rref_with_pivots().2
}

fn rank_of_rows(rows: &[&[i64]]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let m = RatMatrix::from_rows(
        cols,
        rows.iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect(),
    )
    .expect("rows have equal length");
    m.rank()
}

fn gcd_normalize(normal: Vec<i128>, offset: i128) -> Result<(Vec<i64>, i64), PolytopeError> {
    let g = normal.iter().fold(0i128, |acc, &v| acc.gcd(&v));
    let to_i64 = |v: i128| i64::try_from(v / g).map_err(|_| PolytopeError::Overflow);
    let n = normal
        .into_iter()
        .map(to_i64)
        .collect::<Result<Vec<_>, _>>()?;
    Ok((n, to_i64(offset)?))
}

/// Normal of the hyperplane through `d` points in `Z^d`, or `None` if they are
/// affinely dependent.
fn hyperplane_normal(pts: &[&[i64]], d: usize) -> Result<Option<Vec<i128>>, PolytopeError> {
    let base = pts[0];
    let rows: Vec<Vec<i128>> = pts[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(base)
                .map(|(&a, &b)| i128::from(a - b))
                .collect()
        })
        .collect();
    let mut normal = Vec::with_capacity(d);
    for skip in 0..d {
        let minor: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let det = det_i128(minor).ok_or(PolytopeError::Overflow)?;
        normal.push(if skip % 2 == 0 { det } else { -det });
    }
    Ok(if normal.iter().all(|&v| v == 0) {
        None
    } else {
        Some(normal)
    })
}

/// All facets of the hull of `points`, which must span `Z^d` affinely.
pub(crate) fn full_dim_facets(points: &[Vec<i64>], d: usize) -> Result<Vec<Facet>, PolytopeError> {
    if d == 1 {
        let min = points.iter().map(|p| p[0]).min().expect("nonempty");
        let max = points.iter().map(|p| p[0]).max().expect("nonempty");
        return Ok(vec![
            Facet {
                normal: vec![-1],
                offset: -min,
            },
            Facet {
                normal: vec![1],
                offset: max,
            },
        ]);
    }
    let n = points.len();
    let mut found: BTreeSet<Facet> = BTreeSet::new();
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        let subset: Vec<&[i64]> = idx.iter().map(|&i| points[i].as_slice()).collect();
        let known = found.iter().any(|f| subset.iter().all(|p| f.is_tight(p)));
        if !known {
            if let Some(normal) = hyperplane_normal(&subset, d)? {
                let offset: i128 = normal
                    .iter()
                    .zip(subset[0])
                    .map(|(&a, &b)| a * i128::from(b))
                    .sum();
                let mut above = false;
                let mut below = false;
                for p in points {
                    let v: i128 = normal.iter().zip(p).map(|(&a, &b)| a * i128::from(b)).sum();
                    above |= v > offset;
                    below |= v < offset;
                    if above && below {
                        break;
                    }
                }
                if !(above && below) {
                    let (normal, offset) = if above {
                        (normal.iter().map(|v| -v).collect(), -offset)
                    } else {
                        (normal, offset)
                    };
                    let (normal, offset) = gcd_normalize(normal, offset)?;
                    found.insert(Facet { normal, offset });
                }
            }
        }
        // next combination
        let mut k = d;
        while k > 0 && idx[k - 1] == n - d + k - 1 {
            k -= 1;
        }
        if k == 0 {
            break;
        }
        idx[k - 1] += 1;
        for j in k..d {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(found.into_iter().collect())
}

/// A point of a full-dimensional hull is a vertex exactly when the normals of
/// the facets through it span the whole space.
pub(crate) fn vertices_from_facets(points: &[Vec<i64>], facets: &[Facet], d: usize) -> Vec<usize> {
    points
        .iter()
        .enumerate()
        .filter(|(_, p)| {
            let tight: Vec<&[i64]> = facets
                .iter()
                .filter(|f| f.is_tight(p))
                .map(|f| f.normal.as_slice())
                .collect();
            tight.len() >= d && rank_of_rows(&tight) == d
        })
        .map(|(i, _)| i)
        .collect()
}

/// Indices (into the deduplicated, sorted `points`) of the vertices of their
/// convex hull, for any affine dimension.
pub(crate) fn hull_vertex_indices(points: &[Vec<i64>]) -> Result<Vec<usize>, PolytopeError> {
    match points.len() {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![0]),
        _ => {}
    }
    let coords = affine_projection(points);
    let k = coords.len();
    let projected: Vec<Vec<i64>> = points
        .iter()
        .map(|p| coords.iter().map(|&c| p[c]).collect())
        .collect();
    let facets = full_dim_facets(&projected, k)?;
    Ok(vertices_from_facets(&projected, &facets, k))
}
