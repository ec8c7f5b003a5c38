use super::hull::{affine_rank, det_i128, Facet};
use super::PolytopeError;
use num_bigint::BigInt;
use std::collections::BTreeSet;

/// `d! * volume` of a full-dimensional polytope with the given vertices and
/// facets, as the sum of `|det|` over a pulling triangulation.
pub(crate) fn normalized_volume_full(
    vertices: &[Vec<i64>],
    facets: &[Facet],
    d: usize,
) -> Result<BigInt, PolytopeError> {
    let facet_sets: Vec<Vec<usize>> = facets
        .iter()
        .map(|f| {
            (0..vertices.len())
                .filter(|&i| f.is_tight(&vertices[i]))
                .collect()
        })
        .collect();
    let all: Vec<usize> = (0..vertices.len()).collect();
    let mut total = BigInt::from(0);
    for simplex in triangulate(&all, d, vertices, &facet_sets) {
        let base = &vertices[simplex[0]];
        let m: Vec<Vec<i128>> = simplex[1..]
            .iter()
            .map(|&i| {
                vertices[i]
                    .iter()
                    .zip(base)
                    .map(|(&a, &b)| i128::from(a - b))
                    .collect()
            })
            .collect();
        let det = det_i128(m).ok_or(PolytopeError::Overflow)?;
        total += BigInt::from(det.abs());
    }
    Ok(total)
}

/// Pulling triangulation of the face spanned by `face` (of dimension `dim`):
/// cone from its smallest vertex over every sub-face not containing it.
/// The sub-faces of a face are exactly its intersections with the polytope's
/// facets that drop the dimension by one.
fn triangulate(
    face: &[usize],
    dim: usize,
    vertices: &[Vec<i64>],
    facet_sets: &[Vec<usize>],
) -> Vec<Vec<usize>> {
    if dim == 0 {
        return vec![vec![face[0]]];
    }
    let apex = face[0];
    let mut subfaces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for fs in facet_sets {
        let sub: Vec<usize> = face.iter().copied().filter(|i| fs.contains(i)).collect();
        if sub.is_empty() || sub.len() == face.len() || sub.contains(&apex) {
            continue;
        }
        let pts: Vec<&[i64]> = sub.iter().map(|&i| vertices[i].as_slice()).collect();
        if affine_rank(&pts) == dim - 1 {
            subfaces.insert(sub);
        }
    }
    let mut out = Vec::new();
    for sub in subfaces {
        for mut simplex in triangulate(&sub, dim - 1, vertices, facet_sets) {
            simplex.insert(0, apex);
            out.push(simplex);
        }
    }
    out
}
