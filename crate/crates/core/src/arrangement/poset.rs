use super::Arrangement;
use crate::exactmath::{BigInt, RatMatrix, Rational};
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Nonempty intersection of a subfamily of hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    /// Nonzero rows of the rref of the stacked `[a | b]` equations.
    pub signature: Vec<Vec<Rational>>,
    pub dim: usize,
    /// Indices of all hyperplanes containing the flat, ascending.
    pub hyperplanes: Vec<usize>,
    /// `μ(0̂, X)`.
    pub mobius: BigInt,
}

/// Flats ordered by decreasing dimension; the first is the ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionPoset {
    dim: usize,
    flats: Vec<Flat>,
}

impl IntersectionPoset {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    /// `X ≤ Y` in the order by reverse inclusion.
    pub fn below(&self, x: usize, y: usize) -> bool {
        let (hx, hy) = (&self.flats[x].hyperplanes, &self.flats[y].hyperplanes);
        hx.iter().all(|i| hy.binary_search(i).is_ok())
    }
}

fn signature(rows: Vec<Vec<Rational>>, cols: usize) -> Option<Vec<Vec<Rational>>> {
    if rows.is_empty() {
        return Some(Vec::new());
    }
    let m = RatMatrix::from_rows(cols, rows).expect("consistent row lengths");
    let (rank, r, pivots) = m.rref_with_pivots();
    if pivots.last() == Some(&(cols - 1)) {
        return None;
    }
    Some((0..rank).map(|i| r.row(i).to_vec()).collect())
}

pub fn intersection_poset(a: &Arrangement) -> IntersectionPoset {
    let cols = a.dim() + 1;
    let rows: Vec<Vec<Rational>> = a.hyperplanes().iter().map(|h| h.augmented()).collect();
    let contains = |sig: &[Vec<Rational>], i: usize| {
        let mut stacked = sig.to_vec();
        stacked.push(rows[i].clone());
        signature(stacked, cols).is_some_and(|s| s.len() == sig.len())
    };

    let mut flats = vec![Flat {
        signature: Vec::new(),
        dim: a.dim(),
        hyperplanes: Vec::new(),
        mobius: BigInt::one(),
    }];
    let mut seen: HashMap<Vec<Vec<Rational>>, usize> = HashMap::new();
    seen.insert(Vec::new(), 0);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &x in &frontier {
            for i in 0..rows.len() {
                if flats[x].hyperplanes.binary_search(&i).is_ok() {
                    continue;
                }
                let mut stacked = flats[x].signature.clone();
                stacked.push(rows[i].clone());
                let Some(sig) = signature(stacked, cols) else {
                    continue;
                };
                if seen.contains_key(&sig) {
                    continue;
                }
                let hyperplanes = (0..rows.len()).filter(|&j| contains(&sig, j)).collect();
                seen.insert(sig.clone(), flats.len());
                next.push(flats.len());
                flats.push(Flat {
                    dim: a.dim() - sig.len(),
                    signature: sig,
                    hyperplanes,
                    mobius: BigInt::zero(),
                });
            }
        }
        frontier = next;
    }

    flats.sort_by(|p, q| {
        q.dim
            .cmp(&p.dim)
            .then_with(|| p.hyperplanes.cmp(&q.hyperplanes))
    });
    let mut poset = IntersectionPoset {
        dim: a.dim(),
        flats,
    };
    for x in 1..poset.flats.len() {
        let below: BigInt = (0..x)
            .filter(|&y| poset.below(y, x))
            .map(|y| poset.flats[y].mobius.clone())
            .sum();
        poset.flats[x].mobius = -below;
    }
    debug_assert!((1..poset.flats.len()).all(|x| {
        (0..=x)
            .filter(|&y| poset.below(y, x))
            .map(|y| poset.flats[y].mobius.clone())
            .sum::<BigInt>()
            .is_zero()
    }));
    poset
}

#[cfg(test)]
mod tests {
    use super::super::tests::{arr, boolean2, generic3};
    use super::*;

    fn summary(a: &Arrangement) -> Vec<(usize, i64)> {
        intersection_poset(a)
            .flats()
            .iter()
            .map(|f| (f.dim, i64::try_from(f.mobius.clone()).unwrap()))
            .collect()
    }

    #[test]
    fn small_posets() {
        assert_eq!(summary(&arr(2, &[])), vec![(2, 1)]);
        assert_eq!(summary(&boolean2()), vec![(2, 1), (1, -1), (1, -1), (0, 1)]);
        assert_eq!(
            summary(&generic3()),
            vec![(2, 1), (1, -1), (1, -1), (1, -1), (0, 1), (0, 1), (0, 1)]
        );
    }

    #[test]
    fn concurrent_point_has_multiplicity() {
        let a = arr(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, -1], 0)]);
        let p = intersection_poset(&a);
        let origin = p.flats().last().unwrap();
        assert_eq!(origin.hyperplanes, vec![0, 1, 2]);
        assert_eq!(origin.mobius, BigInt::from(2));
        assert_eq!(p.flats().len(), 5);
    }

    #[test]
    fn parallel_lines_do_not_meet() {
        let p = intersection_poset(&arr(2, &[(&[1, 0], 0), (&[1, 0], -1)]));
        assert_eq!(p.flats().len(), 3);
    }
}
