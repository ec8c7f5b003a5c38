use super::{LatticePolytope, PolytopeError};
use crate::exactmath::{factorial, rat, Rational, UniPoly};
use num_bigint::BigInt;

const ENUMERATION_BUDGET: u128 = 50_000_000;

/// Normalized volume recovered from lattice-point counts of `t * p` for
/// `t = 0..=d`: the Ehrhart polynomial is interpolated and its leading
/// coefficient scaled by `d!`. Independent of the triangulation route.
pub fn ehrhart_normalized_volume(p: &LatticePolytope) -> Result<BigInt, PolytopeError> {
    let d = p.ambient_dim();
    if d == 0 || d > 3 || !p.is_full_dimensional() {
        return Err(PolytopeError::DimensionDeficient);
    }
    let facets = p.facets()?;
    let mut samples = Vec::with_capacity(d + 1);
    for t in 0..=d as i64 {
        let lo: Vec<i64> = (0..d)
            .map(|k| p.vertices().iter().map(|v| v[k]).min().unwrap() * t)
            .collect();
        let hi: Vec<i64> = (0..d)
            .map(|k| p.vertices().iter().map(|v| v[k]).max().unwrap() * t)
            .collect();
        let boxsize: u128 = lo
            .iter()
            .zip(&hi)
            .map(|(a, b)| (b - a + 1) as u128)
            .product();
        if boxsize > ENUMERATION_BUDGET {
            return Err(PolytopeError::TooLarge(boxsize));
        }
        let mut count: i64 = 0;
        let mut x = lo.clone();
        'outer: loop {
            if facets
                .iter()
                .all(|f| f.value(&x) <= i128::from(f.offset) * i128::from(t))
            {
                count += 1;
            }
            for k in 0..d {
                if x[k] < hi[k] {
                    x[k] += 1;
                    continue 'outer;
                }
                x[k] = lo[k];
            }
            break;
        }
        samples.push((rat(t), rat(count)));
    }
    let ehrhart = UniPoly::interpolate(&samples);
    let v = ehrhart.coeff(d) * Rational::from_integer(factorial(d));
    debug_assert!(v.is_integer());
    Ok(v.to_integer())
}
