use super::{HomogeneousPolynomial, NewtonError};
use crate::exactmath::binomial;
use crate::polytope::{coordinate_section, m_sequence, HomogeneousPolytope};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `V[k][l]` for `0 <= l <= k <= n`: the sum of `m_l` over the sections of a
/// homogeneous polytope by all `(k+1)`-dimensional coordinate planes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VTable {
    n: usize,
    rows: Vec<Vec<BigInt>>,
}

impl VTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize, l: usize) -> &BigInt {
        &self.rows[k][l]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `ν_i = V[n][i] - V[n-1][i-1] + … + (-1)^i V[n-i][0]`.
    pub fn newton_numbers(&self) -> Vec<BigInt> {
        let n = self.n;
        (0..=n)
            .map(|i| {
                (0..=i).fold(BigInt::zero(), |acc, j| {
                    let v = &self.rows[n - j][i - j];
                    if j % 2 == 0 {
                        acc + v
                    } else {
                        acc - v
                    }
                })
            })
            .collect()
    }
}

/// Milnor numbers `μ^0, …, μ^n`: the bidegrees of the graph of the gradient map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorVector {
    values: Vec<BigInt>,
}

impl MilnorVector {
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `μ^n`, the degree of the gradient map.
    pub fn gradient_degree(&self) -> &BigInt {
        self.values.last().expect("nonempty")
    }
}

pub fn v_table(delta_star: &HomogeneousPolytope) -> Result<VTable, NewtonError> {
    let dim = delta_star.ambient_dim();
    if dim == 0 {
        return Err(NewtonError::NotHomogeneous("no coordinates".into()));
    }
    let n = dim - 1;
    let mut rows: Vec<Vec<BigInt>> = (0..=n).map(|k| vec![BigInt::zero(); k + 1]).collect();
    for mask in 1u64..(1u64 << dim) {
        let coords: Vec<usize> = (0..dim).filter(|&i| mask & (1 << i) != 0).collect();
        let k = coords.len() - 1;
        let section = coordinate_section(delta_star, &coords);
        for (l, m) in m_sequence(&section)?.into_iter().enumerate() {
            rows[k][l] += m;
        }
    }
    Ok(VTable { n, rows })
}

pub fn newton_numbers(delta_star: &HomogeneousPolytope) -> Result<Vec<BigInt>, NewtonError> {
    Ok(v_table(delta_star)?.newton_numbers())
}

/// Solves `Σ_{i<=j} (-1)^i μ^i C(n-i, j-i) = (-1)^j ν_j` for `j = 0..=n`,
/// which equates `Σ (-1)^i μ^i H^i (1+H)^(n-i)` with `Σ (-1)^j ν_j H^j`.
pub fn milnor_vector(nu: &[BigInt], n: usize) -> MilnorVector {
    assert_eq!(nu.len(), n + 1, "need ν_0..ν_n");
    if !nu[0].is_one() {
        log::warn!("ν_0 = {} (expected 1 for a nonempty polytope)", nu[0]);
    }
    let mut mu: Vec<BigInt> = Vec::with_capacity(n + 1);
    #[allow(clippy::needless_range_loop)]
    for j in 0..=n {
        let s = (0..j).fold(BigInt::zero(), |acc, i| {
            let term = &mu[i] * binomial(n - i, j - i);
            if i % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        });
        // (-1)^j μ^j = (-1)^j ν_j - s
        let mj = if j % 2 == 0 { &nu[j] - s } else { &nu[j] + s };
        mu.push(mj);
    }
    MilnorVector { values: mu }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradientReport {
    pub v_table: VTable,
    pub nu: Vec<BigInt>,
    pub mu: MilnorVector,
    pub gradient_degree: BigInt,
    pub homaloidal: bool,
}

/// Degree of the gradient map of a nondegenerate homogeneous polynomial, read
/// off its Newton polytope.
pub fn gradient_degree(h: &HomogeneousPolynomial) -> Result<GradientReport, NewtonError> {
    let delta = h.newton_polytope()?;
    let table = v_table(&delta)?;
    let nu = table.newton_numbers();
    let mu = milnor_vector(&nu, table.n());
    let degree = mu.gradient_degree().clone();
    Ok(GradientReport {
        homaloidal: degree.is_one(),
        gradient_degree: degree,
        v_table: table,
        nu,
        mu,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::newton::LaurentPolynomial;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn hp(points: &[&[i64]]) -> HomogeneousPolytope {
        let pts: Vec<Vec<i64>> = points.iter().map(|p| p.to_vec()).collect();
        HomogeneousPolytope::from_points(pts[0].len(), &pts).unwrap()
    }

    fn homog(nvars: usize, terms: &[&[i64]]) -> HomogeneousPolynomial {
        let l = LaurentPolynomial::new(nvars, terms.iter().map(|e| (e.to_vec(), rat(1)))).unwrap();
        HomogeneousPolynomial::from_laurent(l).unwrap()
    }

    #[test]
    fn conic_table() {
        let t = v_table(&hp(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]])).unwrap();
        assert_eq!(t.rows(), &[big(&[3]), big(&[3, 6]), big(&[1, 2, 4])]);
        assert_eq!(t.newton_numbers(), big(&[1, -1, 1]));
    }

    #[test]
    fn xyz_table() {
        let t = v_table(&hp(&[&[1, 1, 1]])).unwrap();
        assert_eq!(t.rows(), &[big(&[0]), big(&[0, 0]), big(&[1, 0, 0])]);
        assert_eq!(t.newton_numbers(), big(&[1, 0, 0]));
    }

    #[test]
    fn conic_plus_tangent_table() {
        let t = v_table(&hp(&[&[2, 1, 0], &[0, 2, 1]])).unwrap();
        assert_eq!(t.rows(), &[big(&[0]), big(&[2, 0]), big(&[1, 2, 0])]);
        assert_eq!(t.newton_numbers(), big(&[1, 0, 0]));
    }

    #[test]
    fn milnor_examples() {
        assert_eq!(
            milnor_vector(&big(&[1, -1, 1]), 2).values(),
            big(&[1, 1, 1]).as_slice()
        );
        assert_eq!(
            milnor_vector(&big(&[1, 0, 0]), 2).values(),
            big(&[1, 2, 1]).as_slice()
        );
        for a in -3..=3 {
            for b in -3..=3 {
                let mu = milnor_vector(&big(&[1, a, b]), 2);
                assert_eq!(*mu.gradient_degree(), BigInt::from(1 + a + b));
            }
        }
    }

    #[test]
    fn gradient_degrees() {
        let conic = homog(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        let r = gradient_degree(&conic).unwrap();
        assert_eq!(r.gradient_degree, BigInt::from(1));
        assert!(r.homaloidal);
        assert_eq!(r.mu.values(), big(&[1, 1, 1]).as_slice());

        // z3^2 z0 + z3 z4 z1 + z4^2 z2
        let gordan_noether = homog(5, &[&[1, 0, 0, 2, 0], &[0, 1, 0, 1, 1], &[0, 0, 1, 0, 2]]);
        let r = gradient_degree(&gordan_noether).unwrap();
        assert_eq!(r.gradient_degree, BigInt::from(0));
        assert!(!r.homaloidal);

        // z0 z3^2 + z1 z2 z3 + z2^3
        let homaloidal = homog(4, &[&[1, 0, 0, 2], &[0, 1, 1, 1], &[0, 0, 3, 0]]);
        assert_eq!(
            gradient_degree(&homaloidal).unwrap().gradient_degree,
            BigInt::from(1)
        );
    }
}
