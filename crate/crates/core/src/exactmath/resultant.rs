use super::{integer_determinant, BiPoly, MathError, Rational, UniPoly, Var};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Sylvester resultant of `p` and `q` with respect to `eliminate`, as a
/// polynomial in the remaining variable.
///
/// The Sylvester matrix has polynomial entries; its determinant is recovered
/// by evaluating the matrix at enough integer points, taking fraction-free
/// Bareiss determinants of the integer matrices, and interpolating. The
/// number of sample points is one more than the row-degree bound of the
/// determinant, so the interpolation is exact.
pub fn sylvester_resultant(p: &BiPoly, q: &BiPoly, eliminate: Var) -> Result<UniPoly, MathError> {
    let m = p.degree(eliminate).ok_or(MathError::NothingToEliminate)? as usize;
    let n = q.degree(eliminate).ok_or(MathError::NothingToEliminate)? as usize;
    if m == 0 || n == 0 {
        return Err(MathError::NothingToEliminate);
    }
    let (pc, p_scale) = integer_coefficients(&p.coefficients_in(eliminate));
    let (qc, q_scale) = integer_coefficients(&q.coefficients_in(eliminate));

    let deg_p = pc.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1);
    let deg_q = qc.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1);
    let bound = n * deg_p + m * deg_q;

    let size = m + n;
    let mut samples = Vec::with_capacity(bound + 1);
    for s in 0..=bound {
        let x = BigInt::from(s);
        let pv: Vec<BigInt> = pc.iter().map(|c| eval_int(c, &x)).collect();
        let qv: Vec<BigInt> = qc.iter().map(|c| eval_int(c, &x)).collect();
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for row in 0..n {
            for (k, v) in pv.iter().enumerate() {
                mat[row][row + m - k] = v.clone();
            }
        }
        for row in 0..m {
            for (k, v) in qv.iter().enumerate() {
                mat[n + row][row + n - k] = v.clone();
            }
        }
        samples.push((
            Rational::from_integer(x),
            Rational::from_integer(integer_determinant(mat)),
        ));
    }
    let res = UniPoly::interpolate(&samples);
    // Res(a p, b q) = a^n b^m Res(p, q)
    let scale = num_traits::pow(p_scale, n) * num_traits::pow(q_scale, m);
    Ok(res.scale(&Rational::from_integer(scale).recip()))
}

/// Clears denominators across all coefficient polynomials at once.
fn integer_coefficients(coeffs: &[UniPoly]) -> (Vec<Vec<BigInt>>, BigInt) {
    let lcm = coeffs
        .iter()
        .flat_map(|c| c.coeffs().iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let l = Rational::from_integer(lcm.clone());
    let ints = coeffs
        .iter()
        .map(|c| c.coeffs().iter().map(|v| (v * &l).to_integer()).collect())
        .collect();
    (ints, lcm)
}

fn eval_int(c: &[BigInt], x: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a)
}
