use super::{binomial, rat, MathError, Rational, UniPoly};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }
}

/// Sparse polynomial in `x` and `y` over the rationals. Keys are `(i, j)` for
/// `x^i y^j`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// `a*x + b*y + c`.
    pub fn linear(a: &Rational, b: &Rational, c: &Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(1, 0, a.clone());
        p.add_term(0, 1, b.clone());
        p.add_term(0, 0, c.clone());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree(&self, var: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(i, j)| if var == Var::X { i } else { j })
            .max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, v)| (k, v * c)))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(Rational::one()), |acc, _| &acc * self)
    }

    pub fn derivative(&self, var: Var) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(&(i, j), c)| match var {
            Var::X if i > 0 => Some(((i - 1, j), c * rat(i64::from(i)))),
            Var::Y if j > 0 => Some(((i, j - 1), c * rat(i64::from(j)))),
            _ => None,
        }))
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_vars(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())))
    }

    /// Substitutes `x -> x + lambda*y`.
    pub fn shear(&self, lambda: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            let mut lam_pow = Rational::one();
            for k in 0..=i {
                let coeff = c * Rational::from_integer(binomial(i as usize, k as usize)) * &lam_pow;
                out.add_term(i - k, j + k, coeff);
                lam_pow *= lambda;
            }
        }
        out
    }

    /// Coefficients with respect to `var`: entry `k` is the coefficient of
    /// `var^k` as a polynomial in the other variable.
    pub fn coefficients_in(&self, var: Var) -> Vec<UniPoly> {
        let Some(d) = self.degree(var) else {
            return Vec::new();
        };
        let mut dense: Vec<Vec<Rational>> = vec![Vec::new(); d as usize + 1];
        for (&(i, j), c) in &self.terms {
            let (k, other) = if var == Var::X { (i, j) } else { (j, i) };
            let row = &mut dense[k as usize];
            if row.len() <= other as usize {
                row.resize(other as usize + 1, Rational::zero());
            }
            row[other as usize] = c.clone();
        }
        dense.into_iter().map(UniPoly::from_coeffs).collect()
    }

    /// Inverse of [`BiPoly::coefficients_in`].
    pub fn from_coefficients_in(var: Var, coeffs: &[UniPoly]) -> Self {
        let mut out = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            for (o, v) in c.coeffs().iter().enumerate() {
                let (i, j) = if var == Var::X {
                    (k as u32, o as u32)
                } else {
                    (o as u32, k as u32)
                };
                out.add_term(i, j, v.clone());
            }
        }
        out
    }

    /// Leading coefficient with respect to `var`, a polynomial in the other one.
    pub fn leading_in(&self, var: Var) -> UniPoly {
        self.coefficients_in(var)
            .pop()
            .unwrap_or_else(UniPoly::zero)
    }

    /// Exact quotient `self / d` where `d` has a constant leading coefficient
    /// in `y`. Returns `Ok(None)` when the division leaves a remainder.
    pub fn div_exact_y(&self, d: &BiPoly) -> Result<Option<BiPoly>, MathError> {
        let dy = d.degree(Var::Y).ok_or(MathError::DivisionByZero)?;
        let lc = d.leading_in(Var::Y);
        if !lc.is_constant() {
            return Err(MathError::InexactDivision);
        }
        let lc_inv = lc.coeff(0).recip();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some(ry) = rem.degree(Var::Y) {
            if ry < dy {
                return Ok(None);
            }
            let lead = rem.leading_in(Var::Y).scale(&lc_inv);
            let shift = ry - dy;
            let step = BiPoly::from_terms(
                lead.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(o, c)| ((o as u32, shift), c.clone())),
            );
            rem = &rem - &(&step * d);
            quot = &quot + &step;
        }
        Ok(Some(quot))
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, (&(i, j), c)| {
                acc + c
                    * num_traits::pow(x.clone(), i as usize)
                    * num_traits::pow(y.clone(), j as usize)
            })
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(i, j), c)| format!("({c})*x^{i}*y^{j}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shear_substitutes() {
        // x^2 under x -> x + 2y is x^2 + 4xy + 4y^2
        let p = BiPoly::x().pow(2).shear(&rat(2));
        let expected = BiPoly::from_terms([((2, 0), rat(1)), ((1, 1), rat(4)), ((0, 2), rat(4))]);
        assert_eq!(p, expected);
    }

    #[test]
    fn coefficient_round_trip() {
        let p = BiPoly::from_terms([((2, 1), rat(3)), ((0, 3), rat(-1)), ((1, 0), rat(5))]);
        for var in [Var::X, Var::Y] {
            assert_eq!(
                BiPoly::from_coefficients_in(var, &p.coefficients_in(var)),
                p
            );
        }
        assert_eq!(p.degree(Var::X), Some(2));
        assert_eq!(p.degree(Var::Y), Some(3));
        assert_eq!(p.leading_in(Var::Y), UniPoly::from_i64(&[-1]));
    }

    #[test]
    fn exact_division_by_linear_form() {
        let l = BiPoly::linear(&rat(1), &rat(3), &rat(-2));
        let q = BiPoly::from_terms([((2, 0), rat(1)), ((0, 1), rat(7))]);
        let prod = &l * &q;
        assert_eq!(prod.div_exact_y(&l).unwrap(), Some(q.clone()));
        assert_eq!((&prod + &BiPoly::x()).div_exact_y(&l).unwrap(), None);
    }

    #[test]
    fn derivative_and_eval() {
        let p = BiPoly::from_terms([((2, 1), rat(3)), ((0, 0), rat(1))]);
        assert_eq!(p.derivative(Var::X), BiPoly::monomial(rat(6), 1, 1));
        assert_eq!(p.eval(&rat(2), &rat(3)), rat(37));
        assert_eq!(p.swap_vars().eval(&rat(3), &rat(2)), rat(37));
    }
}
