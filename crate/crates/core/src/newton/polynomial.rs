use super::NewtonError;
use crate::exactmath::Rational;
use crate::polytope::{HomogeneousPolytope, LatticePolytope};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial in `nvars` variables with rational coefficients.
/// Exponents may be negative; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl LaurentPolynomial {
    pub fn new<I>(nvars: usize, terms: I) -> Result<Self, NewtonError>
    where
        I: IntoIterator<Item = (Vec<i64>, Rational)>,
    {
        let mut map: BTreeMap<Vec<i64>, Rational> = BTreeMap::new();
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(NewtonError::VariableCount {
                    expected: nvars,
                    found: exp.len(),
                });
            }
            *map.entry(exp).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Self { nvars, terms: map })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    /// Hull of the exponent vectors.
    pub fn newton_polytope(&self) -> Result<LatticePolytope, NewtonError> {
        if self.is_zero() {
            return Err(NewtonError::ZeroPolynomial);
        }
        Ok(LatticePolytope::convex_hull(self.nvars, &self.support())?)
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Canonical text: terms by descending exponent vector, variables `x, y, z`
    /// for up to three variables and `x1, …, xn` beyond.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.nvars, self.terms.iter().rev())
    }
}

/// Homogeneous polynomial of positive degree in `nvars = n + 1` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogeneousPolynomial {
    degree: i64,
    inner: LaurentPolynomial,
}

impl HomogeneousPolynomial {
    pub fn from_laurent(p: LaurentPolynomial) -> Result<Self, NewtonError> {
        let mut degree = None;
        for exp in p.terms.keys() {
            if exp.iter().any(|&e| e < 0) {
                return Err(NewtonError::NotHomogeneous(
                    "negative exponent in a homogeneous polynomial".into(),
                ));
            }
            let d: i64 = exp.iter().sum();
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => {
                    return Err(NewtonError::NotHomogeneous(format!(
                        "terms of degree {prev} and {d}"
                    )))
                }
                _ => {}
            }
        }
        match degree {
            None => Err(NewtonError::ZeroPolynomial),
            Some(0) => Err(NewtonError::Constant),
            Some(degree) => Ok(Self { degree, inner: p }),
        }
    }

    pub fn nvars(&self) -> usize {
        self.inner.nvars
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn as_laurent(&self) -> &LaurentPolynomial {
        &self.inner
    }

    pub fn newton_polytope(&self) -> Result<HomogeneousPolytope, NewtonError> {
        Ok(HomogeneousPolytope::from_points(
            self.nvars(),
            &self.inner.support(),
        )?)
    }

    /// Renames variables: variable `i` of the result is variable `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self, NewtonError> {
        let terms = self
            .inner
            .terms
            .iter()
            .map(|(e, c)| (perm.iter().map(|&j| e[j]).collect(), c.clone()));
        Self::from_laurent(LaurentPolynomial::new(self.nvars(), terms)?)
    }
}

impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

fn variable_name(nvars: usize, i: usize) -> String {
    if nvars <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, nvars: usize, terms: I) -> fmt::Result
where
    I: Iterator<Item = (&'a Vec<i64>, &'a Rational)>,
{
    let mut first = true;
    for (exp, c) in terms {
        let sign = if c.is_negative() { "-" } else { "+" };
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        let mag = c.abs();
        let vars: Vec<String> = exp
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                let v = variable_name(nvars, i);
                if e == 1 {
                    v
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        match (vars.is_empty(), mag.is_one()) {
            (true, _) => write!(f, "{mag}")?,
            (false, true) => write!(f, "{}", vars.join("*"))?,
            (false, false) => write!(f, "{mag}*{}", vars.join("*"))?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
