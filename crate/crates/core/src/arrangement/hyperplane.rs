use super::ArrangementError;
use crate::exactmath::{rat, Rational};
use num_traits::Zero;
use std::fmt;

/// `{a·x + b = 0}`, scaled so that the first nonzero entry of `a` is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    normal: Vec<Rational>,
    offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Self, ArrangementError> {
        let Some(lead) = normal.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(ArrangementError::ZeroNormal);
        };
        Ok(Self {
            normal: normal.iter().map(|c| c / &lead).collect(),
            offset: offset / lead,
        })
    }

    pub fn from_i64(normal: &[i64], offset: i64) -> Result<Self, ArrangementError> {
        Self::new(normal.iter().map(|&c| rat(c)).collect(), rat(offset))
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// Index of the first nonzero normal entry (which is 1).
    pub fn pivot(&self) -> usize {
        self.normal
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero normal")
    }

    /// The row `[a | b]`.
    pub(crate) fn augmented(&self) -> Vec<Rational> {
        let mut row = self.normal.clone();
        row.push(self.offset.clone());
        row
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.normal
            .iter()
            .zip(x)
            .fold(self.offset.clone(), |acc, (a, x)| acc + a * x)
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.normal.iter().map(ToString::to_string).collect();
        write!(f, "[{}]·x + {} = 0", a.join(", "), self.offset)
    }
}

/// Distinct affine hyperplanes in `C^dim`. Dimension 0 is allowed so that
/// restrictions of line arrangements stay in this type; such an arrangement
/// has no hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self, ArrangementError> {
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.dim() != dim {
                return Err(ArrangementError::DimensionMismatch {
                    expected: dim,
                    found: h.dim(),
                });
            }
            if let Some(j) = hyperplanes[..i].iter().position(|g| g == h) {
                return Err(ArrangementError::Duplicate {
                    first: j,
                    second: i,
                });
            }
        }
        Ok(Self { dim, hyperplanes })
    }

    /// Like [`Arrangement::new`] but silently drops repeats.
    pub fn deduplicated(
        dim: usize,
        hyperplanes: Vec<Hyperplane>,
    ) -> Result<Self, ArrangementError> {
        let mut unique: Vec<Hyperplane> = Vec::with_capacity(hyperplanes.len());
        for h in hyperplanes {
            if !unique.contains(&h) {
                unique.push(h);
            }
        }
        Self::new(dim, unique)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn position(&self, h: &Hyperplane) -> Option<usize> {
        self.hyperplanes.iter().position(|g| g == h)
    }

    /// Complement of the arrangement contains `x`.
    pub fn avoids(&self, x: &[Rational]) -> bool {
        self.hyperplanes.iter().all(|h| !h.eval(x).is_zero())
    }
}
