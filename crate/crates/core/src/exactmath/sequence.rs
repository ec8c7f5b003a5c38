use super::MathError;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SequenceProperties {
    pub logconcave: bool,
    pub no_internal_zeros: bool,
    pub nonnegative: bool,
}

impl SequenceProperties {
    pub fn all(&self) -> bool {
        self.logconcave && self.no_internal_zeros && self.nonnegative
    }
}

/// Checks `s[i-1] * s[i+1] <= s[i]^2` at every interior index, that the
/// nonzero entries sit at consecutive indices, and that no entry is negative.
pub fn logconcave_no_internal_zeros(s: &[BigInt]) -> Result<SequenceProperties, MathError> {
    if s.is_empty() {
        return Err(MathError::EmptySequence);
    }
    let logconcave = s.windows(3).all(|w| &w[0] * &w[2] <= &w[1] * &w[1]);
    let nonzero: Vec<usize> = s
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, _)| i)
        .collect();
    let no_internal_zeros = nonzero.windows(2).all(|w| w[1] == w[0] + 1);
    let nonnegative = s.iter().all(|v| !v.is_negative());
    Ok(SequenceProperties {
        logconcave,
        no_internal_zeros,
        nonnegative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(v: &[i64]) -> (bool, bool, bool) {
        let s: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        let p = logconcave_no_internal_zeros(&s).unwrap();
        (p.logconcave, p.no_internal_zeros, p.nonnegative)
    }

    #[test]
    fn examples() {
        assert_eq!(check(&[1, 1, 1]), (true, true, true));
        assert_eq!(check(&[1, 0, 1]), (false, false, true));
        assert_eq!(check(&[1, 3, 3]), (true, true, true));
        assert_eq!(check(&[0, 0, 2, 1, 0]), (true, true, true));
        assert_eq!(check(&[1, -1]), (true, true, false));
        assert_eq!(check(&[0]), (true, true, true));
    }

    #[test]
    fn empty_is_an_error() {
        assert_eq!(
            logconcave_no_internal_zeros(&[]),
            Err(MathError::EmptySequence)
        );
    }
}
