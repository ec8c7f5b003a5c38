//! Independent counts of critical points of master functions by exact
//! elimination, for line arrangements, points on a line, and curves in the
//! 2-torus.
//!
//! Counting procedure in two variables: shear `x -> x + λy` with a random
//! integer `λ`, eliminate `y` with a Sylvester resultant, remove the roots
//! coming from solutions on the boundary divisor, and count distinct roots of
//! what is left. A count is certified only when three shears in both
//! elimination orders agree and every final eliminant is squarefree.

use crate::arrangement::{ml_degree_arrangement, Arrangement, ArrangementError};
use crate::exactmath::{rat, sylvester_resultant, BiPoly, MathError, Rational, UniPoly, Var};
use crate::newton::LaurentPolynomial;
use crate::polytope::normalized_volume;
use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Shears per elimination order.
pub const SHEARS: usize = 3;
/// Redraws allowed per shear before giving up.
pub const RETRY_BUDGET: usize = 5;
/// Exponents are drawn from `[-EXPONENT_BOUND, EXPONENT_BOUND] \ {0}`.
pub const EXPONENT_BOUND: i64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriticalError {
    #[error("exponents annihilate: critical equation is identically zero")]
    ExponentsAnnihilate,
    #[error("common component: non-generic data")]
    CommonComponent,
    #[error("Newton polytope degenerate")]
    DegenerateNewton,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Math(#[from] MathError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub count: usize,
    pub certified: bool,
    pub shears_used: usize,
    pub expected: Option<BigInt>,
    pub degenerate_draws: usize,
    /// Every final eliminant was squarefree.
    pub squarefree: bool,
    /// One count per shear, first elimination order first.
    pub counts: Vec<usize>,
}

impl CountReport {
    pub fn matches_expected(&self) -> bool {
        self.expected
            .as_ref()
            .is_none_or(|e| *e == BigInt::from(self.count))
    }
}

/// `n` exponents from `[-EXPONENT_BOUND, EXPONENT_BOUND] \ {0}`.
pub fn random_exponents<R: Rng>(rng: &mut R, n: usize) -> Vec<i64> {
    (0..n)
        .map(|_| loop {
            let u = rng.gen_range(-EXPONENT_BOUND..=EXPONENT_BOUND);
            if u != 0 {
                break u;
            }
        })
        .collect()
}

/// Divides `q` by every root-set factor it shares with `b` until none is left.
fn saturate(mut q: UniPoly, b: &UniPoly) -> Result<UniPoly, MathError> {
    if b.is_zero() {
        return Ok(q);
    }
    loop {
        let g = q.gcd(b);
        if g.degree().unwrap_or(0) == 0 {
            return Ok(q);
        }
        q = q.exact_div(&g)?;
    }
}

/// Critical points of `Π (x - a_i)^(u_i)` on the line minus the points:
/// roots of `Σ u_i Π_{j≠i} (x - a_j)` away from the `a_i`.
pub fn critical_count_r1(points: &[Rational], u: &[i64]) -> Result<CountReport, CriticalError> {
    if points.len() < 2 {
        return Err(CriticalError::Invalid("need at least two points".into()));
    }
    if points.len() != u.len() {
        return Err(CriticalError::Invalid(format!(
            "{} points but {} exponents",
            points.len(),
            u.len()
        )));
    }
    for (i, a) in points.iter().enumerate() {
        if points[..i].contains(a) {
            return Err(CriticalError::Invalid(format!("repeated point {a}")));
        }
    }
    let factors: Vec<UniPoly> = points
        .iter()
        .map(|a| UniPoly::from_coeffs(vec![-a.clone(), Rational::one()]))
        .collect();
    let mut p = UniPoly::zero();
    for (i, ui) in u.iter().enumerate() {
        let mut term = UniPoly::constant(rat(*ui));
        for (j, f) in factors.iter().enumerate() {
            if j != i {
                term = &term * f;
            }
        }
        p = &p + &term;
    }
    if p.is_zero() {
        return Err(CriticalError::ExponentsAnnihilate);
    }
    let boundary = UniPoly::from_roots(points);
    let q = saturate(p, &boundary)?;
    let count = q.distinct_root_count()?;
    Ok(CountReport {
        count,
        certified: true,
        shears_used: 0,
        expected: Some(BigInt::from(points.len() - 1)),
        degenerate_draws: 0,
        squarefree: q.is_squarefree()?,
        counts: vec![count],
    })
}

/// Outcome of a single sheared elimination.
enum Attempt {
    Counted { count: usize, squarefree: bool },
    Redraw,
}

/// Divides `p` by `b` as often as it goes exactly. `None` if `b` does not have
/// a constant leading coefficient in `y`.
fn strip_factor(mut p: BiPoly, b: &BiPoly) -> Result<Option<BiPoly>, MathError> {
    if b.degree(Var::Y).unwrap_or(0) == 0 || !b.leading_in(Var::Y).is_constant() {
        return Ok(None);
    }
    loop {
        match p.div_exact_y(b)? {
            Some(q) if !p.is_zero() => p = q,
            _ => return Ok(Some(p)),
        }
    }
}

fn has_constant_lead(p: &BiPoly) -> bool {
    p.degree(Var::Y).unwrap_or(0) > 0 && p.leading_in(Var::Y).is_constant()
}

fn eliminate_once(
    p1: &BiPoly,
    p2: &BiPoly,
    boundary: &[BiPoly],
    lambda: &Rational,
) -> Result<Attempt, CriticalError> {
    let mut p1 = p1.shear(lambda);
    let mut p2 = p2.shear(lambda);
    let mut sheared = Vec::with_capacity(boundary.len());
    for b in boundary {
        let b = b.shear(lambda);
        let (Some(q1), Some(q2)) = (strip_factor(p1.clone(), &b)?, strip_factor(p2.clone(), &b)?)
        else {
            return Ok(Attempt::Redraw);
        };
        p1 = q1;
        p2 = q2;
        sheared.push(b);
    }
    if p1.is_zero() || p2.is_zero() {
        return Err(CriticalError::ExponentsAnnihilate);
    }
    if p1.total_degree() == Some(0) || p2.total_degree() == Some(0) {
        return Ok(Attempt::Counted {
            count: 0,
            squarefree: true,
        });
    }
    if !has_constant_lead(&p1) || !has_constant_lead(&p2) {
        return Ok(Attempt::Redraw);
    }
    let r = sylvester_resultant(&p1, &p2, Var::Y)?;
    if r.is_zero() {
        return Ok(Attempt::Redraw);
    }
    let mut blocker = UniPoly::one();
    for b in &sheared {
        let g = sylvester_resultant(b, &p1, Var::Y)?.gcd(&sylvester_resultant(b, &p2, Var::Y)?);
        blocker = &blocker * &g;
    }
    let q = saturate(r, &blocker)?;
    Ok(Attempt::Counted {
        count: q.distinct_root_count()?,
        squarefree: q.is_squarefree()?,
    })
}

/// Common zeros of `p1, p2` off the union of the `boundary` curves, counted
/// under `SHEARS` random shears in each elimination order.
fn count_common_zeros(
    p1: &BiPoly,
    p2: &BiPoly,
    boundary: &[BiPoly],
    seed: u64,
    expected: Option<BigInt>,
) -> Result<CountReport, CriticalError> {
    if p1.is_zero() || p2.is_zero() {
        return Err(CriticalError::ExponentsAnnihilate);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = Vec::with_capacity(2 * SHEARS);
    let mut squarefree = true;
    let mut degenerate_draws = 0;
    let swapped: Vec<BiPoly> = boundary.iter().map(BiPoly::swap_vars).collect();
    let orders = [
        (p1.clone(), p2.clone(), boundary.to_vec()),
        (p1.swap_vars(), p2.swap_vars(), swapped),
    ];
    for (q1, q2, bd) in &orders {
        for _ in 0..SHEARS {
            let mut attempts = 0;
            loop {
                let lambda = rat(rng.gen_range(1..=100));
                match eliminate_once(q1, q2, bd, &lambda)? {
                    Attempt::Counted {
                        count,
                        squarefree: sf,
                    } => {
                        counts.push(count);
                        squarefree &= sf;
                        break;
                    }
                    Attempt::Redraw => {
                        degenerate_draws += 1;
                        attempts += 1;
                        log::debug!("degenerate shear λ = {lambda}, redrawing");
                        if attempts >= RETRY_BUDGET {
                            return Err(CriticalError::CommonComponent);
                        }
                    }
                }
            }
        }
    }
    let count = counts[0];
    let agree = counts.iter().all(|&c| c == count);
    if !agree {
        log::warn!("shears disagree: {counts:?}");
    }
    Ok(CountReport {
        count,
        certified: agree && squarefree,
        shears_used: counts.len(),
        expected,
        degenerate_draws,
        squarefree,
        counts,
    })
}

fn linear_form(h: &crate::arrangement::Hyperplane) -> BiPoly {
    let a = h.normal();
    BiPoly::linear(&a[0], &a[1], h.offset())
}

/// Critical points of `Π f_i^(u_i)` on the complement of a line arrangement,
/// from `P_k = Σ u_i ∂_k f_i Π_{j≠i} f_j`.
pub fn critical_count_r2(
    a: &Arrangement,
    u: &[i64],
    seed: u64,
) -> Result<CountReport, CriticalError> {
    if a.dim() != 2 {
        return Err(CriticalError::Invalid(format!(
            "need a line arrangement, got dimension {}",
            a.dim()
        )));
    }
    if a.len() != u.len() {
        return Err(CriticalError::Invalid(format!(
            "{} hyperplanes but {} exponents",
            a.len(),
            u.len()
        )));
    }
    let expected = ml_degree_arrangement(a)?;
    let forms: Vec<BiPoly> = a.hyperplanes().iter().map(linear_form).collect();
    let mut p = [BiPoly::zero(), BiPoly::zero()];
    for (k, var) in [Var::X, Var::Y].into_iter().enumerate() {
        for (i, fi) in forms.iter().enumerate() {
            let mut term = fi.derivative(var).scale(&rat(u[i]));
            for (j, fj) in forms.iter().enumerate() {
                if j != i {
                    term = &term * fj;
                }
            }
            p[k] = &p[k] + &term;
        }
    }
    count_common_zeros(&p[0], &p[1], &forms, seed, Some(expected))
}

/// Critical points of `x^(u_1) y^(u_2)` on `{g = 0}` in the 2-torus: common
/// zeros of `g` and `u_1 y g_y - u_2 x g_x` with `xy ≠ 0`.
pub fn curve_critical_count(
    g: &LaurentPolynomial,
    u: [i64; 2],
    seed: u64,
) -> Result<CountReport, CriticalError> {
    if g.nvars() != 2 {
        return Err(CriticalError::Invalid(format!(
            "need 2 variables, got {}",
            g.nvars()
        )));
    }
    if g.terms().len() < 2 {
        return Err(CriticalError::DegenerateNewton);
    }
    let delta = g
        .newton_polytope()
        .map_err(|e| CriticalError::Invalid(e.to_string()))?;
    let expected = normalized_volume(&delta).map_err(|e| CriticalError::Invalid(e.to_string()))?;
    let shift: Vec<i64> = (0..2)
        .map(|k| g.terms().keys().map(|e| e[k]).min().expect("nonzero"))
        .collect();
    let poly = BiPoly::from_terms(g.terms().iter().map(|(e, c)| {
        (
            ((e[0] - shift[0]) as u32, (e[1] - shift[1]) as u32),
            c.clone(),
        )
    }));
    let aux = &(&BiPoly::y() * &poly.derivative(Var::Y)).scale(&rat(u[0]))
        - &(&BiPoly::x() * &poly.derivative(Var::X)).scale(&rat(u[1]));
    if aux.is_zero() {
        return Err(CriticalError::ExponentsAnnihilate);
    }
    debug_assert!(expected.is_integer());
    count_common_zeros(
        &poly,
        &aux,
        &[BiPoly::x(), BiPoly::y()],
        seed,
        Some(expected.to_integer()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Hyperplane;
    use crate::exactmath::ratio;

    fn arr(hyps: &[(&[i64], i64)]) -> Arrangement {
        Arrangement::new(
            2,
            hyps.iter()
                .map(|(a, b)| Hyperplane::from_i64(a, *b).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn laurent(terms: &[(i64, i64, Rational)]) -> LaurentPolynomial {
        LaurentPolynomial::new(2, terms.iter().map(|(i, j, c)| (vec![*i, *j], c.clone()))).unwrap()
    }

    #[test]
    fn r1_examples() {
        let r = critical_count_r1(&[rat(0), rat(1)], &[1, 1]).unwrap();
        assert_eq!(r.count, 1);
        assert!(r.squarefree);
        let r = critical_count_r1(&[rat(0), rat(1)], &[1, -1]).unwrap();
        assert_eq!(r.count, 0);
        let r = critical_count_r1(&[rat(0), rat(1), rat(2)], &[1, 1, 1]).unwrap();
        assert_eq!(r.count, 2);
        assert!(r.matches_expected());
        assert_eq!(
            critical_count_r1(&[rat(0), rat(1)], &[0, 0]),
            Err(CriticalError::ExponentsAnnihilate)
        );
        assert!(critical_count_r1(&[rat(0), rat(0)], &[1, 2]).is_err());
    }

    #[test]
    fn r2_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let generic = arr(&[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], -1)]);
        let u = random_exponents(&mut rng, 3);
        let r = critical_count_r2(&generic, &u, 1).unwrap();
        assert_eq!(r.count, 1);
        assert!(r.certified);

        let boolean = arr(&[(&[1, 0], 0), (&[0, 1], 0)]);
        let r = critical_count_r2(&boolean, &[3, 5], 1).unwrap();
        assert_eq!(r.count, 0);
        assert!(r.certified);

        let four = arr(&[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], -1), (&[1, -2], -3)]);
        let u = random_exponents(&mut rng, 4);
        let r = critical_count_r2(&four, &u, 2).unwrap();
        assert_eq!(r.count, 3);
        assert!(r.certified);
        assert_eq!(r.counts.len(), 2 * SHEARS);
    }

    #[test]
    fn r2_concurrent_lines() {
        let a = arr(&[(&[1, 0], 0), (&[0, 1], 0), (&[1, -1], 0), (&[1, 1], -2)]);
        let r = critical_count_r2(&a, &[2, 3, -7, 11], 5).unwrap();
        assert_eq!(BigInt::from(r.count), r.expected.clone().unwrap());
    }

    #[test]
    fn curve_examples() {
        let line = laurent(&[(1, 0, rat(1)), (0, 1, rat(1)), (0, 0, rat(1))]);
        let r = curve_critical_count(&line, [3, 7], 1).unwrap();
        assert_eq!(r.count, 1);
        assert!(r.certified);

        let g = laurent(&[(1, 0, rat(1)), (0, 1, rat(1)), (1, 1, rat(1))]);
        let r = curve_critical_count(&g, [3, 7], 1).unwrap();
        assert_eq!(r.count, 1);

        let quadric = laurent(&[
            (2, 0, ratio(3, 2)),
            (1, 1, rat(-5)),
            (0, 2, rat(7)),
            (1, 0, ratio(2, 3)),
            (0, 1, rat(11)),
            (0, 0, rat(-13)),
        ]);
        let r = curve_critical_count(&quadric, [17, -29], 3).unwrap();
        assert_eq!(r.count, 4);
        assert!(r.certified);
        assert!(r.matches_expected());

        let monomial = laurent(&[(1, 1, rat(1))]);
        assert_eq!(
            curve_critical_count(&monomial, [1, 1], 0),
            Err(CriticalError::DegenerateNewton)
        );
    }

    #[test]
    fn deterministic_for_seed() {
        let a = arr(&[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], -1), (&[1, -2], -3)]);
        let r1 = critical_count_r2(&a, &[5, -3, 8, 2], 11).unwrap();
        let r2 = critical_count_r2(&a, &[5, -3, 8, 2], 11).unwrap();
        assert_eq!(r1, r2);
    }
}
