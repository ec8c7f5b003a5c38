use super::{Arrangement, ArrangementError};
use crate::exactmath::{integer_determinant, BigInt};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const BUDGET: u128 = 1_000_000;

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Each `[a | b]` row scaled to coprime integers.
fn integer_rows(a: &Arrangement) -> Vec<Vec<BigInt>> {
    a.hyperplanes()
        .iter()
        .map(|h| {
            let row = h.augmented();
            let lcm = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            row.iter().map(|c| (c * &lcm).to_integer()).collect()
        })
        .collect()
}

/// Number of points of `F_p^r` off every hyperplane, by enumeration.
/// Hyperplanes are scaled to integer coefficients first; for a good prime
/// this equals `χ_A(p)`.
pub fn finite_field_complement_count(a: &Arrangement, p: u64) -> Result<u64, ArrangementError> {
    if !is_prime(p) {
        return Err(ArrangementError::NotPrime(p));
    }
    let r = a.dim();
    let total = (p as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    if total > BUDGET {
        return Err(ArrangementError::TooLarge(total));
    }
    let pb = BigInt::from(p);
    let rows: Vec<Vec<u64>> = integer_rows(a)
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| c.mod_floor(&pb).to_u64().expect("reduced"))
                .collect()
        })
        .collect();
    let mut x = vec![0u64; r];
    let mut count = 0;
    for _ in 0..total {
        let off = rows.iter().all(|row| {
            let v = x
                .iter()
                .zip(row)
                .fold(row[r], |acc, (xi, ai)| (acc + xi * ai) % p);
            v != 0
        });
        if off {
            count += 1;
        }
        for xi in x.iter_mut() {
            *xi += 1;
            if *xi < p {
                break;
            }
            *xi = 0;
        }
    }
    Ok(count)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `p` divides no nonzero minor of the integer matrix `[a | b]`, so every
/// rank in the intersection lattice survives reduction mod `p`.
pub fn is_good_prime(a: &Arrangement, p: u64) -> bool {
    if !is_prime(p) {
        return false;
    }
    let m = integer_rows(a);
    let pb = BigInt::from(p);
    let cols = a.dim() + 1;
    for k in 1..=m.len().min(cols) {
        for rs in subsets(m.len(), k) {
            for cs in subsets(cols, k) {
                let minor = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect())
                    .collect();
                let d = integer_determinant(minor);
                if !d.is_zero() && (&d % &pb).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}
