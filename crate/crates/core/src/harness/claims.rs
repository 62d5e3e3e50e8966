//! Cell-level evaluators for the recurrences and explicit formulas whose
//! printed form is ambiguous or suspect.
//!
//! Each function returns `(lhs, rhs)` for one cell, where `lhs` is the value
//! from the defining construction and `rhs` is the claimed formula. Indices
//! are those of the left-hand cell: a recurrence for `{n+1, k}` is evaluated
//! here at row `n ≥ 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::psi::{q_binomial_rows, PsiSequence};
use crate::stirling::{carlitz2, cigl2, tilde2_by_recurrence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reading {
    A,
    B,
}

impl Reading {
    pub const BOTH: [Reading; 2] = [Reading::A, Reading::B];
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reading::A => f.write_str("readingA"),
            Reading::B => f.write_str("readingB"),
        }
    }
}

fn q_power(q: &Rational, exp: i64) -> Result<Rational> {
    q.checked_pow(exp)
        .ok_or_else(|| Error::Malformed(format!("q = 0 raised to the power {exp}")))
}

fn needs_row(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Malformed("recurrence cells start at row 1".into()));
    }
    Ok(())
}

/// `{n,k}_q` against `Σ_l C(n-1,l)_q q^l {l,k-1}_q`.
pub fn ex3_carlitz(q: &Rational, n: usize, k: usize) -> Result<(Rational, Rational)> {
    needs_row(n)?;
    let binom = q_binomial_rows(q, n);
    let t = carlitz2(q, n)?;
    let mut rhs = Rational::zero();
    for l in 0..n {
        rhs += binom[n - 1][l].clone() * q_power(q, l as i64)? * t.get(l, k.wrapping_sub(1));
    }
    Ok((t.get(n, k), rhs))
}

/// `{n,k}~_q` against `Σ_l C(n-1,l)_q q^(l-j+1) {l,k-1}~_q`, where the free
/// index `j` is the target column `k` (reading A) or the inner column `k - 1`
/// (reading B).
pub fn ex3_carlitz_tilde(q: &Rational, reading: Reading, n: usize, k: usize) -> Result<(Rational, Rational)> {
    needs_row(n)?;
    let seq = PsiSequence::q_gauss(q.clone());
    let binom = q_binomial_rows(q, n);
    let t = tilde2_by_recurrence(&seq, n)?;
    let j = match reading {
        Reading::A => k as i64,
        Reading::B => k as i64 - 1,
    };
    let mut rhs = Rational::zero();
    for l in 0..n {
        let inner = t.get(l, k.wrapping_sub(1));
        if inner.is_zero() {
            continue;
        }
        rhs += binom[n - 1][l].clone() * q_power(q, l as i64 - j + 1)? * inner;
    }
    Ok((t.get(n, k), rhs))
}

/// Carlitz Bell row sum `B_q(n)` against `Σ_l C(n-1,l)_q q^l B_q(l)`.
pub fn ex4_bell(q: &Rational, n: usize) -> Result<(Rational, Rational)> {
    needs_row(n)?;
    let binom = q_binomial_rows(q, n);
    let t = carlitz2(q, n)?;
    let mut rhs = Rational::zero();
    for l in 0..n {
        rhs += binom[n - 1][l].clone() * q_power(q, l as i64)? * t.row_sum(l);
    }
    Ok((t.row_sum(n), rhs))
}

/// `B~_q(n)` against `Σ_l C(n-1,l)_q q^(l-k+1) B̄~_q(l)` with the unbound `k`
/// read as the summation index inside `B̄~_q(l) = Σ_k q^k {l,k}~_q`
/// (reading A, giving `q^(l+1) B~_q(l)`) or as the first column `k = 1`
/// (reading B, giving `q^l B̄~_q(l)`).
pub fn ex4_bell_tilde(q: &Rational, reading: Reading, n: usize) -> Result<(Rational, Rational)> {
    needs_row(n)?;
    let seq = PsiSequence::q_gauss(q.clone());
    let binom = q_binomial_rows(q, n);
    let t = tilde2_by_recurrence(&seq, n)?;
    let mut rhs = Rational::zero();
    for l in 0..n {
        let weight = binom[n - 1][l].clone();
        let term = match reading {
            Reading::A => {
                let mut acc = Rational::zero();
                for (k, v) in t.row(l).iter().enumerate() {
                    acc += q_power(q, l as i64 - k as i64 + 1)? * q_power(q, k as i64)? * v;
                }
                acc
            }
            Reading::B => {
                let barred: Rational = t
                    .row(l)
                    .iter()
                    .enumerate()
                    .map(|(k, v)| q.pow(k as i64) * v)
                    .sum();
                q_power(q, l as i64)? * barred
            }
        };
        rhs += weight * term;
    }
    Ok((t.row_sum(n), rhs))
}

/// Cigler number `{n,k}` from the product expansion against
/// `Σ_l C(n-1,l)_q q^C(n-l,2) {m,k-1}` with `m = n-1-l` (reading A, as
/// printed) or `m = l` (reading B).
pub fn ex5_cigl(q: &Rational, reading: Reading, n: usize, k: usize) -> Result<(Rational, Rational)> {
    needs_row(n)?;
    let binom = q_binomial_rows(q, n);
    let t = cigl2(q, n)?;
    let mut rhs = Rational::zero();
    for l in 0..n {
        let m = match reading {
            Reading::A => n - 1 - l,
            Reading::B => l,
        };
        let inner = t.get(m, k.wrapping_sub(1));
        if inner.is_zero() {
            continue;
        }
        let e = (n - l) * (n - l - 1) / 2;
        rhs += binom[n - 1][l].clone() * q.pow(e as i64) * inner;
    }
    Ok((t.get(n, k), rhs))
}

/// `{n,k}~_ψ` against `(1/k_ψ!) Σ_{r=1}^{k} (-1)^(k-r) β(k,r) r_ψ^n`, with the
/// factor `r_ψ^n` moved inside the sum and the symbol `(k_ψ choose r_ψ)`
/// read as the ψ-binomial `C(k,r)_ψ` (reading A) or as `ψ_r(k_ψ) / r_ψ!`,
/// the ψ-falling product evaluated at `k_ψ` (reading B).
pub fn eq10_explicit(seq: &PsiSequence, reading: Reading, n: usize, k: usize) -> Result<(Rational, Rational)> {
    let t = tilde2_by_recurrence(seq, n)?;
    let k_value = seq.value(k)?;
    let mut sum = Rational::zero();
    for r in 1..=k {
        let beta = match reading {
            Reading::A => seq.binomial(k, r)?,
            Reading::B => seq.falling_poly(r)?.eval(&k_value) / seq.factorial(r)?,
        };
        let term = beta * seq.value(r)?.pow(n as i64);
        if (k - r).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= &term;
        }
    }
    Ok((t.get(n, k), sum / seq.factorial(k)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn all_hold_at_q_one() {
        let one = Rational::one();
        for n in 1..=7 {
            let (l, r) = ex4_bell(&one, n).unwrap();
            assert_eq!(l, r);
            for reading in Reading::BOTH {
                let (l, r) = ex4_bell_tilde(&one, reading, n).unwrap();
                assert_eq!(l, r, "ex4 tilde {reading} n={n}");
            }
            for k in 1..=n {
                let (l, r) = ex3_carlitz(&one, n, k).unwrap();
                assert_eq!(l, r);
                for reading in Reading::BOTH {
                    let (l, r) = ex3_carlitz_tilde(&one, reading, n, k).unwrap();
                    assert_eq!(l, r);
                    let (l, r) = ex5_cigl(&one, reading, n, k).unwrap();
                    assert_eq!(l, r, "cigl {reading} ({n},{k})");
                    let (l, r) = eq10_explicit(&PsiSequence::classical(), reading, n, k).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn cigl_reading_b_hand_value() {
        // {3,2}: 2q + q^2 from the recurrence, 1 + q + q^2 from the expansion
        let q = rat(2, 1);
        let (lhs, rhs) = ex5_cigl(&q, Reading::B, 3, 2).unwrap();
        assert_eq!(lhs, rat(7, 1));
        assert_eq!(rhs, rat(8, 1));
    }

    #[test]
    fn cigl_reading_a_fails_early() {
        // {2,1}: the printed recurrence yields 1 while the expansion gives q
        let q = rat(2, 1);
        let (lhs, rhs) = ex5_cigl(&q, Reading::A, 2, 1).unwrap();
        assert_eq!((lhs, rhs), (rat(2, 1), rat(1, 1)));
        let (lhs, rhs) = ex5_cigl(&q, Reading::A, 3, 2).unwrap();
        assert_eq!(lhs, rat(7, 1));
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn carlitz_convolution_hand_value() {
        // {3,2}_q = 2q + q^2, the q-binomial convolution gives q + 2q^2
        let q = rat(3, 1);
        let (lhs, rhs) = ex3_carlitz(&q, 3, 2).unwrap();
        assert_eq!(lhs, rat(15, 1));
        assert_eq!(rhs, rat(21, 1));
    }
}
