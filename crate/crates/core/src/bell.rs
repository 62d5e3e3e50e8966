//! Extended Bell numbers, ε-weights and truncated Dobinski-type series.
//!
//! Exact Bell values come from triangle row sums. Infinite series are summed
//! in exact rational arithmetic and reported as an [`ApproxValue`]: the
//! partial sum actually computed plus a bound on everything left out.
//!
//! The ε-weight is read as `ε(ψ, r) = Σ_{k ≥ r} (-1)^(k-r) / (k-r)_ψ!`, which
//! does not depend on `r`; the q-Gauss form may carry the extra factor
//! `q^(-C(r,2))` in front of the whole sum.

use std::fmt;

use serde::{Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactnum::{series_exp, Poly, Rational, TruncatedSeries};
use crate::harness::verdict::{check_cells, params, Counterexample, IdentityVerdict};
use crate::oracle;
use crate::psi::{PsiFamily, PsiSequence};
use crate::stirling::{carlitz2, cigl2, tilde2_by_recurrence};

/// Hard cap on the number of ε terms.
pub const EPSILON_TERM_CAP: usize = 4000;

/// Extra terms inspected past the truncation point to confirm the
/// alternating-decreasing pattern.
const LOOKAHEAD: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BellFamily {
    Classical,
    Tilde(String),
    CarlitzQ(Rational),
    Cigl(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BellSequence {
    pub family: BellFamily,
    pub values: Vec<Rational>,
}

impl BellSequence {
    pub fn get(&self, n: usize) -> &Rational {
        &self.values[n]
    }
}

/// `Σ_k {n,k}~_ψ` for `n ≤ max_n`.
pub fn bell_tilde(seq: &PsiSequence, max_n: usize) -> Result<BellSequence> {
    let t = tilde2_by_recurrence(seq, max_n)?;
    Ok(BellSequence {
        family: BellFamily::Tilde(seq.label()),
        values: (0..=max_n).map(|n| t.row_sum(n)).collect(),
    })
}

/// Classical Bell numbers as row sums of the classical triangle.
pub fn bell_classical(max_n: usize) -> Result<BellSequence> {
    let mut b = bell_tilde(&PsiSequence::classical(), max_n)?;
    b.family = BellFamily::Classical;
    Ok(b)
}

/// `B_q(n+1) = Σ_l C(n,l)_q q^l B_q(l)` from `B_q(0) = 1`.
pub fn bell_carlitz_by_recurrence(q: &Rational, max_n: usize) -> Result<BellSequence> {
    let seq = PsiSequence::q_gauss(q.clone());
    let mut values = vec![Rational::one()];
    for n in 0..max_n {
        let mut acc = Rational::zero();
        for (l, b) in values.iter().enumerate() {
            acc += seq.binomial(n, l)? * q.pow(l as i64) * b;
        }
        values.push(acc);
    }
    Ok(BellSequence { family: BellFamily::CarlitzQ(q.clone()), values })
}

/// Row sums of the Carlitz triangle.
pub fn bell_carlitz_by_rows(q: &Rational, max_n: usize) -> Result<BellSequence> {
    let t = carlitz2(q, max_n)?;
    Ok(BellSequence {
        family: BellFamily::CarlitzQ(q.clone()),
        values: (0..=max_n).map(|n| t.row_sum(n)).collect(),
    })
}

/// Row sums of the Cigler triangle.
pub fn bell_cigl(q: &Rational, max_n: usize) -> Result<BellSequence> {
    let t = cigl2(q, max_n)?;
    Ok(BellSequence {
        family: BellFamily::Cigl(q.clone()),
        values: (0..=max_n).map(|n| t.row_sum(n)).collect(),
    })
}

/// `B̄~_q(l) = Σ_k q^k {l,k}~_q` for `l ≤ max_n`.
pub fn bell_tilde_barred(q: &Rational, max_n: usize) -> Result<Vec<Rational>> {
    let t = tilde2_by_recurrence(&PsiSequence::q_gauss(q.clone()), max_n)?;
    Ok((0..=max_n)
        .map(|l| t.row(l).iter().enumerate().map(|(k, v)| q.pow(k as i64) * v).sum())
        .collect())
}

/// Bound on the part of a series that was not summed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TailBound {
    Finite(Rational),
    /// No bound could be established within the caps.
    Infinite,
}

impl TailBound {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            TailBound::Finite(r) => Some(r),
            TailBound::Infinite => None,
        }
    }

    fn scale(&self, c: &Rational) -> TailBound {
        match self {
            TailBound::Finite(r) => TailBound::Finite(r * &c.abs()),
            TailBound::Infinite => TailBound::Infinite,
        }
    }
}

impl fmt::Display for TailBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TailBound::Finite(r) => write!(f, "{r}"),
            TailBound::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for TailBound {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A truncated sum: the true value lies in
/// `[partial_sum - tail_bound, partial_sum + tail_bound]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxValue {
    pub partial_sum: Rational,
    pub tail_bound: TailBound,
    pub terms_used: usize,
    /// Set when every summed and omitted term is known to be nonnegative:
    /// the full sum (finite or not) is then at least this value.
    pub lower_bound: Option<Rational>,
}

impl ApproxValue {
    /// Whether `x` lies in the closed interval, with `slack` added on both sides.
    pub fn contains(&self, x: &Rational, slack: &Rational) -> bool {
        match &self.tail_bound {
            TailBound::Finite(t) => (&self.partial_sum - x).abs() <= t + slack,
            TailBound::Infinite => true,
        }
    }

    pub fn decimal(&self, digits: usize) -> String {
        self.partial_sum.to_decimal(digits)
    }

    /// `{partial_sum, tail_bound, terms_used, decimal}`.
    pub fn to_json(&self, digits: usize) -> Value {
        json!({
            "partial_sum": self.partial_sum.to_string(),
            "tail_bound": self.tail_bound.to_string(),
            "terms_used": self.terms_used,
            "decimal": self.decimal(digits),
        })
    }
}

/// How the ε-weight enters the Dobinski sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightConvention {
    /// `w_r = ε(ψ, r)`
    Times,
    /// `w_r = 1 / ε(ψ, r)`, as printed
    Divides,
}

impl WeightConvention {
    pub fn name(self) -> &'static str {
        match self {
            WeightConvention::Times => "times",
            WeightConvention::Divides => "divides",
        }
    }
}

impl std::str::FromStr for WeightConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "times" | "weight_times" => Ok(WeightConvention::Times),
            "divides" | "weight_divides" => Ok(WeightConvention::Divides),
            _ => Err(Error::Malformed(format!("unknown convention `{s}`"))),
        }
    }
}

/// `q^(-C(r,2))` for q-Gauss sequences when the factor is enabled, else 1.
fn q17_factor(seq: &PsiSequence, r: usize, enabled: bool) -> Rational {
    match (enabled, seq.family()) {
        (true, PsiFamily::QGauss(q)) => q.pow(-((r * r.saturating_sub(1) / 2) as i64)),
        _ => Rational::one(),
    }
}

/// Sums `Σ_{j<terms} (-1)^j / j_ψ!`, bounding the rest by `|t_terms|` when the
/// terms from `terms` on alternate and shrink over a short lookahead.
fn alternating_inverse_factorials(seq: &PsiSequence, terms: usize) -> Result<ApproxValue> {
    let term = |j: usize| -> Result<Rational> {
        let t = seq.factorial(j)?.recip().expect("ψ-factorials are nonzero");
        Ok(if j.is_multiple_of(2) { t } else { -t })
    };
    let mut partial = Rational::zero();
    for j in 0..terms {
        partial += term(j)?;
    }
    let window: Result<Vec<Rational>> = (terms..=terms + LOOKAHEAD).map(term).collect();
    let tail = match window {
        Ok(w) => {
            let alternating = w.windows(2).all(|p| p[0].is_positive() != p[1].is_positive());
            let shrinking = w.windows(2).all(|p| p[1].abs() <= p[0].abs());
            if alternating && shrinking {
                TailBound::Finite(w[0].abs())
            } else {
                TailBound::Infinite
            }
        }
        Err(Error::IndexOutOfRange { .. }) => TailBound::Infinite,
        Err(e) => return Err(e),
    };
    Ok(ApproxValue { partial_sum: partial, tail_bound: tail, terms_used: terms, lower_bound: None })
}

fn epsilon_base(seq: &PsiSequence, tol: &Rational) -> Result<ApproxValue> {
    for j in 1..=EPSILON_TERM_CAP {
        let magnitude = match seq.factorial(j) {
            Ok(f) => f.recip().expect("nonzero").abs(),
            // custom sequences end; stop here with whatever bound exists
            Err(Error::IndexOutOfRange { .. }) => return alternating_inverse_factorials(seq, j),
            Err(e) => return Err(e),
        };
        if &magnitude < tol {
            return alternating_inverse_factorials(seq, j);
        }
    }
    Err(Error::EpsilonNotConverged { terms: EPSILON_TERM_CAP })
}

/// `ε(ψ, r)` truncated once the next term drops below `tol`; `q17` enables the
/// `q^(-C(r,2))` factor for q-Gauss sequences.
pub fn epsilon_weight(seq: &PsiSequence, r: usize, tol: &Rational, q17: bool) -> Result<ApproxValue> {
    let base = epsilon_base(seq, tol)?;
    Ok(scale_approx(base, &q17_factor(seq, r, q17)))
}

/// `ε(ψ, r)` from exactly `terms` terms.
pub fn epsilon_weight_with_terms(seq: &PsiSequence, r: usize, terms: usize, q17: bool) -> Result<ApproxValue> {
    let base = alternating_inverse_factorials(seq, terms)?;
    Ok(scale_approx(base, &q17_factor(seq, r, q17)))
}

fn scale_approx(a: ApproxValue, c: &Rational) -> ApproxValue {
    ApproxValue {
        partial_sum: a.partial_sum * c,
        tail_bound: a.tail_bound.scale(c),
        terms_used: a.terms_used,
        lower_bound: None,
    }
}

/// Midpoint and radius of `φ(ε)` for `ε ∈ [e - d, e + d]`.
fn weight_interval(eps: &ApproxValue, convention: WeightConvention) -> Option<(Rational, Rational)> {
    let d = eps.tail_bound.finite()?.clone();
    let e = eps.partial_sum.clone();
    match convention {
        WeightConvention::Times => Some((e, d)),
        WeightConvention::Divides => {
            let gap = e.abs() - &d;
            if !gap.is_positive() {
                return None;
            }
            let radius = &d / (e.abs() * &gap);
            Some((e.recip()?, radius))
        }
    }
}

/// Outer terms `v_r`, before the `r`-independent ε part of the weight.
fn dobinski_terms(
    seq: &PsiSequence,
    n: usize,
    convention: WeightConvention,
    q17: bool,
) -> impl Fn(usize) -> Result<Rational> + '_ {
    move |r| {
        let g = q17_factor(seq, r, q17);
        let h = match convention {
            WeightConvention::Times => g,
            WeightConvention::Divides => g.recip().expect("q17 factor is nonzero"),
        };
        Ok(h * seq.value(r)?.pow(n as i64) / seq.factorial(r)?)
    }
}

/// `Σ_r w_r r_ψ^n / r_ψ!` with `w_r` built from `ε(ψ, r)` under `convention`.
///
/// The outer sum stops at `r_cap` or at the first term below `tol` that is
/// smaller than its predecessor. The omitted outer tail is bounded
/// geometrically from the ratio of the next two terms, which needs those
/// terms to keep shrinking; otherwise the tail bound is infinite. ε itself
/// is summed to `tol / (4 · max(1, Σ|v_r|))` so its error, spread over the
/// outer sum, stays below `tol / 4`.
pub fn dobinski_sum(
    seq: &PsiSequence,
    n: usize,
    convention: WeightConvention,
    q17: bool,
    tol: &Rational,
    r_cap: usize,
) -> Result<ApproxValue> {
    weighted_series(seq, dobinski_terms(seq, n, convention, q17), convention, tol, r_cap)
}

/// `L(p) = e^(-1) Σ_r p(r) / r!`, the Poisson-average route to the Rota
/// functional.
pub fn poisson_expectation(p: &Poly, tol: &Rational, r_cap: usize) -> Result<ApproxValue> {
    let classical = PsiSequence::classical();
    let terms = |r: usize| -> Result<Rational> {
        Ok(p.eval(&Rational::from_integer(r as i64)) / classical.factorial(r)?)
    };
    weighted_series(&classical, terms, WeightConvention::Times, tol, r_cap)
}

fn weighted_series(
    seq: &PsiSequence,
    term: impl Fn(usize) -> Result<Rational>,
    convention: WeightConvention,
    tol: &Rational,
    r_cap: usize,
) -> Result<ApproxValue> {
    let coarse = epsilon_base(seq, &Rational::new(1, 1000))?;
    let coarse_weight = weight_interval(&coarse, convention).map(|(m, rad)| m.abs() + rad);

    let mut sum = Rational::zero();
    let mut abs_sum = Rational::zero();
    let mut nonnegative = true;
    let mut prev: Option<Rational> = None;
    let mut last = 0;
    for r in 0..=r_cap {
        let v = match term(r) {
            Ok(v) => v,
            Err(Error::IndexOutOfRange { .. }) if r > 0 => break,
            Err(e) => return Err(e),
        };
        last = r;
        nonnegative &= !v.is_negative();
        let mag = v.abs();
        sum += &v;
        abs_sum += &mag;
        let shrinking = prev.as_ref().is_some_and(|p| &mag < p);
        let small = coarse_weight.as_ref().is_some_and(|w| &(w * &mag) < tol);
        prev = Some(mag);
        if shrinking && small {
            break;
        }
    }

    // geometric bound on Σ_{r > last} |v_r| from the next two terms
    let ahead: Result<Vec<Rational>> = (last + 1..=last + 2).map(|r| term(r).map(|v| v.abs())).collect();
    let tail_v = match ahead {
        Ok(a) => {
            let current = prev.clone().expect("at least one term");
            let ratio_ok = a[0].is_zero()
                || (a[0] <= current && a[1] < a[0] && (current.is_zero() || &a[1] / &a[0] <= &a[0] / &current));
            if a[0].is_zero() && a[1].is_zero() {
                Some(Rational::zero())
            } else if ratio_ok && !a[0].is_zero() {
                let rho = &a[1] / &a[0];
                Some(&a[0] / (Rational::one() - rho))
            } else {
                None
            }
        }
        Err(Error::IndexOutOfRange { .. }) => None,
        Err(e) => return Err(e),
    };

    // a divergent partial sum only feeds the lower bound, so the weight needs no extra precision
    let scale = if tail_v.is_some() { abs_sum.clone().max(Rational::one()) } else { Rational::one() };
    let inner_tol = tol / (Rational::from_integer(4) * scale);
    let eps = epsilon_base(seq, &inner_tol)?;
    let Some((mid, radius)) = weight_interval(&eps, convention) else {
        return Ok(ApproxValue {
            partial_sum: eps.partial_sum.recip().unwrap_or_else(Rational::zero) * &sum,
            tail_bound: TailBound::Infinite,
            terms_used: last + 1,
            lower_bound: None,
        });
    };
    let partial_sum = &mid * &sum;
    let inner_error = &radius * &abs_sum;
    let tail_bound = match tail_v {
        Some(t) => TailBound::Finite(inner_error.clone() + (mid.abs() + &radius) * t),
        None => TailBound::Infinite,
    };
    // all terms nonnegative: the full sum dominates the lower end of the partial sum
    let lower_bound = (nonnegative && mid > radius).then(|| (&mid - &radius) * &sum);
    Ok(ApproxValue { partial_sum, tail_bound, terms_used: last + 1, lower_bound })
}

/// Compares `exp(e^x - 1)` with `B_n / n!` from set-partition enumeration.
pub fn bell_egf_check(max_n: usize) -> IdentityVerdict {
    let p = params([("oracle", json!("set-partition enumeration"))]);
    let exp_minus_one = &TruncatedSeries::exponential(max_n) - &TruncatedSeries::one(max_n);
    let egf = match series_exp(&exp_minus_one) {
        Ok(s) => s,
        Err(e) => return IdentityVerdict::inconclusive("eq1-egf", p, max_n, e.to_string()),
    };
    let classical = PsiSequence::classical();
    let cells = (0..=max_n).map(|n| {
        let bell = Rational::from_integer(oracle::bell_count(n)? as i64);
        Ok((n, 0, egf.coeff(n).clone(), bell / classical.factorial(n)?))
    });
    check_cells("eq1-egf", p, max_n, cells)
}

/// Tolerance and cap used by [`dobinski_check`].
#[derive(Clone, Debug)]
pub struct SeriesSettings {
    pub tol: Rational,
    pub r_cap: usize,
}

impl Default for SeriesSettings {
    fn default() -> Self {
        SeriesSettings { tol: Rational::ten_pow_neg(15), r_cap: 80 }
    }
}

/// Compares one truncated sum with its exact target.
///
/// VERIFIED when `|partial - exact| ≤ tail_bound + tol`; FAILED when the
/// interval misses, or when the tail is unbounded but a nonnegative-term lower
/// bound already exceeds the target; INCONCLUSIVE otherwise.
pub fn judge(approx: &ApproxValue, exact: &Rational, tol: &Rational) -> Option<bool> {
    match &approx.tail_bound {
        TailBound::Finite(_) => Some(approx.contains(exact, tol)),
        TailBound::Infinite => match &approx.lower_bound {
            Some(lb) if lb > &(exact + tol) => Some(false),
            _ => None,
        },
    }
}

/// Checks every coefficient `n ≤ max_n` of the ψ-exponential generating
/// function, i.e. `dobinski_sum(n)` against the exact `B~_n(ψ)`.
pub fn psi_egf_coefficient_check(
    seq: &PsiSequence,
    max_n: usize,
    convention: WeightConvention,
    q17: bool,
    settings: &SeriesSettings,
) -> IdentityVerdict {
    dobinski_check("eq16-dobinski", seq, max_n, convention, q17, settings)
}

pub fn dobinski_check(
    id: &str,
    seq: &PsiSequence,
    max_n: usize,
    convention: WeightConvention,
    q17: bool,
    settings: &SeriesSettings,
) -> IdentityVerdict {
    let mut p: Map<String, Value> = match seq.describe() {
        Value::Object(m) => m,
        _ => unreachable!(),
    };
    p.insert("convention".into(), json!(convention.name()));
    p.insert("q17_factor".into(), json!(if q17 { "on" } else { "off" }));
    p.insert("tol".into(), json!(settings.tol.to_string()));
    p.insert("r_cap".into(), json!(settings.r_cap));
    p.insert("criterion".into(), json!("|partial_sum - exact| <= tail_bound + tol"));
    let exact = match bell_tilde(seq, max_n) {
        Ok(b) => b,
        Err(e) => return IdentityVerdict::inconclusive(id, p, max_n, e.to_string()),
    };
    let mut undecided: Option<usize> = None;
    for n in 0..=max_n {
        let approx = match dobinski_sum(seq, n, convention, q17, &settings.tol, settings.r_cap) {
            Ok(a) => a,
            Err(e) => return IdentityVerdict::inconclusive(id, p, max_n, e.to_string()),
        };
        match judge(&approx, exact.get(n), &settings.tol) {
            Some(true) => {}
            Some(false) => {
                p.insert("tail_bound".into(), json!(approx.tail_bound.to_string()));
                p.insert("terms_used".into(), json!(approx.terms_used));
                p.insert("decimal".into(), json!(approx.decimal(20)));
                let c = Counterexample { n, k: 0, lhs: approx.partial_sum, rhs: exact.get(n).clone() };
                return IdentityVerdict::failed(id, p, max_n, c);
            }
            None => {
                undecided.get_or_insert(n);
            }
        }
    }
    match undecided {
        None => IdentityVerdict::verified(id, p, max_n),
        Some(n) => IdentityVerdict::inconclusive(id, p, max_n, format!("no tail bound at n = {n}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| Rational::from_integer(c)).collect()
    }

    #[test]
    fn tilde_bell_examples() {
        let b = bell_tilde(&PsiSequence::classical(), 5).unwrap();
        assert_eq!(b.values, ints(&[1, 1, 2, 5, 15, 52]));
        let q = rat(2, 7);
        let b = bell_tilde(&PsiSequence::q_gauss(q.clone()), 3).unwrap();
        assert_eq!(b.get(3), &(rat(4, 1) + &q));
        assert_eq!(b.get(0), &Rational::one());
    }

    #[test]
    fn carlitz_bell_examples() {
        let q = rat(5, 3);
        let b = bell_carlitz_by_recurrence(&q, 5).unwrap();
        assert_eq!(b.get(1), &Rational::one());
        assert_eq!(b.get(2), &(Rational::one() + &q));
        let rows = bell_carlitz_by_rows(&q, 2).unwrap();
        assert_eq!(rows.get(2), b.get(2));
        let b = bell_carlitz_by_recurrence(&Rational::one(), 5).unwrap();
        assert_eq!(b.values, ints(&[1, 1, 2, 5, 15, 52]));
    }

    #[test]
    fn cigl_bell_examples() {
        let q = rat(3, 4);
        let b = bell_cigl(&q, 3).unwrap();
        assert_eq!(b.get(2), &(Rational::one() + &q));
        assert_eq!(b.get(3), &(rat(2, 1) + &q + q.pow(2) + q.pow(3)));
        assert_eq!(bell_cigl(&Rational::one(), 6).unwrap().values, ints(&[1, 1, 2, 5, 15, 52, 203]));
    }

    #[test]
    fn barred_bell_at_q1_weights_columns() {
        // q = 1: the k-weights vanish and the barred value is the Bell number
        assert_eq!(bell_tilde_barred(&Rational::one(), 5).unwrap(), ints(&[1, 1, 2, 5, 15, 52]));
    }

    #[test]
    fn epsilon_first_term_only() {
        let s = PsiSequence::q_gauss(rat(2, 1));
        let e = epsilon_weight(&s, 3, &rat(2, 1), false).unwrap();
        assert_eq!(e.partial_sum, Rational::one());
        assert_eq!(e.tail_bound, TailBound::Finite(Rational::one()));
        assert_eq!(e.terms_used, 1);
    }

    #[test]
    fn epsilon_classical_near_inverse_e() {
        let tol = Rational::ten_pow_neg(12);
        let e = epsilon_weight(&PsiSequence::classical(), 0, &tol, false).unwrap();
        assert!((e.partial_sum.to_f64() - (-1f64).exp()).abs() < 1e-12);
        let e5 = epsilon_weight(&PsiSequence::classical(), 5, &tol, false).unwrap();
        assert_eq!(e5.partial_sum, e.partial_sum);
        assert!(e.tail_bound.finite().unwrap() < &tol);
    }

    #[test]
    fn epsilon_q_half_converges_fast() {
        let s = PsiSequence::q_gauss(rat(1, 2));
        let e = epsilon_weight(&s, 0, &Rational::ten_pow_neg(8), false).unwrap();
        assert!(e.terms_used <= 40);
        assert!(e.tail_bound.finite().is_some());
    }

    #[test]
    fn epsilon_q17_factor_scales() {
        let s = PsiSequence::q_gauss(rat(1, 2));
        let tol = Rational::ten_pow_neg(10);
        let plain = epsilon_weight(&s, 3, &tol, false).unwrap();
        let scaled = epsilon_weight(&s, 3, &tol, true).unwrap();
        assert_eq!(scaled.partial_sum, plain.partial_sum * rat(8, 1));
    }

    #[test]
    fn epsilon_needs_growing_factorials() {
        // q = 0 makes every n_q = 1, so Σ (-1)^j never settles
        let s = PsiSequence::q_gauss(Rational::zero());
        assert!(matches!(
            epsilon_weight(&s, 0, &rat(1, 10), false),
            Err(Error::EpsilonNotConverged { .. })
        ));
    }

    #[test]
    fn classical_dobinski_b5() {
        let tol = Rational::ten_pow_neg(13);
        let a = dobinski_sum(&PsiSequence::classical(), 5, WeightConvention::Times, false, &tol, 60).unwrap();
        assert!(a.contains(&rat(52, 1), &Rational::zero()));
        assert!(a.tail_bound.finite().unwrap() <= &Rational::ten_pow_neg(12));
        assert!(a.decimal(10).starts_with("52.0000000000"));
    }

    #[test]
    fn classical_dobinski_n0() {
        let tol = Rational::ten_pow_neg(10);
        let a = dobinski_sum(&PsiSequence::classical(), 0, WeightConvention::Times, false, &tol, 60).unwrap();
        assert!(a.contains(&Rational::one(), &Rational::zero()));
    }

    #[test]
    fn printed_convention_misses_classical() {
        let tol = Rational::ten_pow_neg(10);
        let a = dobinski_sum(&PsiSequence::classical(), 5, WeightConvention::Divides, false, &tol, 60).unwrap();
        // e^2 · 52
        let expected = 52.0 * 2f64.exp();
        assert!((a.partial_sum.to_f64() - expected).abs() < 1e-6);
        assert_eq!(judge(&a, &rat(52, 1), &tol), Some(false));
    }

    #[test]
    fn poisson_route_matches_rota() {
        let p = Poly::monomial(Rational::one(), 4);
        let a = poisson_expectation(&p, &Rational::ten_pow_neg(12), 60).unwrap();
        assert!(a.contains(&rat(15, 1), &Rational::zero()));
    }

    #[test]
    fn egf_check_small() {
        assert!(bell_egf_check(8).is_verified());
    }
}
