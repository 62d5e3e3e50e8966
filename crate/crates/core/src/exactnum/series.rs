//! Truncated formal power series with exact coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use super::Rational;
use crate::error::{Error, Result};

/// Coefficients of `x^0 .. x^order`; everything above `order` is unknown
/// and never read.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Pads with zeros or drops terms beyond `order`.
    pub fn new(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::new(order, vec![Rational::one()])
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        TruncatedSeries::new(order, vec![Rational::zero(), Rational::one()])
    }

    /// `Σ x^n / n!`.
    pub fn exponential(order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = Rational::one();
        for n in 0..=order {
            if n > 0 {
                c = c / Rational::from_integer(n as i64);
            }
            coeffs.push(c.clone());
        }
        TruncatedSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    /// Re-truncates to a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncatedSeries::new(order, self.coeffs[..=order].to_vec())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0].recip().ok_or(Error::ZeroConstantTerm)?;
        let mut out: Vec<Rational> = Vec::with_capacity(self.order + 1);
        out.push(c0.clone());
        for n in 1..=self.order {
            let s: Rational = (1..=n).map(|i| &self.coeffs[i] * &out[n - i]).sum();
            out.push(-(s * &c0));
        }
        Ok(TruncatedSeries { order: self.order, coeffs: out })
    }
}

/// `exp(s)` for `s` with zero constant term.
///
/// From `f' = s' f`: `n f_n = Σ_{k=1}^{n} k s_k f_{n-k}`.
pub fn series_exp(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    if !s.coeffs[0].is_zero() {
        return Err(Error::NonzeroConstantTerm(s.coeffs[0].to_string()));
    }
    let mut f: Vec<Rational> = Vec::with_capacity(s.order + 1);
    f.push(Rational::one());
    for n in 1..=s.order {
        let acc: Rational = (1..=n)
            .map(|k| Rational::from_integer(k as i64) * &s.coeffs[k] * &f[n - k])
            .sum();
        f.push(acc / Rational::from_integer(n as i64));
    }
    Ok(TruncatedSeries { order: s.order, coeffs: f })
}

/// `outer(inner(x))` for `inner` with zero constant term, by Horner's rule
/// at the smaller of the two orders.
pub fn series_compose(outer: &TruncatedSeries, inner: &TruncatedSeries) -> Result<TruncatedSeries> {
    if !inner.coeffs[0].is_zero() {
        return Err(Error::NonzeroConstantTerm(inner.coeffs[0].to_string()));
    }
    let order = outer.order.min(inner.order);
    let inner = inner.truncate(order);
    let mut acc = TruncatedSeries::zero(order);
    for c in outer.coeffs[..=order].iter().rev() {
        acc = &acc * &inner;
        acc.coeffs[0] += c;
    }
    Ok(acc)
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect();
        TruncatedSeries { order, coeffs }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect();
        TruncatedSeries { order, coeffs }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![Rational::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        TruncatedSeries { order, coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn exp_of_x() {
        let e = series_exp(&TruncatedSeries::x(3)).unwrap();
        assert_eq!(e.coeffs(), &[rat(1, 1), rat(1, 1), rat(1, 2), rat(1, 6)]);
        assert_eq!(e, TruncatedSeries::exponential(3));
    }

    #[test]
    fn exp_of_zero() {
        assert_eq!(series_exp(&TruncatedSeries::zero(5)).unwrap(), TruncatedSeries::one(5));
    }

    #[test]
    fn exp_of_exp_minus_one() {
        let inner = &TruncatedSeries::exponential(4) - &TruncatedSeries::one(4);
        let b = series_exp(&inner).unwrap();
        assert_eq!(b.coeff(4), &rat(5, 8));
    }

    #[test]
    fn exp_rejects_constant() {
        let s = TruncatedSeries::one(2);
        assert!(matches!(series_exp(&s), Err(Error::NonzeroConstantTerm(_))));
    }

    #[test]
    fn compose_examples() {
        let outer = TruncatedSeries::new(4, vec![rat(1, 1), rat(1, 1)]);
        let inner = TruncatedSeries::new(4, vec![rat(0, 1), rat(0, 1), rat(1, 1)]);
        assert_eq!(
            series_compose(&outer, &inner).unwrap(),
            TruncatedSeries::new(4, vec![rat(1, 1), rat(0, 1), rat(1, 1)])
        );

        let arbitrary = TruncatedSeries::new(3, vec![rat(2, 1), rat(-1, 3), rat(5, 1), rat(7, 2)]);
        assert_eq!(series_compose(&arbitrary, &TruncatedSeries::x(3)).unwrap(), arbitrary);

        let inner = TruncatedSeries::new(2, vec![rat(0, 1), rat(1, 1), rat(1, 2)]);
        let got = series_compose(&TruncatedSeries::exponential(2), &inner).unwrap();
        assert_eq!(got.coeffs(), &[rat(1, 1), rat(1, 1), rat(1, 1)]);
    }

    #[test]
    fn compose_rejects_constant_inner() {
        let err = series_compose(&TruncatedSeries::x(2), &TruncatedSeries::one(2));
        assert!(err.is_err());
    }

    #[test]
    fn geometric_inverse() {
        // 1/(1 - 2x) = Σ 2^n x^n
        let s = TruncatedSeries::new(5, vec![rat(1, 1), rat(-2, 1)]);
        let inv = s.inverse().unwrap();
        for n in 0..=5 {
            assert_eq!(inv.coeff(n), &Rational::from_integer(1 << n));
        }
        assert!(TruncatedSeries::x(3).inverse().is_err());
    }
}
