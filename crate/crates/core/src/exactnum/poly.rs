//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

/// Coefficient `i` multiplies `x^i`. The highest stored coefficient is
/// nonzero; the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * x^power`.
    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by the argument: `p(x) -> x p(x)`.
    pub fn shift_up(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Quotient and remainder of division by `(x - root)`.
    pub fn div_linear(&self, root: &Rational) -> (Poly, Rational) {
        let Some(deg) = self.degree() else {
            return (Poly::zero(), Rational::zero());
        };
        let mut quotient = vec![Rational::zero(); deg];
        let mut carry = Rational::zero();
        for i in (0..=deg).rev() {
            let value = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return (Poly::from_coeffs(quotient), value);
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }
}

/// Exact product of two polynomials.
pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    Poly::from_coeffs(out)
}

/// `∏_j (x - roots[j])`; the empty product is `1`.
pub fn poly_root_product(roots: &[Rational]) -> Poly {
    // Multiplying by a monic linear factor in place keeps this O(k^2).
    let mut coeffs = vec![Rational::one()];
    for r in roots {
        coeffs.push(Rational::zero());
        for i in (0..coeffs.len()).rev() {
            let lower = if i > 0 { coeffs[i - 1].clone() } else { Rational::zero() };
            coeffs[i] = lower - &coeffs[i] * r;
        }
    }
    Poly::from_coeffs(coeffs)
}

/// Coordinates of `p` in the Newton basis `∏_{i<k} (x - nodes[i])`.
///
/// Runs successive synthetic division by `(x - nodes[0])`, `(x - nodes[1])`,
/// ...; the remainders are the coordinates and the final quotient is the top
/// one. Repeated nodes are fine. Returns `degree + 1` values, or an empty
/// vector for the zero polynomial.
pub fn newton_coefficients(p: &Poly, nodes: &[Rational]) -> Result<Vec<Rational>> {
    let Some(degree) = p.degree() else {
        return Ok(Vec::new());
    };
    if nodes.len() < degree {
        return Err(Error::BasisTooSmall { degree, nodes: nodes.len() });
    }
    let mut out = Vec::with_capacity(degree + 1);
    let mut current = p.clone();
    for node in &nodes[..degree] {
        let (q, r) = current.div_linear(node);
        out.push(r);
        current = q;
    }
    out.push(current.coeff(0));
    Ok(out)
}

/// Rebuilds `Σ a_k ∏_{i<k}(x - nodes[i])` in the monomial basis.
pub fn from_newton(coords: &[Rational], nodes: &[Rational]) -> Poly {
    let mut acc = Poly::zero();
    for k in (0..coords.len()).rev() {
        acc = if k < coords.len() - 1 {
            let factor = Poly::from_coeffs(vec![-&nodes[k], Rational::one()]);
            poly_mul(&acc, &factor)
        } else {
            acc
        };
        acc = &acc + &Poly::constant(coords[k].clone());
    }
    acc
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        poly_mul(self, rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(Poly::from_coeffs(Vec::<Rational>::deserialize(deserializer)?))
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
    fn products() {
        let x = Poly::x();
        let x_minus_1 = Poly::from_i64(&[-1, 1]);
        assert_eq!(poly_mul(&x, &x_minus_1), Poly::from_i64(&[0, -1, 1]));
        assert_eq!(poly_mul(&x_minus_1, &Poly::one()), x_minus_1);
        assert_eq!(
            poly_mul(&Poly::from_i64(&[1, 1]), &x_minus_1),
            Poly::from_i64(&[-1, 0, 1])
        );
        assert_eq!(poly_mul(&x, &Poly::zero()), Poly::zero());
    }

    #[test]
    fn root_products() {
        assert_eq!(poly_root_product(&[]), Poly::one());
        assert_eq!(poly_root_product(&ints(&[0, 1])), Poly::from_i64(&[0, -1, 1]));
        assert_eq!(poly_root_product(&ints(&[0, 1, 3])), Poly::from_i64(&[0, 3, -4, 1]));
    }

    #[test]
    fn newton_examples() {
        let x2 = Poly::from_i64(&[0, 0, 1]);
        assert_eq!(newton_coefficients(&x2, &ints(&[0, 1])).unwrap(), ints(&[0, 1, 1]));
        let r = rat(5, 7);
        assert_eq!(
            newton_coefficients(&x2, &[Rational::zero(), r.clone()]).unwrap(),
            vec![Rational::zero(), r, Rational::one()]
        );
        let x3 = Poly::from_i64(&[0, 0, 0, 1]);
        assert_eq!(newton_coefficients(&x3, &ints(&[0, 1, 3])).unwrap(), ints(&[0, 1, 4, 1]));
    }

    #[test]
    fn newton_repeated_nodes() {
        // (x - 2)^2 at nodes [2, 2] is exactly the second basis element.
        let p = Poly::from_i64(&[4, -4, 1]);
        assert_eq!(newton_coefficients(&p, &ints(&[2, 2])).unwrap(), ints(&[0, 0, 1]));
    }

    #[test]
    fn newton_too_few_nodes() {
        let x3 = Poly::from_i64(&[0, 0, 0, 1]);
        let err = newton_coefficients(&x3, &ints(&[0, 1])).unwrap_err();
        assert!(matches!(err, Error::BasisTooSmall { degree: 3, nodes: 2 }));
        assert!(err.to_string().contains("basis too small"));
    }

    #[test]
    fn degree_and_eval() {
        let p = Poly::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p.eval(&rat(1, 2)), rat(2, 1));
    }

    #[test]
    fn division_by_linear() {
        let p = Poly::from_i64(&[0, 3, -4, 1]);
        let (q, r) = p.div_linear(&Rational::from_integer(3));
        assert_eq!(r, Rational::zero());
        assert_eq!(q, Poly::from_i64(&[0, -1, 1]));
    }
}
