//! Linear operators on polynomials and the Rota umbral functional.
//!
//! Operators here are the ones the identities need: multiplication by the
//! argument `x̂`, the ψ-derivative `∂_ψ x^n = n_ψ x^(n-1)` (the Jackson
//! derivative `∂_q` when ψ is q-Gauss), and the dilation `f(x) ↦ f(qx)`.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::error::Result;
use crate::exactnum::{newton_coefficients, Poly, Rational};
use crate::harness::verdict::{params, Counterexample, IdentityVerdict};
use crate::psi::PsiSequence;
use crate::stirling::{carlitz2, cigl2, cigler_poly, tilde2_by_recurrence};

/// Symbolic tag of a [`PolyOperator`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorTag {
    Identity,
    MultByX,
    PsiDerivative(String),
    JacksonDerivative(Rational),
    Dilation(Rational),
    Scaled(Rational, Box<OperatorTag>),
    Sum(Box<OperatorTag>, Box<OperatorTag>),
    Compose(Box<OperatorTag>, Box<OperatorTag>),
    Power(Box<OperatorTag>, usize),
}

impl fmt::Display for OperatorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorTag::Identity => write!(f, "1"),
            OperatorTag::MultByX => write!(f, "x̂"),
            OperatorTag::PsiDerivative(label) => write!(f, "∂_ψ[{label}]"),
            OperatorTag::JacksonDerivative(q) => write!(f, "∂_q[q={q}]"),
            OperatorTag::Dilation(q) => write!(f, "D[q={q}]"),
            OperatorTag::Scaled(c, a) => write!(f, "({c})·{a}"),
            OperatorTag::Sum(a, b) => write!(f, "({a} + {b})"),
            OperatorTag::Compose(a, b) => write!(f, "{a}∘{b}"),
            OperatorTag::Power(a, n) => write!(f, "({a})^{n}"),
        }
    }
}

type Action = dyn Fn(&Poly) -> Result<Poly> + Send + Sync;

/// An immutable linear map `Poly → Poly`.
#[derive(Clone)]
pub struct PolyOperator {
    action: Arc<Action>,
    tag: OperatorTag,
}

impl PolyOperator {
    pub fn new(tag: OperatorTag, action: impl Fn(&Poly) -> Result<Poly> + Send + Sync + 'static) -> Self {
        PolyOperator { action: Arc::new(action), tag }
    }

    pub fn identity() -> Self {
        PolyOperator::new(OperatorTag::Identity, |p| Ok(p.clone()))
    }

    pub fn tag(&self) -> &OperatorTag {
        &self.tag
    }

    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        (self.action)(p)
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &PolyOperator) -> PolyOperator {
        let (outer_fn, inner_fn) = (self.action.clone(), inner.action.clone());
        PolyOperator::new(
            OperatorTag::Compose(Box::new(self.tag.clone()), Box::new(inner.tag.clone())),
            move |p| outer_fn(&inner_fn(p)?),
        )
    }

    /// n-fold composition; the zeroth power is the identity.
    pub fn pow(&self, n: usize) -> PolyOperator {
        let action = self.action.clone();
        PolyOperator::new(OperatorTag::Power(Box::new(self.tag.clone()), n), move |p| {
            let mut acc = p.clone();
            for _ in 0..n {
                acc = action(&acc)?;
            }
            Ok(acc)
        })
    }

    pub fn plus(&self, other: &PolyOperator) -> PolyOperator {
        let (a, b) = (self.action.clone(), other.action.clone());
        PolyOperator::new(
            OperatorTag::Sum(Box::new(self.tag.clone()), Box::new(other.tag.clone())),
            move |p| Ok(&a(p)? + &b(p)?),
        )
    }

    pub fn scaled(&self, c: Rational) -> PolyOperator {
        let a = self.action.clone();
        let factor = c.clone();
        PolyOperator::new(OperatorTag::Scaled(c, Box::new(self.tag.clone())), move |p| {
            Ok(a(p)?.scale(&factor))
        })
    }
}

impl fmt::Debug for PolyOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyOperator({})", self.tag)
    }
}

fn derivative_action(seq: &PsiSequence, p: &Poly) -> Result<Poly> {
    let mut out = Vec::with_capacity(p.coeffs().len().saturating_sub(1));
    for (n, c) in p.coeffs().iter().enumerate().skip(1) {
        out.push(c * seq.value(n)?);
    }
    Ok(Poly::from_coeffs(out))
}

/// `∂_ψ x^n = n_ψ x^(n-1)`; constants map to zero.
pub fn psi_derivative(seq: &PsiSequence) -> PolyOperator {
    let seq = Arc::new(seq.clone());
    let tag = OperatorTag::PsiDerivative(seq.label());
    PolyOperator::new(tag, move |p| derivative_action(&seq, p))
}

/// Jackson derivative `∂_q x^n = n_q x^(n-1)`.
pub fn jackson_derivative(q: &Rational) -> PolyOperator {
    let seq = Arc::new(PsiSequence::q_gauss(q.clone()));
    PolyOperator::new(OperatorTag::JacksonDerivative(q.clone()), move |p| derivative_action(&seq, p))
}

/// `x^n ↦ q^n x^n`.
pub fn q_dilation(q: &Rational) -> PolyOperator {
    let factor = q.clone();
    PolyOperator::new(OperatorTag::Dilation(q.clone()), move |p| {
        let mut scale = Rational::one();
        let mut out = Vec::with_capacity(p.coeffs().len());
        for c in p.coeffs() {
            out.push(c * &scale);
            scale *= &factor;
        }
        Ok(Poly::from_coeffs(out))
    })
}

/// `p(x) ↦ x p(x)`.
pub fn mult_by_x() -> PolyOperator {
    PolyOperator::new(OperatorTag::MultByX, |p| Ok(p.shift_up()))
}

fn first_coefficient_difference(a: &Poly, b: &Poly) -> Option<(usize, Rational, Rational)> {
    let top = a.coeffs().len().max(b.coeffs().len());
    (0..top).find_map(|i| {
        let (x, y) = (a.coeff(i), b.coeff(i));
        (x != y).then_some((i, x, y))
    })
}

/// Checks `(x̂ ∂_q)^n = Σ_k {n,k}_q x̂^k ∂_q^k` on every monomial `x^m`,
/// `m ≤ m_max`, using Carlitz numbers built by their recurrence.
///
/// On failure the counterexample carries `k = m` and the first differing
/// coefficient of the two images.
pub fn verify_weyl_expansion(q: &Rational, n: usize, m_max: usize) -> IdentityVerdict {
    let p = params([("q", json!(q.to_string())), ("n", json!(n)), ("m_max", json!(m_max))]);
    let id = "eq23-weyl";
    let outcome = (|| -> Result<Option<Counterexample>> {
        let x = mult_by_x();
        let d = jackson_derivative(q);
        let lhs_op = x.compose(&d).pow(n);
        let table = carlitz2(q, n)?;
        let mut rhs_op: Option<PolyOperator> = None;
        for k in 0..=n {
            let term = x.pow(k).compose(&d.pow(k)).scaled(table.get(n, k));
            rhs_op = Some(match rhs_op {
                None => term,
                Some(acc) => acc.plus(&term),
            });
        }
        let rhs_op = rhs_op.expect("n + 1 ≥ 1 terms");
        let seq = PsiSequence::q_gauss(q.clone());
        for m in 0..=m_max {
            let monomial = Poly::monomial(Rational::one(), m);
            let lhs = lhs_op.apply(&monomial)?;
            let rhs = rhs_op.apply(&monomial)?;
            if let Some((_, a, b)) = first_coefficient_difference(&lhs, &rhs) {
                return Ok(Some(Counterexample { n, k: m, lhs: a, rhs: b }));
            }
            // both sides also have to be (m_q)^n x^m
            let expected = Poly::monomial(seq.value(m)?.pow(n as i64), m);
            if let Some((_, a, b)) = first_coefficient_difference(&lhs, &expected) {
                return Ok(Some(Counterexample { n, k: m, lhs: a, rhs: b }));
            }
        }
        Ok(None)
    })();
    match outcome {
        Ok(None) => IdentityVerdict::verified(id, p, n),
        Ok(Some(c)) => IdentityVerdict::failed(id, p, n, c),
        Err(e) => IdentityVerdict::inconclusive(id, p, n, e.to_string()),
    }
}

/// Deterministic battery of polynomial pairs with degrees `≤ deg`.
pub fn polynomial_battery(deg: usize, pairs: usize, seed: u64) -> Vec<(Poly, Poly)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_poly = |rng: &mut ChaCha8Rng| {
        let d = rng.gen_range(0..=deg);
        Poly::from_coeffs(
            (0..=d).map(|_| Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect(),
        )
    };
    (0..pairs).map(|_| (random_poly(&mut rng), random_poly(&mut rng))).collect()
}

pub const LEIBNITZ_SEED: u64 = 0x5eed_1e1b;
pub const LEIBNITZ_PAIRS: usize = 24;

/// Checks `∂_q(f g) = (∂_q f) g + f(qx) (∂_q g)` on `f = g = x` and the
/// pseudorandom battery. Counterexample `n` is the pair index, `k` the first
/// differing power.
pub fn q_leibnitz_check(q: &Rational, deg: usize) -> IdentityVerdict {
    let p = params([
        ("q", json!(q.to_string())),
        ("pairs", json!(LEIBNITZ_PAIRS + 1)),
        ("seed", json!(LEIBNITZ_SEED)),
    ]);
    let id = "eq23-q-leibnitz";
    let d = jackson_derivative(q);
    let dil = q_dilation(q);
    let mut pairs = vec![(Poly::x(), Poly::x())];
    pairs.extend(polynomial_battery(deg, LEIBNITZ_PAIRS, LEIBNITZ_SEED));
    for (i, (f, g)) in pairs.iter().enumerate() {
        let sides = (|| -> Result<(Poly, Poly)> {
            let lhs = d.apply(&(f * g))?;
            let rhs = &(&d.apply(f)? * g) + &(&dil.apply(f)? * &d.apply(g)?);
            Ok((lhs, rhs))
        })();
        match sides {
            Ok((lhs, rhs)) => {
                if let Some((k, a, b)) = first_coefficient_difference(&lhs, &rhs) {
                    return IdentityVerdict::failed(id, p, deg, Counterexample { n: i, k, lhs: a, rhs: b });
                }
            }
            Err(e) => return IdentityVerdict::inconclusive(id, p, deg, e.to_string()),
        }
    }
    IdentityVerdict::verified(id, p, deg)
}

/// The Rota functional `L` on falling-factorial coordinates: `L(x^(n)) = 1`
/// for every falling factorial, extended linearly.
pub fn rota_functional(falling_coords: &[Rational]) -> Rational {
    falling_coords.iter().sum()
}

/// `L(p)` for `p` in the monomial basis.
pub fn rota_functional_poly(p: &Poly) -> Result<Rational> {
    let degree = p.degree().unwrap_or(0);
    let nodes: Vec<Rational> = (0..degree).map(|i| Rational::from_integer(i as i64)).collect();
    Ok(rota_functional(&newton_coefficients(p, &nodes)?))
}

/// `A_0 = 1`, `A_n = y (A_{n-1} + ∂_ψ A_{n-1})`.
pub fn exponential_polys_by_operator(seq: &PsiSequence, max_n: usize) -> Result<Vec<Poly>> {
    let step = mult_by_x().compose(&PolyOperator::identity().plus(&psi_derivative(seq)));
    let mut out = vec![Poly::one()];
    for n in 1..=max_n {
        let next = step.apply(&out[n - 1])?;
        out.push(next);
    }
    Ok(out)
}

/// `A_n(y) = Σ_k {n,k}~_ψ y^k` from the recurrence-built triangle.
pub fn exponential_polys_by_rows(seq: &PsiSequence, max_n: usize) -> Result<Vec<Poly>> {
    let t = tilde2_by_recurrence(seq, max_n)?;
    Ok(t.rows().iter().map(|r| Poly::from_coeffs(r.clone())).collect())
}

/// `L(X (X + q - 1) ⋯ (X + q^(n-1) - 1))`.
pub fn cigl_dobinski_exact(q: &Rational, n: usize) -> Result<Rational> {
    rota_functional_poly(&cigler_poly(q, n))
}

/// Row sums of the Cigler triangle, for comparison with [`cigl_dobinski_exact`].
pub fn cigl_row_sums(q: &Rational, max_n: usize) -> Result<Vec<Rational>> {
    let t = cigl2(q, max_n)?;
    Ok((0..=max_n).map(|n| t.row_sum(n)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn derivative_examples() {
        let x3 = Poly::monomial(Rational::one(), 3);
        let d = psi_derivative(&PsiSequence::classical());
        assert_eq!(d.apply(&x3).unwrap(), Poly::monomial(rat(3, 1), 2));
        let d = psi_derivative(&PsiSequence::q_gauss(rat(2, 1)));
        assert_eq!(d.apply(&x3).unwrap(), Poly::monomial(rat(7, 1), 2));
        assert_eq!(d.apply(&Poly::constant(rat(5, 1))).unwrap(), Poly::zero());
    }

    #[test]
    fn dilation_examples() {
        let x2 = Poly::monomial(Rational::one(), 2);
        assert_eq!(q_dilation(&rat(2, 1)).apply(&x2).unwrap(), Poly::monomial(rat(4, 1), 2));
        let p = Poly::from_i64(&[3, -1, 4]);
        assert_eq!(q_dilation(&Rational::one()).apply(&p).unwrap(), p);
        let p = Poly::from_i64(&[0, 1, 0, 1]);
        assert_eq!(
            q_dilation(&rat(1, 2)).apply(&p).unwrap(),
            Poly::from_coeffs(vec![rat(0, 1), rat(1, 2), rat(0, 1), rat(1, 8)])
        );
    }

    #[test]
    fn mult_by_x_examples() {
        let x = mult_by_x();
        assert_eq!(x.apply(&Poly::one()).unwrap(), Poly::x());
        assert_eq!(
            x.apply(&Poly::monomial(Rational::one(), 2)).unwrap(),
            Poly::monomial(Rational::one(), 3)
        );
        assert_eq!(x.apply(&Poly::zero()).unwrap(), Poly::zero());
    }

    #[test]
    fn weyl_examples() {
        // (x̂∂_q)^2 x^2 at q = 2 is 9x^2
        let x = mult_by_x();
        let d = jackson_derivative(&rat(2, 1));
        let x2 = Poly::monomial(Rational::one(), 2);
        assert_eq!(x.compose(&d).pow(2).apply(&x2).unwrap(), Poly::monomial(rat(9, 1), 2));
        assert!(verify_weyl_expansion(&rat(2, 1), 2, 2).is_verified());
        assert!(verify_weyl_expansion(&rat(3, 7), 0, 5).is_verified());
        for n in 0..=6 {
            assert!(verify_weyl_expansion(&Rational::one(), n, 6).is_verified());
        }
    }

    #[test]
    fn leibnitz_examples() {
        let q = rat(2, 1);
        let d = jackson_derivative(&q);
        let x = Poly::x();
        assert_eq!(d.apply(&(&x * &x)).unwrap(), Poly::monomial(rat(3, 1), 1));
        assert!(q_leibnitz_check(&q, 4).is_verified());
        assert!(q_leibnitz_check(&Rational::one(), 4).is_verified());
        let q = rat(1, 2);
        let d = jackson_derivative(&q);
        let f = Poly::monomial(Rational::one(), 2);
        let lhs = d.apply(&(&f * &x)).unwrap();
        let rhs = &(&d.apply(&f).unwrap() * &x) + &(&q_dilation(&q).apply(&f).unwrap() * &d.apply(&x).unwrap());
        assert_eq!(lhs, Poly::monomial(rat(7, 4), 2));
        assert_eq!(rhs, lhs);
    }

    #[test]
    fn battery_is_deterministic() {
        assert_eq!(polynomial_battery(5, 4, 7), polynomial_battery(5, 4, 7));
        assert!(polynomial_battery(5, 20, 7).iter().all(|(f, g)| {
            f.degree().unwrap_or(0) <= 5 && g.degree().unwrap_or(0) <= 5
        }));
    }

    #[test]
    fn rota_examples() {
        assert_eq!(rota_functional(&[rat(0, 1), rat(0, 1), rat(1, 1)]), rat(1, 1));
        assert_eq!(rota_functional(&[rat(0, 1), rat(1, 1), rat(1, 1)]), rat(2, 1));
        assert_eq!(rota_functional(&[rat(0, 1), rat(1, 1), rat(3, 1), rat(1, 1)]), rat(5, 1));
        assert_eq!(rota_functional_poly(&Poly::monomial(Rational::one(), 3)).unwrap(), rat(5, 1));
        assert_eq!(rota_functional_poly(&Poly::one()).unwrap(), rat(1, 1));
    }

    #[test]
    fn exponential_poly_examples() {
        let a = exponential_polys_by_operator(&PsiSequence::classical(), 3).unwrap();
        assert_eq!(a[2], Poly::from_i64(&[0, 1, 1]));
        assert_eq!(a[3], Poly::from_i64(&[0, 1, 3, 1]));
        let a = exponential_polys_by_operator(&PsiSequence::q_gauss(rat(5, 2)), 1).unwrap();
        assert_eq!(a[1], Poly::x());
    }

    #[test]
    fn cigl_dobinski_examples() {
        let q = rat(2, 3);
        assert_eq!(cigl_dobinski_exact(&q, 0).unwrap(), Rational::one());
        assert_eq!(cigl_dobinski_exact(&q, 2).unwrap(), Rational::one() + &q);
        assert_eq!(cigl_dobinski_exact(&Rational::one(), 4).unwrap(), rat(15, 1));
    }

    #[test]
    fn operator_tags() {
        let op = mult_by_x().compose(&jackson_derivative(&rat(2, 1))).pow(3);
        assert_eq!(op.tag().to_string(), "(x̂∘∂_q[q=2])^3");
    }
}
