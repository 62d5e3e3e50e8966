//! Extended number sequences `n ↦ n_ψ` with their factorials and binomials.
//!
//! Three families are supported: the classical integers, the q-Gauss
//! numbers `n_q = 1 + q + … + q^(n-1)`, and finite user-supplied sequences.
//! Values and factorials are cached on first use behind an `RwLock`, so a
//! sequence can be shared between threads.

use std::fmt;
use std::path::Path;
use std::sync::RwLock;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{poly_root_product, Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsiFamily {
    Classical,
    QGauss(Rational),
    /// Values of `1_ψ, 2_ψ, …`; `0_ψ = 0` is implicit.
    Custom(Vec<Rational>),
}

#[derive(Debug)]
struct Cache {
    values: Vec<Rational>,
    factorials: Vec<Rational>,
}

impl Cache {
    fn new() -> Self {
        Cache { values: vec![Rational::zero()], factorials: vec![Rational::one()] }
    }
}

pub struct PsiSequence {
    family: PsiFamily,
    cache: RwLock<Cache>,
}

impl PsiSequence {
    pub fn new(family: PsiFamily) -> Self {
        PsiSequence { family, cache: RwLock::new(Cache::new()) }
    }

    pub fn classical() -> Self {
        PsiSequence::new(PsiFamily::Classical)
    }

    pub fn q_gauss(q: Rational) -> Self {
        PsiSequence::new(PsiFamily::QGauss(q))
    }

    pub fn custom(values: Vec<Rational>) -> Self {
        PsiSequence::new(PsiFamily::Custom(values))
    }

    /// Parses `classical`, `q:<rational>` or `custom:<path>`, where the file
    /// holds a JSON array of rational strings for `1_ψ, 2_ψ, …`.
    pub fn parse_spec(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec == "classical" {
            return Ok(PsiSequence::classical());
        }
        if let Some(q) = spec.strip_prefix("q:") {
            let q: Rational = q.parse().map_err(|_| Error::ParsePsiSpec(spec.to_string()))?;
            return Ok(PsiSequence::q_gauss(q));
        }
        if let Some(path) = spec.strip_prefix("custom:") {
            if path.is_empty() {
                return Err(Error::ParsePsiSpec(spec.to_string()));
            }
            return PsiSequence::from_custom_file(Path::new(path));
        }
        Err(Error::ParsePsiSpec(spec.to_string()))
    }

    pub fn from_custom_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let values: Vec<Rational> = serde_json::from_str(&text)?;
        Ok(PsiSequence::custom(values))
    }

    pub fn family(&self) -> &PsiFamily {
        &self.family
    }

    /// The `q` of a q-Gauss sequence; classical counts as `q = 1`.
    pub fn q(&self) -> Option<Rational> {
        match &self.family {
            PsiFamily::Classical => Some(Rational::one()),
            PsiFamily::QGauss(q) => Some(q.clone()),
            PsiFamily::Custom(_) => None,
        }
    }

    /// Short textual form, the same grammar `parse_spec` reads for the first
    /// two families.
    pub fn label(&self) -> String {
        match &self.family {
            PsiFamily::Classical => "classical".to_string(),
            PsiFamily::QGauss(q) => format!("q:{q}"),
            PsiFamily::Custom(v) => {
                let items: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("custom:[{}]", items.join(","))
            }
        }
    }

    pub fn describe(&self) -> Value {
        match &self.family {
            PsiFamily::Custom(v) => json!({ "psi": "custom", "values": v }),
            _ => json!({ "psi": self.label() }),
        }
    }

    fn raw_value(&self, n: usize, prev: &Rational) -> Result<Rational> {
        let v = match &self.family {
            PsiFamily::Classical => Rational::from_integer(n as i64),
            // n_q = 1 + q (n-1)_q, so q = 1 needs no special case
            PsiFamily::QGauss(q) => Rational::one() + q * prev,
            PsiFamily::Custom(values) => values
                .get(n - 1)
                .cloned()
                .ok_or(Error::IndexOutOfRange { index: n, len: values.len() })?,
        };
        if v.is_zero() {
            return Err(Error::DegenerateSequence(n));
        }
        Ok(v)
    }

    fn ensure(&self, n: usize) -> Result<()> {
        if self.cache.read().expect("psi cache poisoned").values.len() > n {
            return Ok(());
        }
        let mut cache = self.cache.write().expect("psi cache poisoned");
        while cache.values.len() <= n {
            let m = cache.values.len();
            let v = self.raw_value(m, &cache.values[m - 1])?;
            let f = &cache.factorials[m - 1] * &v;
            cache.values.push(v);
            cache.factorials.push(f);
        }
        Ok(())
    }

    /// `n_ψ`.
    pub fn value(&self, n: usize) -> Result<Rational> {
        self.ensure(n)?;
        Ok(self.cache.read().expect("psi cache poisoned").values[n].clone())
    }

    /// `0_ψ, 1_ψ, …, (n-1)_ψ`.
    pub fn values_below(&self, n: usize) -> Result<Vec<Rational>> {
        if n == 0 {
            return Ok(Vec::new());
        }
        self.ensure(n - 1)?;
        Ok(self.cache.read().expect("psi cache poisoned").values[..n].to_vec())
    }

    /// `n_ψ! = 1_ψ · 2_ψ ⋯ n_ψ`.
    pub fn factorial(&self, n: usize) -> Result<Rational> {
        self.ensure(n)?;
        Ok(self.cache.read().expect("psi cache poisoned").factorials[n].clone())
    }

    /// `n_ψ! / (k_ψ! (n-k)_ψ!)`, and zero when `k > n`.
    pub fn binomial(&self, n: usize, k: usize) -> Result<Rational> {
        if k > n {
            return Ok(Rational::zero());
        }
        let top = self.factorial(n)?;
        Ok(top / (self.factorial(k)? * self.factorial(n - k)?))
    }

    /// First pair `(i, j)`, `1 ≤ i < j ≤ n`, with `i_ψ = j_ψ`, if any.
    pub fn first_repeat(&self, n: usize) -> Result<Option<(usize, usize)>> {
        let values = self.values_below(n + 1)?;
        for j in 2..=n {
            for i in 1..j {
                if values[i] == values[j] {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    /// Whether `1_ψ, …, n_ψ` are pairwise distinct.
    pub fn is_distinct_through(&self, n: usize) -> Result<bool> {
        Ok(self.first_repeat(n)?.is_none())
    }

    /// `ψ_k(x) = x (x - 1_ψ) ⋯ (x - (k-1)_ψ)`.
    pub fn falling_poly(&self, k: usize) -> Result<Poly> {
        Ok(poly_root_product(&self.values_below(k)?))
    }

    /// `x (x + 1_ψ) ⋯ (x + (k-1)_ψ)`.
    pub fn rising_poly(&self, k: usize) -> Result<Poly> {
        let roots: Vec<Rational> = self.values_below(k)?.iter().map(|v| -v).collect();
        Ok(poly_root_product(&roots))
    }
}

impl Clone for PsiSequence {
    fn clone(&self) -> Self {
        PsiSequence::new(self.family.clone())
    }
}

impl fmt::Debug for PsiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PsiSequence({})", self.label())
    }
}

/// `n_ψ`.
pub fn psi_value(seq: &PsiSequence, n: usize) -> Result<Rational> {
    seq.value(n)
}

/// `n_ψ!`.
pub fn psi_factorial(seq: &PsiSequence, n: usize) -> Result<Rational> {
    seq.factorial(n)
}

/// ψ-binomial coefficient; zero for `k > n`.
pub fn psi_binomial(seq: &PsiSequence, n: usize, k: usize) -> Result<Rational> {
    seq.binomial(n, k)
}

pub fn psi_falling_poly(seq: &PsiSequence, k: usize) -> Result<Poly> {
    seq.falling_poly(k)
}

pub fn psi_rising_poly(seq: &PsiSequence, k: usize) -> Result<Poly> {
    seq.rising_poly(k)
}

/// `n_q = 1 + q + ⋯ + q^(n-1)` for any `q`, zero values included.
pub fn q_integer(q: &Rational, n: usize) -> Rational {
    let mut acc = Rational::zero();
    let mut power = Rational::one();
    for _ in 0..n {
        acc += &power;
        power *= q;
    }
    acc
}

/// Gaussian binomials `C(n,k)_q` for `n ≤ max_n` by the q-Pascal rule
/// `C(n,k) = C(n-1,k-1) + q^k C(n-1,k)`, so no division is needed.
pub fn q_binomial_rows(q: &Rational, max_n: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        let mut qk = Rational::one();
        for k in 0..=n {
            let left = if k > 0 { prev[k - 1].clone() } else { Rational::zero() };
            let right = prev.get(k).map(|v| &qk * v).unwrap_or_else(Rational::zero);
            row.push(left + right);
            qk *= q;
        }
        rows.push(row);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn q(num: i64, den: i64) -> PsiSequence {
        PsiSequence::q_gauss(rat(num, den))
    }

    #[test]
    fn q_pascal_at_root_of_unity() {
        let m1 = rat(-1, 1);
        assert_eq!(q_integer(&m1, 2), Rational::zero());
        let rows = q_binomial_rows(&m1, 4);
        // C(4,2)_{-1} = 2, C(3,1)_{-1} = 1
        assert_eq!(rows[4][2], rat(2, 1));
        assert_eq!(rows[3][1], rat(1, 1));
        let two = rat(2, 1);
        let rows = q_binomial_rows(&two, 6);
        let seq = PsiSequence::q_gauss(two.clone());
        for n in 0..=6 {
            for k in 0..=n {
                assert_eq!(rows[n][k], seq.binomial(n, k).unwrap());
            }
            assert_eq!(q_integer(&two, n), seq.value(n).unwrap());
        }
    }

    #[test]
    fn values() {
        assert_eq!(psi_value(&q(2, 1), 3).unwrap(), rat(7, 1));
        assert_eq!(psi_value(&PsiSequence::classical(), 5).unwrap(), rat(5, 1));
        assert_eq!(psi_value(&q(1, 2), 2).unwrap(), rat(3, 2));
        assert_eq!(psi_value(&q(3, 5), 0).unwrap(), Rational::zero());
    }

    #[test]
    fn factorials() {
        assert_eq!(psi_factorial(&q(2, 1), 3).unwrap(), rat(21, 1));
        assert_eq!(psi_factorial(&q(7, 3), 0).unwrap(), Rational::one());
        assert_eq!(psi_factorial(&q(1, 2), 3).unwrap(), rat(21, 8));
    }

    #[test]
    fn binomials() {
        assert_eq!(psi_binomial(&q(2, 1), 4, 2).unwrap(), rat(35, 1));
        // Gaussian binomial [4 2]_q = 1 + q + 2q^2 + q^3 + q^4 at q = 2
        assert_eq!(rat(1 + 2 + 8 + 8 + 16, 1), rat(35, 1));
        assert_eq!(psi_binomial(&q(3, 5), 6, 0).unwrap(), Rational::one());
        assert_eq!(psi_binomial(&PsiSequence::classical(), 5, 2).unwrap(), rat(10, 1));
        assert_eq!(psi_binomial(&PsiSequence::classical(), 2, 5).unwrap(), Rational::zero());
    }

    #[test]
    fn polynomials() {
        let classical = PsiSequence::classical();
        assert_eq!(psi_falling_poly(&classical, 0).unwrap(), Poly::one());
        assert_eq!(psi_falling_poly(&classical, 3).unwrap(), Poly::from_i64(&[0, 2, -3, 1]));
        assert_eq!(psi_falling_poly(&q(2, 1), 3).unwrap(), Poly::from_i64(&[0, 3, -4, 1]));
        assert_eq!(psi_rising_poly(&classical, 0).unwrap(), Poly::one());
        assert_eq!(psi_rising_poly(&classical, 3).unwrap(), Poly::from_i64(&[0, 2, 3, 1]));
        assert_eq!(psi_rising_poly(&q(2, 1), 2).unwrap(), Poly::from_i64(&[0, 1, 1]));
    }

    #[test]
    fn custom_range_and_degeneracy() {
        let s = PsiSequence::custom(vec![rat(1, 1), rat(5, 2)]);
        assert_eq!(s.value(2).unwrap(), rat(5, 2));
        assert_eq!(s.value(3).unwrap_err(), Error::IndexOutOfRange { index: 3, len: 2 });

        let zero = PsiSequence::custom(vec![rat(1, 1), rat(0, 1)]);
        assert_eq!(zero.value(2).unwrap_err(), Error::DegenerateSequence(2));
        assert!(zero.value(2).unwrap_err().to_string().contains("degenerate"));
    }

    #[test]
    fn q_minus_one_rejected_lazily() {
        let s = q(-1, 1);
        assert_eq!(s.value(1).unwrap(), Rational::one());
        assert_eq!(s.value(2).unwrap_err(), Error::DegenerateSequence(2));
    }

    #[test]
    fn distinctness() {
        assert!(q(2, 1).is_distinct_through(10).unwrap());
        let s = PsiSequence::custom(vec![rat(1, 1), rat(2, 1), rat(1, 1)]);
        assert!(s.is_distinct_through(2).unwrap());
        assert_eq!(s.first_repeat(3).unwrap(), Some((1, 3)));
        assert!(!q(0, 1).is_distinct_through(2).unwrap());
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(PsiSequence::parse_spec("classical").unwrap().family(), &PsiFamily::Classical);
        assert_eq!(
            PsiSequence::parse_spec("q:3/5").unwrap().family(),
            &PsiFamily::QGauss(rat(3, 5))
        );
        assert!(PsiSequence::parse_spec("q:abc").is_err());
        assert!(PsiSequence::parse_spec("fibonacci").is_err());
        assert!(PsiSequence::parse_spec("custom:").is_err());
        assert_eq!(PsiSequence::parse_spec("q:3/5").unwrap().label(), "q:3/5");
    }

    #[test]
    fn shared_between_threads() {
        let s = std::sync::Arc::new(q(3, 5));
        let handles: Vec<_> = (0..4)
            .map(|t| {
                let s = s.clone();
                std::thread::spawn(move || s.factorial(10 + t).unwrap())
            })
            .collect();
        let got: Vec<Rational> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (t, f) in got.iter().enumerate() {
            assert_eq!(f, &q(3, 5).factorial(10 + t).unwrap());
        }
    }
}
