//! Triangular tables of Stirling-like numbers.
//!
//! Second kind: `tilde2` (ψ-Comtet numbers, four independent routes),
//! `carlitz2` (Carlitz q-Stirling), `inv2` (inversion q-Stirling) and
//! `cigl2` (Cigler q-Stirling). First kind: `tilde1` (ψ-falling expansion)
//! and `cycle1` (ψ-rising expansion).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactnum::{newton_coefficients, poly_root_product, Poly, Rational};
use crate::harness::verdict::{check_cells, params, IdentityVerdict};
use crate::psi::{q_binomial_rows, q_integer, PsiSequence};

/// Enumeration guard for [`tilde2_by_compositions`].
pub const COMPOSITION_LIMIT: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Tilde2,
    Carlitz2,
    Inv2,
    Cigl2,
    Tilde1,
    Cycle1,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Tilde2,
        Family::Carlitz2,
        Family::Inv2,
        Family::Cigl2,
        Family::Tilde1,
        Family::Cycle1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Tilde2 => "tilde2",
            Family::Carlitz2 => "carlitz2",
            Family::Inv2 => "inv2",
            Family::Cigl2 => "cigl2",
            Family::Tilde1 => "tilde1",
            Family::Cycle1 => "cycle1",
        }
    }

    /// Families parameterized by a ψ-sequence rather than a bare `q`.
    pub fn is_psi_family(self) -> bool {
        matches!(self, Family::Tilde2 | Family::Tilde1 | Family::Cycle1)
    }

    pub fn is_second_kind(self) -> bool {
        matches!(self, Family::Tilde2 | Family::Carlitz2 | Family::Inv2 | Family::Cigl2)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown family `{s}`")))
    }
}

/// Cells `(n, k)` for `0 ≤ k ≤ n ≤ max_n`; reads with `k > n` or `n > max_n`
/// return zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    family: Family,
    params: Map<String, Value>,
    rows: Vec<Vec<Rational>>,
}

#[derive(Serialize, Deserialize)]
struct TriangleDoc {
    family: Family,
    params: Map<String, Value>,
    rows: Vec<Vec<Rational>>,
}

impl Triangle {
    /// Pads or trims each row to length `n + 1`.
    pub fn new(family: Family, params: Map<String, Value>, mut rows: Vec<Vec<Rational>>) -> Self {
        for (n, row) in rows.iter_mut().enumerate() {
            row.resize(n + 1, Rational::zero());
        }
        Triangle { family, params, rows }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &Map<String, Value> {
        &self.params
    }

    /// `None` for an empty table.
    pub fn max_n(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n]
    }

    pub fn get(&self, n: usize, k: usize) -> Rational {
        self.rows.get(n).and_then(|r| r.get(k)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn row_sum(&self, n: usize) -> Rational {
        self.rows[n].iter().sum()
    }

    /// Cell-by-cell comparison; the first differing `(n, k, self, other)`.
    pub fn first_difference(&self, other: &Triangle) -> Option<(usize, usize, Rational, Rational)> {
        let top = self.rows.len().max(other.rows.len());
        for n in 0..top {
            for k in 0..=n {
                let (a, b) = (self.get(n, k), other.get(n, k));
                if a != b {
                    return Some((n, k, a, b));
                }
            }
        }
        None
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for (n, row) in self.rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                out.push_str(&format!("{n},{k},{v}\n"));
            }
        }
        out
    }

    pub fn from_csv(text: &str, family: Family, params: Map<String, Value>) -> Result<Self> {
        let mut lines = text.lines();
        if lines.next().map(str::trim) != Some("n,k,value") {
            return Err(Error::Malformed("missing `n,k,value` header".into()));
        }
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let mut parts = line.splitn(3, ',');
            let bad = || Error::Malformed(format!("bad csv line `{line}`"));
            let n: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
            let k: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
            let v: Rational = parts.next().ok_or_else(bad)?.parse()?;
            if k > n {
                return Err(bad());
            }
            while rows.len() <= n {
                let m = rows.len();
                rows.push(vec![Rational::zero(); m + 1]);
            }
            rows[n][k] = v;
        }
        Ok(Triangle::new(family, params, rows))
    }

    pub fn to_json(&self) -> String {
        let doc = TriangleDoc {
            family: self.family,
            params: self.params.clone(),
            rows: self.rows.clone(),
        };
        serde_json::to_string(&doc).expect("triangle serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TriangleDoc = serde_json::from_str(text)?;
        Ok(Triangle::new(doc.family, doc.params, doc.rows))
    }

    /// Aligned plain-text rendering.
    pub fn to_pretty(&self) -> String {
        let cells: Vec<Vec<String>> =
            self.rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = format!("{} {}\n", self.family, Value::Object(self.params.clone()));
        for (n, row) in cells.iter().enumerate() {
            out.push_str(&format!("{n:>3} |"));
            for c in row {
                out.push_str(&format!(" {c:>width$}"));
            }
            out.push('\n');
        }
        out
    }
}

fn psi_params(seq: &PsiSequence) -> Map<String, Value> {
    match seq.describe() {
        Value::Object(m) => m,
        _ => unreachable!("describe returns an object"),
    }
}

fn q_params(q: &Rational) -> Map<String, Value> {
    params([("q", json!(q.to_string()))])
}

/// `{n+1, k} = {n, k-1} + k_ψ {n, k}` with `{n, 0} = δ_{n,0}`.
pub fn tilde2_by_recurrence(seq: &PsiSequence, max_n: usize) -> Result<Triangle> {
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    let values = seq.values_below(max_n + 1)?;
    for n in 0..max_n {
        let prev = &rows[n];
        let mut next = vec![Rational::zero(); n + 2];
        for k in 1..=n + 1 {
            let mut cell = prev[k - 1].clone();
            if k <= n {
                cell += &values[k] * &prev[k];
            }
            next[k] = cell;
        }
        rows.push(next);
    }
    Ok(Triangle::new(Family::Tilde2, psi_params(seq), rows))
}

/// Row `n` is the coordinate vector of `x^n` in the basis `ψ_k(x)`.
pub fn tilde2_by_basis(seq: &PsiSequence, max_n: usize) -> Result<Triangle> {
    let nodes = seq.values_below(max_n)?;
    let rows = (0..=max_n)
        .map(|n| newton_coefficients(&Poly::monomial(Rational::one(), n), &nodes))
        .collect::<Result<Vec<_>>>()?;
    Ok(Triangle::new(Family::Tilde2, psi_params(seq), rows))
}

/// Coefficient of `x^n` in `x^k / ∏_{i=1}^{k} (1 - i_ψ x)`, by partial
/// fractions: `Σ_r c_r r_ψ^(n-k)` with `c_r = ∏_{i≠r} r_ψ / (r_ψ - i_ψ)`.
///
/// Requires `1_ψ, …, k_ψ` pairwise distinct. Returns `δ_{n,0}` for `k = 0`
/// and zero for `k > n`.
pub fn tilde2_by_partial_fractions(seq: &PsiSequence, n: usize, k: usize) -> Result<Rational> {
    if k == 0 {
        return Ok(if n == 0 { Rational::one() } else { Rational::zero() });
    }
    if k > n {
        return Ok(Rational::zero());
    }
    if let Some((first, second)) = seq.first_repeat(k)? {
        return Err(Error::RepeatedNodes { value: seq.value(first)?.to_string(), first, second });
    }
    let values = seq.values_below(k + 1)?;
    let mut total = Rational::zero();
    for r in 1..=k {
        let vr = &values[r];
        let mut c = Rational::one();
        for (i, vi) in values.iter().enumerate().skip(1) {
            if i != r {
                c = c * vr / (vr - vi);
            }
        }
        total += c * vr.pow((n - k) as i64);
    }
    Ok(total)
}

/// Brute-force sum of `1_ψ^d_1 ⋯ k_ψ^d_k` over weak compositions
/// `d_1 + … + d_k = n - k`.
pub fn tilde2_by_compositions(seq: &PsiSequence, n: usize, k: usize) -> Result<Rational> {
    if n > COMPOSITION_LIMIT {
        return Err(Error::OracleLimit { n, limit: COMPOSITION_LIMIT });
    }
    if k > n {
        return Ok(Rational::zero());
    }
    if k == 0 {
        return Ok(if n == 0 { Rational::one() } else { Rational::zero() });
    }
    let values = seq.values_below(k + 1)?;
    // powers[i][d] = (i+1)_ψ^d
    let budget = n - k;
    let powers: Vec<Vec<Rational>> = values[1..]
        .iter()
        .map(|v| {
            let mut p = vec![Rational::one()];
            for d in 1..=budget {
                p.push(&p[d - 1] * v);
            }
            p
        })
        .collect();
    let mut total = Rational::zero();
    let mut parts = vec![0usize; k];
    enumerate_compositions(&mut parts, 0, budget, &mut |parts| {
        let term: Rational = parts.iter().enumerate().map(|(i, &d)| &powers[i][d]).product();
        total += term;
    });
    Ok(total)
}

fn enumerate_compositions(parts: &mut [usize], slot: usize, left: usize, f: &mut impl FnMut(&[usize])) {
    if slot + 1 == parts.len() {
        parts[slot] = left;
        f(parts);
        return;
    }
    for d in 0..=left {
        parts[slot] = d;
        enumerate_compositions(parts, slot + 1, left - d, f);
    }
}

/// Brute-force sum of `(i_1)_ψ ⋯ (i_{n-k})_ψ` over nondecreasing index
/// sequences `1 ≤ i_1 ≤ … ≤ i_{n-k} ≤ k`.
pub fn tilde2_by_multisets(seq: &PsiSequence, n: usize, k: usize) -> Result<Rational> {
    if n > COMPOSITION_LIMIT {
        return Err(Error::OracleLimit { n, limit: COMPOSITION_LIMIT });
    }
    if k > n {
        return Ok(Rational::zero());
    }
    if k == 0 {
        return Ok(if n == 0 { Rational::one() } else { Rational::zero() });
    }
    let values = seq.values_below(k + 1)?;
    let mut total = Rational::zero();
    let mut picks = vec![1usize; n - k];
    walk_multisets(&mut picks, 0, 1, k, &mut |picks| {
        total += picks.iter().map(|&i| &values[i]).product::<Rational>();
    });
    Ok(total)
}

fn walk_multisets(picks: &mut [usize], slot: usize, low: usize, high: usize, f: &mut impl FnMut(&[usize])) {
    if slot == picks.len() {
        f(picks);
        return;
    }
    for i in low..=high {
        picks[slot] = i;
        walk_multisets(picks, slot + 1, i, high, f);
    }
}

/// Whole triangle through [`tilde2_by_partial_fractions`].
pub fn tilde2_triangle_by_partial_fractions(seq: &PsiSequence, max_n: usize) -> Result<Triangle> {
    let rows = (0..=max_n)
        .map(|n| (0..=n).map(|k| tilde2_by_partial_fractions(seq, n, k)).collect())
        .collect::<Result<Vec<_>>>()?;
    Ok(Triangle::new(Family::Tilde2, psi_params(seq), rows))
}

/// Whole triangle through [`tilde2_by_compositions`].
pub fn tilde2_triangle_by_compositions(seq: &PsiSequence, max_n: usize) -> Result<Triangle> {
    let rows = (0..=max_n)
        .map(|n| (0..=n).map(|k| tilde2_by_compositions(seq, n, k)).collect())
        .collect::<Result<Vec<_>>>()?;
    Ok(Triangle::new(Family::Tilde2, psi_params(seq), rows))
}

/// Carlitz q-Stirling numbers: `{n+1, k}_q = q^(k-1) {n, k-1}_q + k_q {n, k}_q`.
pub fn carlitz2(q: &Rational, max_n: usize) -> Result<Triangle> {
    let values: Vec<Rational> = (0..=max_n).map(|k| q_integer(q, k)).collect();
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for n in 0..max_n {
        let prev = &rows[n];
        let mut next = vec![Rational::zero(); n + 2];
        let mut q_pow = Rational::one();
        for k in 1..=n + 1 {
            let mut cell = &q_pow * &prev[k - 1];
            if k <= n {
                cell += &values[k] * &prev[k];
            }
            next[k] = cell;
            q_pow *= q;
        }
        rows.push(next);
    }
    Ok(Triangle::new(Family::Carlitz2, q_params(q), rows))
}

/// Carlitz numbers read off the defining expansion
/// `x_q^n = Σ_k {n,k}_q x_q(x-1)_q ⋯ (x-k+1)_q`.
///
/// With `t = x_q`, `(x-j)_q = (t - j_q) / q^j`, so row `n` is the Newton
/// coordinate vector of `t^n` at nodes `j_q`, scaled by `q^C(k,2)`. Needs
/// `q ≠ 0`.
pub fn carlitz2_by_definition(q: &Rational, max_n: usize) -> Result<Triangle> {
    if q.is_zero() {
        return Err(Error::Malformed("the q-falling basis is undefined at q = 0".into()));
    }
    let seq = PsiSequence::q_gauss(q.clone());
    let tilde = tilde2_by_basis(&seq, max_n)?;
    let rows = tilde
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(k, v)| v * q.pow((k * k.saturating_sub(1) / 2) as i64))
                .collect()
        })
        .collect();
    Ok(Triangle::new(Family::Carlitz2, q_params(q), rows))
}

/// Inversion q-Stirling numbers:
/// `{n+1, k} = Σ_{l=0}^{n} C(n,l)_q {n-l, k-1}`, `{0,0} = 1`, `{n,0} = 0`.
pub fn inv2(q: &Rational, max_n: usize) -> Result<Triangle> {
    let binomials = q_binomial_rows(q, max_n);
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for n in 0..max_n {
        let mut next = vec![Rational::zero(); n + 2];
        for (k, cell) in next.iter_mut().enumerate().skip(1) {
            let mut acc = Rational::zero();
            for l in 0..=n {
                let inner = rows[n - l].get(k - 1).cloned().unwrap_or_else(Rational::zero);
                if !inner.is_zero() {
                    acc += &binomials[n][l] * inner;
                }
            }
            *cell = acc;
        }
        rows.push(next);
    }
    Ok(Triangle::new(Family::Inv2, q_params(q), rows))
}

/// `x (x - 1 + q) (x - 1 + q^2) ⋯ (x - 1 + q^(n-1))`.
pub fn cigler_poly(q: &Rational, n: usize) -> Poly {
    let roots: Vec<Rational> = (0..n).map(|j| Rational::one() - q.pow(j as i64)).collect();
    poly_root_product(&roots)
}

fn classical_nodes(count: usize) -> Vec<Rational> {
    (0..count).map(|i| Rational::from_integer(i as i64)).collect()
}

/// Cigler q-Stirling numbers: coordinates of [`cigler_poly`] in the classical
/// falling-factorial basis.
pub fn cigl2(q: &Rational, max_n: usize) -> Result<Triangle> {
    let nodes = classical_nodes(max_n);
    let rows = (0..=max_n)
        .map(|n| newton_coefficients(&cigler_poly(q, n), &nodes))
        .collect::<Result<Vec<_>>>()?;
    Ok(Triangle::new(Family::Cigl2, q_params(q), rows))
}

/// Cigler numbers by forward differences at `0, 1, …, k`:
/// `{n,k} = (1/k!) Σ_j (-1)^(k-j) C(k,j) P_n(j)`.
pub fn cigl2_by_differences(q: &Rational, max_n: usize) -> Result<Triangle> {
    let classical = PsiSequence::classical();
    let mut rows = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let p = cigler_poly(q, n);
        let samples: Vec<Rational> = (0..=n).map(|j| p.eval(&Rational::from_integer(j as i64))).collect();
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = Rational::zero();
            for (j, s) in samples.iter().enumerate().take(k + 1) {
                let term = classical.binomial(k, j)? * s;
                if (k - j) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= &term;
                }
            }
            row.push(acc / classical.factorial(k)?);
        }
        rows.push(row);
    }
    Ok(Triangle::new(Family::Cigl2, q_params(q), rows))
}

/// Row `k` holds the monomial coefficients of `ψ_k(x)`.
pub fn tilde1(seq: &PsiSequence, max_n: usize) -> Result<Triangle> {
    let rows = (0..=max_n)
        .map(|k| seq.falling_poly(k).map(Poly::into_coeffs))
        .collect::<Result<Vec<_>>>()?;
    Ok(Triangle::new(Family::Tilde1, psi_params(seq), rows))
}

/// `[k+1, r] = [k, r-1] - k_ψ [k, r]`, multiplying `ψ_k(x)` by `x - k_ψ`.
pub fn tilde1_by_recurrence(seq: &PsiSequence, max_n: usize) -> Result<Triangle> {
    first_kind_recurrence(seq, max_n, Family::Tilde1, true)
}

/// Row `k` holds the monomial coefficients of `x (x + 1_ψ) ⋯ (x + (k-1)_ψ)`.
pub fn cycle1(seq: &PsiSequence, max_n: usize) -> Result<Triangle> {
    let rows = (0..=max_n)
        .map(|k| seq.rising_poly(k).map(Poly::into_coeffs))
        .collect::<Result<Vec<_>>>()?;
    Ok(Triangle::new(Family::Cycle1, psi_params(seq), rows))
}

/// `[k+1, r] = [k, r-1] + k_ψ [k, r]`.
pub fn cycle1_by_recurrence(seq: &PsiSequence, max_n: usize) -> Result<Triangle> {
    first_kind_recurrence(seq, max_n, Family::Cycle1, false)
}

fn first_kind_recurrence(seq: &PsiSequence, max_n: usize, family: Family, signed: bool) -> Result<Triangle> {
    let values = seq.values_below(max_n + 1)?;
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for k in 0..max_n {
        let prev = &rows[k];
        let weight = if signed { -&values[k] } else { values[k].clone() };
        let mut next = vec![Rational::zero(); k + 2];
        for (r, cell) in next.iter_mut().enumerate() {
            let mut v = if r > 0 { prev[r - 1].clone() } else { Rational::zero() };
            if r <= k {
                v += &weight * &prev[r];
            }
            *cell = v;
        }
        rows.push(next);
    }
    Ok(Triangle::new(family, psi_params(seq), rows))
}

/// Checks `Σ_r [k r]~ {r l}~ = δ_{k,l}` for `k, l ≤ max_n`.
pub fn orthogonality_check(seq: &PsiSequence, max_n: usize) -> IdentityVerdict {
    let mut p = psi_params(seq);
    p.insert("cells".into(), json!("0<=l<=k<=max_n"));
    let tables = tilde1(seq, max_n).and_then(|a| Ok((a, tilde2_by_recurrence(seq, max_n)?)));
    let (first, second) = match tables {
        Ok(t) => t,
        Err(e) => return IdentityVerdict::inconclusive("eq20-orthogonality", p, max_n, e.to_string()),
    };
    let cells = (0..=max_n).flat_map(|k| {
        let (first, second) = (&first, &second);
        (0..=max_n).map(move |l| {
            let lhs: Rational = (0..=k).map(|r| first.get(k, r) * second.get(r, l)).sum();
            let rhs = if k == l { Rational::one() } else { Rational::zero() };
            Ok((k, l, lhs, rhs))
        })
    });
    check_cells("eq20-orthogonality", p, max_n, cells)
}
