//! Outcome records of identity checks.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::Result;
use crate::exactnum::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Verified,
    Failed,
    Inconclusive,
}

/// A witness `lhs ≠ rhs` at cell `(n, k)`. For sequence-level identities
/// (Bell numbers, Dobinski sums) `k` is 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: usize,
    pub k: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityVerdict {
    pub identity_id: String,
    pub params: Map<String, Value>,
    pub range: usize,
    pub q_samples: Vec<Rational>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
}

impl IdentityVerdict {
    pub fn verified(id: impl Into<String>, params: Map<String, Value>, range: usize) -> Self {
        IdentityVerdict {
            identity_id: id.into(),
            params,
            range,
            q_samples: Vec::new(),
            verdict: Verdict::Verified,
            counterexample: None,
        }
    }

    pub fn failed(
        id: impl Into<String>,
        params: Map<String, Value>,
        range: usize,
        counterexample: Counterexample,
    ) -> Self {
        debug_assert!(counterexample.lhs != counterexample.rhs);
        IdentityVerdict {
            identity_id: id.into(),
            params,
            range,
            q_samples: Vec::new(),
            verdict: Verdict::Failed,
            counterexample: Some(counterexample),
        }
    }

    pub fn inconclusive(
        id: impl Into<String>,
        mut params: Map<String, Value>,
        range: usize,
        reason: impl Into<String>,
    ) -> Self {
        params.insert("reason".into(), Value::String(reason.into()));
        IdentityVerdict {
            identity_id: id.into(),
            params,
            range,
            q_samples: Vec::new(),
            verdict: Verdict::Inconclusive,
            counterexample: None,
        }
    }

    pub fn with_q_samples(mut self, q_samples: Vec<Rational>) -> Self {
        self.q_samples = q_samples;
        self
    }

    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }

    pub fn is_failed(&self) -> bool {
        self.verdict == Verdict::Failed
    }
}

/// Runs `cells`, which yields `(n, k, lhs, rhs)` in increasing `n`, and
/// returns FAILED at the first mismatch. Computation errors turn into
/// INCONCLUSIVE with the error text as the reason.
pub fn check_cells<I>(id: &str, params: Map<String, Value>, range: usize, cells: I) -> IdentityVerdict
where
    I: IntoIterator<Item = Result<(usize, usize, Rational, Rational)>>,
{
    for cell in cells {
        match cell {
            Ok((n, k, lhs, rhs)) => {
                if lhs != rhs {
                    return IdentityVerdict::failed(id, params, range, Counterexample { n, k, lhs, rhs });
                }
            }
            Err(e) => return IdentityVerdict::inconclusive(id, params, range, e.to_string()),
        }
    }
    IdentityVerdict::verified(id, params, range)
}

/// Builds a JSON object from `(key, value)` pairs.
pub fn params<const N: usize>(pairs: [(&str, Value); N]) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
