//! Serialized ledger of verdicts.
//!
//! The JSON ledger is an array of records
//! `{"identity_id", "params", "range", "q_samples", "verdict", "counterexample"?}`
//! with rationals written as `"p/q"` strings and `counterexample` present only
//! on FAILED records. Keys inside `params` are sorted, so equal inputs give
//! byte-identical output.

use crate::error::Result;
use crate::exactnum::Rational;
use crate::harness::verdict::{IdentityVerdict, Verdict};

pub fn export_ledger(verdicts: &[IdentityVerdict]) -> String {
    serde_json::to_string_pretty(verdicts).expect("verdicts always serialize") + "\n"
}

pub fn parse_ledger(text: &str) -> Result<Vec<IdentityVerdict>> {
    Ok(serde_json::from_str(text)?)
}

fn q_column(v: &IdentityVerdict) -> String {
    match v.q_samples.len() {
        0 => "-".to_string(),
        1 => v.q_samples[0].to_string(),
        n => format!("{}..{} ({n})", v.q_samples[0], v.q_samples[n - 1]),
    }
}

/// Exact when short, else a 12-digit decimal.
fn short(r: &Rational) -> String {
    let exact = r.to_string();
    if exact.len() <= 32 {
        exact
    } else {
        format!("~{}", r.to_decimal(12))
    }
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Verified => "VERIFIED",
        Verdict::Failed => "FAILED",
        Verdict::Inconclusive => "INCONCLUSIVE",
    }
}

/// Fixed-width table, one line per verdict, followed by totals.
pub fn summary_table(verdicts: &[IdentityVerdict]) -> String {
    let rows: Vec<[String; 5]> = verdicts
        .iter()
        .map(|v| {
            let detail = match (&v.counterexample, v.params.get("reason")) {
                (Some(c), _) => format!("n={} k={}: {} vs {}", c.n, c.k, short(&c.lhs), short(&c.rhs)),
                (None, Some(r)) => r.as_str().unwrap_or_default().to_string(),
                _ => String::new(),
            };
            [v.identity_id.clone(), q_column(v), v.range.to_string(), verdict_word(v.verdict).to_string(), detail]
        })
        .collect();
    let header = ["identity", "q", "range", "verdict", "detail"].map(String::from);
    let mut widths = header.clone().map(|h| h.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |row: &[String; 5]| {
        let cells: Vec<String> = row[..4]
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("{}  {}", cells.join("  "), row[4]).trim_end().to_string() + "\n"
    };
    let mut out = line(&header);
    for row in &rows {
        out += &line(row);
    }
    let count = |kind: Verdict| verdicts.iter().filter(|v| v.verdict == kind).count();
    out += &format!(
        "{} verified, {} failed, {} inconclusive\n",
        count(Verdict::Verified),
        count(Verdict::Failed),
        count(Verdict::Inconclusive)
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::harness::verdict::{params, Counterexample};
    use serde_json::json;

    #[test]
    fn empty_ledger() {
        assert_eq!(export_ledger(&[]), "[]\n");
    }

    #[test]
    fn verified_record_has_no_counterexample() {
        let v = IdentityVerdict::verified("eq20-orthogonality", params([("psi", json!("classical"))]), 4);
        let text = export_ledger(std::slice::from_ref(&v));
        assert!(!text.contains("counterexample"));
        assert!(text.contains("\"verdict\": \"VERIFIED\""));
        assert_eq!(parse_ledger(&text).unwrap(), vec![v]);
    }

    #[test]
    fn failed_record_schema() {
        let c = Counterexample { n: 3, k: 2, lhs: rat(7, 1), rhs: rat(15, 2) };
        let v = IdentityVerdict::failed("x", params([]), 3, c).with_q_samples(vec![rat(2, 1)]);
        let value: serde_json::Value = serde_json::from_str(&export_ledger(&[v])).unwrap();
        assert_eq!(
            value,
            json!([{
                "identity_id": "x",
                "params": {},
                "range": 3,
                "q_samples": ["2"],
                "verdict": "FAILED",
                "counterexample": {"n": 3, "k": 2, "lhs": "7", "rhs": "15/2"}
            }])
        );
    }

    #[test]
    fn summary_counts() {
        let v = IdentityVerdict::inconclusive("y", params([]), 2, "no tail bound");
        let table = summary_table(&[v]);
        assert!(table.contains("INCONCLUSIVE  no tail bound"));
        assert!(table.ends_with("0 verified, 0 failed, 1 inconclusive\n"));
    }
}
