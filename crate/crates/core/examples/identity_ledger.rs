//! Runs every registered suite and prints the summary table.
//!
//! `cargo run --example identity_ledger -- 6` limits rows to 6.

use std::time::Instant;

use umbral_stirling::harness::ledger::summary_table;
use umbral_stirling::harness::registry::{default_q_samples, run_all, unexpected_failures, RunConfig};

fn main() {
    let max_n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    let start = Instant::now();
    let verdicts = run_all(&RunConfig::new(max_n, default_q_samples()));
    print!("{}", summary_table(&verdicts));
    println!("unexpected failures: {}", unexpected_failures(&verdicts).len());
    println!("elapsed: {:.2?}", start.elapsed());
}
