//! Cigler q-Bell numbers three ways: row sums, the Rota functional of the
//! Cigler product, and the Poisson series.

use umbral_stirling::bell::poisson_expectation;
use umbral_stirling::stirling::cigler_poly;
use umbral_stirling::umbral::{cigl_dobinski_exact, cigl_row_sums};
use umbral_stirling::{rat, Rational};

fn main() -> umbral_stirling::Result<()> {
    let q = rat(1, 2);
    let tol = Rational::ten_pow_neg(15);
    let sums = cigl_row_sums(&q, 8)?;
    for (n, s) in sums.iter().enumerate() {
        let functional = cigl_dobinski_exact(&q, n)?;
        let series = poisson_expectation(&cigler_poly(&q, n), &tol, 80)?;
        println!(
            "n = {n}: row sum {s:<12} L(...) {functional:<12} Poisson {} (+/- {:.1e})",
            series.decimal(12),
            series.tail_bound.finite().map(Rational::to_f64).unwrap_or(f64::INFINITY)
        );
    }
    Ok(())
}
