//! Exact truncated power series: the Bell EGF and ψ-Stirling column OGFs.

use umbral_stirling::exactnum::{series_exp, TruncatedSeries};
use umbral_stirling::stirling::tilde2_by_recurrence;
use umbral_stirling::{rat, PsiSequence, Rational};

fn main() -> umbral_stirling::Result<()> {
    let order = 8;
    let inner = &TruncatedSeries::exponential(order) - &TruncatedSeries::one(order);
    let egf = series_exp(&inner)?;
    let mut factorial = Rational::one();
    let bells: Vec<String> = (0..=order)
        .map(|n| {
            if n > 0 {
                factorial *= &Rational::from_integer(n as i64);
            }
            (egf.coeff(n) * &factorial).to_string()
        })
        .collect();
    println!("n! [x^n] exp(e^x - 1) = {}", bells.join(", "));

    // G_k(x) = x^k / ((1 - 1_ψ x) ⋯ (1 - k_ψ x)), column k of the triangle
    let seq = PsiSequence::q_gauss(rat(2, 1));
    let t = tilde2_by_recurrence(&seq, order)?;
    let k = 3;
    let mut g = TruncatedSeries::one(order);
    for i in 1..=k {
        let factor = TruncatedSeries::new(order, vec![Rational::one(), -seq.value(i)?]).inverse()?;
        g = &(&g * &TruncatedSeries::x(order)) * &factor;
    }
    for n in 0..=order {
        assert_eq!(g.coeff(n), &t.get(n, k));
    }
    let column: Vec<String> = g.coeffs().iter().map(ToString::to_string).collect();
    println!("column {k} at q = 2: {}", column.join(", "));
    Ok(())
}
