//! Bell numbers of several families as row sums.

use umbral_stirling::bell::{bell_carlitz_by_recurrence, bell_carlitz_by_rows, bell_cigl, bell_classical, bell_tilde};
use umbral_stirling::{rat, PsiSequence, Rational};

fn line(name: &str, values: &[Rational]) {
    let v: Vec<String> = values.iter().map(ToString::to_string).collect();
    println!("{name:<22} {}", v.join(", "));
}

fn main() -> umbral_stirling::Result<()> {
    let n = 8;
    line("classical", &bell_classical(n)?.values);
    let q = rat(1, 2);
    line("tilde, q = 1/2", &bell_tilde(&PsiSequence::q_gauss(q.clone()), n)?.values);
    line("carlitz rows, q = 1/2", &bell_carlitz_by_rows(&q, n)?.values);
    // the printed q-binomial recurrence drifts away from the row sums at n = 3
    line("carlitz recurrence", &bell_carlitz_by_recurrence(&q, n)?.values);
    line("cigl, q = 1/2", &bell_cigl(&q, n)?.values);
    Ok(())
}
