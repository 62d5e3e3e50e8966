//! Truncated Dobinski-type sums with rigorous tail bounds.

use umbral_stirling::bell::{bell_tilde, dobinski_sum, epsilon_weight, judge, WeightConvention};
use umbral_stirling::{rat, PsiSequence, Rational};

fn main() -> umbral_stirling::Result<()> {
    let tol = Rational::ten_pow_neg(15);
    let classical = PsiSequence::classical();

    let eps = epsilon_weight(&classical, 0, &tol, false)?;
    println!("eps(classical) ~ {} (+/- {}) after {} terms", eps.decimal(15), eps.tail_bound, eps.terms_used);

    for n in [0, 5, 10] {
        let a = dobinski_sum(&classical, n, WeightConvention::Times, false, &tol, 80)?;
        println!("B_{n:<2} ~ {}  tail <= {:.3e}  terms {}", a.decimal(12), a.tail_bound.finite().unwrap().to_f64(), a.terms_used);
    }

    // the printed weight divides by eps: every value is off by a factor e^2
    let a = dobinski_sum(&classical, 0, WeightConvention::Divides, false, &tol, 80)?;
    println!("divides, n = 0 ~ {}", a.decimal(12));

    for q in [rat(2, 1), rat(1, 2)] {
        let seq = PsiSequence::q_gauss(q.clone());
        let exact = bell_tilde(&seq, 3)?.get(3).clone();
        for (convention, q17) in [(WeightConvention::Times, false), (WeightConvention::Times, true)] {
            let a = dobinski_sum(&seq, 3, convention, q17, &tol, 80)?;
            let verdict = match judge(&a, &exact, &tol) {
                Some(true) => "agrees",
                Some(false) => "disagrees",
                None => "no tail bound",
            };
            let shown = match a.partial_sum.to_f64() {
                v if v.is_finite() => format!("{v:.6e}"),
                _ => "beyond f64".to_string(),
            };
            println!("q = {q}, {} q17 {q17}: {shown} vs exact {exact} ({verdict})", convention.name());
        }
    }
    Ok(())
}
