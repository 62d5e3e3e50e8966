//! Every Stirling-like family at one value of q, plus CSV and JSON export.

use umbral_stirling::stirling::{carlitz2, cigl2, cycle1, inv2, tilde1, tilde2_by_recurrence};
use umbral_stirling::{rat, PsiSequence};

fn main() -> umbral_stirling::Result<()> {
    let q = rat(2, 1);
    let seq = PsiSequence::q_gauss(q.clone());
    let n = 5;

    let tables = [
        tilde2_by_recurrence(&seq, n)?,
        carlitz2(&q, n)?,
        inv2(&q, n)?,
        cigl2(&q, n)?,
        tilde1(&seq, n)?,
        cycle1(&seq, n)?,
    ];
    for t in &tables {
        print!("{}", t.to_pretty());
        println!();
    }

    // q = 1 collapses every second-kind family onto S(n, k)
    let one = rat(1, 1);
    print!("{}", carlitz2(&one, 4)?.to_csv());
    println!("{}", cigl2(&one, 4)?.to_json());
    Ok(())
}
