//! Five independent constructions of the ψ-Stirling numbers `{n,k}~_ψ` for a
//! hand-picked sequence, compared cell by cell.

use umbral_stirling::stirling::{
    tilde2_by_basis, tilde2_by_compositions, tilde2_by_multisets, tilde2_by_partial_fractions, tilde2_by_recurrence,
};
use umbral_stirling::{rat, PsiSequence};

fn main() -> umbral_stirling::Result<()> {
    let seq = PsiSequence::custom(vec![rat(1, 1), rat(5, 2), rat(3, 1), rat(22, 7), rat(7, 1), rat(8, 1), rat(19, 2)]);
    let n = 7;
    let rec = tilde2_by_recurrence(&seq, n)?;
    let basis = tilde2_by_basis(&seq, n)?;
    assert_eq!(rec, basis);

    for row in 1..=n {
        for k in 1..=row {
            let cell = rec.get(row, k);
            assert_eq!(tilde2_by_partial_fractions(&seq, row, k)?, cell);
            assert_eq!(tilde2_by_compositions(&seq, row, k)?, cell);
            assert_eq!(tilde2_by_multisets(&seq, row, k)?, cell);
        }
    }
    print!("{}", rec.to_pretty());
    println!("recurrence, basis, partial fractions, compositions and multisets agree through n = {n}");

    // repeated values break the partial-fraction route only
    let repeated = PsiSequence::custom(vec![rat(1, 1), rat(2, 1), rat(1, 1)]);
    println!("{}", tilde2_by_partial_fractions(&repeated, 3, 3).unwrap_err());
    println!("compositions still give {{3,3}} = {}", tilde2_by_compositions(&repeated, 3, 3)?);
    Ok(())
}
