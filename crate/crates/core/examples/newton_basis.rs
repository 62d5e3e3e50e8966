//! Converting polynomials between the monomial basis and Newton bases.
//!
//! With nodes `0, 1_ψ, 2_ψ, …` the Newton coordinates of `x^n` are exactly
//! the ψ-Stirling numbers of the second kind.

use umbral_stirling::exactnum::{from_newton, newton_coefficients, poly_root_product};
use umbral_stirling::{rat, Poly, PsiSequence, Rational};

fn show(coords: &[Rational]) -> String {
    coords.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn main() -> umbral_stirling::Result<()> {
    // x(x-1)(x-3) is the q = 2 falling product of degree 3
    let falling = poly_root_product(&[rat(0, 1), rat(1, 1), rat(3, 1)]);
    println!("x(x-1)(x-3) = {falling:?}");

    let cube = Poly::monomial(Rational::one(), 3);
    for seq in [PsiSequence::classical(), PsiSequence::q_gauss(rat(2, 1)), PsiSequence::q_gauss(rat(1, 3))] {
        let nodes = seq.values_below(3)?;
        let coords = newton_coefficients(&cube, &nodes)?;
        println!("x^3 at nodes [{}] -> [{}]", show(&nodes), show(&coords));
        assert_eq!(from_newton(&coords, &nodes), cube);
    }

    // any node list works, not only ψ-values
    let nodes = [rat(1, 2), rat(-2, 1), rat(5, 1)];
    let p = Poly::from_i64(&[4, 0, -1, 2]);
    let coords = newton_coefficients(&p, &nodes)?;
    println!("{p:?} at nodes [{}] -> [{}]", show(&nodes), show(&coords));

    match newton_coefficients(&p, &nodes[..2]) {
        Err(e) => println!("two nodes for a cubic: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
