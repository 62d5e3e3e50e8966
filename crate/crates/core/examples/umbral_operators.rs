//! Jackson derivative, dilation, and the operator identities built from them.

use umbral_stirling::stirling::carlitz2;
use umbral_stirling::umbral::{
    exponential_polys_by_operator, jackson_derivative, mult_by_x, q_dilation, q_leibnitz_check, rota_functional_poly,
    verify_weyl_expansion,
};
use umbral_stirling::{rat, Poly, PsiSequence, Rational};

fn main() -> umbral_stirling::Result<()> {
    let q = rat(3, 5);
    let d = jackson_derivative(&q);
    let x = mult_by_x();
    let p = Poly::from_i64(&[1, 2, 0, 1]);
    println!("{} applied to {p:?} = {:?}", d.tag(), d.apply(&p)?);
    println!("{} applied to {p:?} = {:?}", q_dilation(&q).tag(), q_dilation(&q).apply(&p)?);

    let theta = x.compose(&d);
    let cube = Poly::monomial(Rational::one(), 4);
    println!("{} x^4 = {:?}", theta.pow(2).tag(), theta.pow(2).apply(&cube)?);
    println!("row 2 of carlitz2: {:?}", carlitz2(&q, 2)?.row(2));

    for n in 0..=6 {
        assert!(verify_weyl_expansion(&q, n, 6).is_verified());
    }
    println!("(x d_q)^n = sum_k {{n,k}}_q x^k d_q^k on x^0..x^6 for n <= 6");
    println!("q-Leibnitz: {:?}", q_leibnitz_check(&q, 6).verdict);

    let a = exponential_polys_by_operator(&PsiSequence::q_gauss(q.clone()), 4)?;
    for (n, poly) in a.iter().enumerate() {
        println!("A_{n}(y) = {poly:?}");
    }

    // L(x^n) = B_n
    let bells: Vec<String> = (0..=6)
        .map(|n| rota_functional_poly(&Poly::monomial(Rational::one(), n)).map(|b| b.to_string()))
        .collect::<umbral_stirling::Result<_>>()?;
    println!("L(x^n) = {}", bells.join(", "));
    Ok(())
}
