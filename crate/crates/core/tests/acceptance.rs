//! Acceptance checks, one line per criterion. Runs as a plain binary so the
//! lines show up in `cargo test` output; exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use umbral_stirling::bell::{self, dobinski_check, dobinski_sum, SeriesSettings, WeightConvention};
use umbral_stirling::exactnum::poly_root_product;
use umbral_stirling::harness::claims::{self, Reading};
use umbral_stirling::harness::ledger::export_ledger;
use umbral_stirling::harness::registry::{default_q_samples, run_all, run_suite, RunConfig};
use umbral_stirling::oracle::partition_counts;
use umbral_stirling::stirling::{self, Triangle};
use umbral_stirling::umbral;
use umbral_stirling::{rat, PsiSequence, Rational};

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: std::result::Result<T, E>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn q_values() -> Vec<Rational> {
    vec![rat(2, 1), rat(1, 2), rat(3, 5)]
}

/// A fixed pseudorandom strictly increasing positive ψ-sequence.
fn random_custom_psi(len: usize) -> PsiSequence {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee);
    let mut acc = Rational::zero();
    let values = (0..len)
        .map(|_| {
            acc += Rational::new(rng.gen_range(1..=40), rng.gen_range(1..=9));
            acc.clone()
        })
        .collect();
    PsiSequence::custom(values)
}

fn parameter_set(len: usize) -> Vec<PsiSequence> {
    let mut out = vec![PsiSequence::classical()];
    out.extend(q_values().into_iter().map(PsiSequence::q_gauss));
    out.push(random_custom_psi(len));
    out
}

fn matches_partitions(t: &Triangle, max_n: usize) -> std::result::Result<(), String> {
    for n in 0..=max_n {
        let counts = ok(partition_counts(n))?;
        for (k, &c) in counts.iter().enumerate() {
            let cell = t.get(n, k);
            ensure(cell == Rational::from_integer(c as i64), || {
                format!("{:?} ({n},{k}) = {cell}, partitions give {c}", t.family())
            })?;
        }
    }
    Ok(())
}

fn criterion_1() -> Check {
    let n = 10;
    let one = Rational::one();
    for seq in [PsiSequence::classical(), PsiSequence::q_gauss(one.clone())] {
        matches_partitions(&ok(stirling::tilde2_by_recurrence(&seq, n))?, n)?;
        matches_partitions(&ok(stirling::tilde2_by_basis(&seq, n))?, n)?;
        matches_partitions(&ok(stirling::tilde2_triangle_by_partial_fractions(&seq, n))?, n)?;
        matches_partitions(&ok(stirling::tilde2_triangle_by_compositions(&seq, n))?, n)?;
    }
    matches_partitions(&ok(stirling::carlitz2(&one, n))?, n)?;
    matches_partitions(&ok(stirling::inv2(&one, n))?, n)?;
    matches_partitions(&ok(stirling::cigl2(&one, n))?, n)?;
    let expected = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
    let bell = ok(bell::bell_classical(n))?;
    let got: Vec<String> = bell.values.iter().map(ToString::to_string).collect();
    let want: Vec<String> = expected.iter().map(ToString::to_string).collect();
    ensure(got == want, || format!("Bell numbers {got:?}"))?;
    Ok("all second-kind families at q = 1 match set partitions for n <= 10; B_0..B_10 exact".into())
}

fn criterion_2() -> Check {
    let n = 10;
    for seq in parameter_set(n + 1) {
        let rec = ok(stirling::tilde2_by_recurrence(&seq, n))?;
        let routes = [
            ("basis", ok(stirling::tilde2_by_basis(&seq, n))?),
            ("partial fractions", ok(stirling::tilde2_triangle_by_partial_fractions(&seq, n))?),
            ("compositions", ok(stirling::tilde2_triangle_by_compositions(&seq, n))?),
        ];
        for (name, t) in routes {
            if let Some((row, k, a, b)) = t.first_difference(&rec) {
                return Err(format!("{} {name}: ({row},{k}) {a} vs {b}", seq.label()));
            }
        }
    }
    Ok("recurrence = basis = partial fractions = compositions, n <= 10, classical, q in {2, 1/2, 3/5}, custom".into())
}

fn criterion_3() -> Check {
    for seq in parameter_set(13) {
        let v = stirling::orthogonality_check(&seq, 12);
        ensure(v.is_verified(), || format!("{} {v:?}", seq.label()))?;
    }
    Ok("first kind x second kind = identity exactly, n <= 12, same five sequences".into())
}

fn criterion_4() -> Check {
    let mut qs = vec![Rational::one()];
    qs.extend(q_values());
    for q in &qs {
        for n in 0..=8 {
            let v = umbral::verify_weyl_expansion(q, n, 8);
            ensure(v.is_verified(), || format!("q = {q}, n = {n}: {v:?}"))?;
        }
        let v = umbral::q_leibnitz_check(q, 8);
        ensure(v.is_verified(), || format!("q-Leibnitz at q = {q}: {v:?}"))?;
    }
    Ok("(x d_q)^n expansion exact for n, m <= 8 at q in {1, 2, 1/2, 3/5}; q-Leibnitz holds on the degree-8 battery".into())
}

fn criterion_5() -> Check {
    for seq in [PsiSequence::classical(), PsiSequence::q_gauss(rat(2, 1)), random_custom_psi(11)] {
        let a = ok(umbral::exponential_polys_by_operator(&seq, 10))?;
        let b = ok(umbral::exponential_polys_by_rows(&seq, 10))?;
        ensure(a == b, || format!("{} differs", seq.label()))?;
    }
    Ok("A_n = [y(1 + d_psi)]^n 1 equals the row polynomials, n <= 10, classical, q = 2, custom".into())
}

fn criterion_6() -> Check {
    let v = bell::bell_egf_check(12);
    ensure(v.is_verified(), || format!("{v:?}"))?;
    Ok("exp(e^x - 1) coefficients equal B_n / n! through order 12".into())
}

fn criterion_7() -> Check {
    let classical = PsiSequence::classical();
    let tol = Rational::ten_pow_neg(13);
    let limit = Rational::ten_pow_neg(12);
    let bells = ok(bell::bell_classical(10))?;
    for n in 0..=10 {
        let approx = ok(dobinski_sum(&classical, n, WeightConvention::Times, false, &tol, 60))?;
        let tail = approx.tail_bound.finite().cloned().ok_or_else(|| format!("n = {n}: no tail bound"))?;
        let err = (&approx.partial_sum - bells.get(n)).abs();
        ensure(err <= tail && tail <= limit, || format!("n = {n}: error {err}, tail {tail}"))?;
        if n == 5 {
            let d = approx.decimal(10);
            ensure(d == "52.0000000000", || format!("B_5 renders as {d}"))?;
        }
    }
    let settings = SeriesSettings { tol: tol.clone(), r_cap: 60 };
    let v = dobinski_check("eq16-dobinski-divides", &classical, 4, WeightConvention::Divides, false, &settings);
    let c = v.counterexample.as_ref().ok_or("divides convention was not reported FAILED")?;
    ensure(v.is_failed() && c.n == 0 && c.rhs.is_one(), || format!("{v:?}"))?;
    // weight 1/ε = e on top of Σ 1/r! = e
    let e_approx = c.lhs.to_decimal(6);
    ensure(e_approx.starts_with("7.38905"), || format!("divides n = 0 sum {e_approx}"))?;
    Ok(format!(
        "|approx - B_n| <= tail <= 1e-12 for n <= 10 with r_cap = 60; B_5 = 52.0000000000; divides FAILS at n = 0 with sum {e_approx}"
    ))
}

fn criterion_8() -> Check {
    for q in [Rational::one(), rat(2, 1), rat(1, 2)] {
        let sums = ok(umbral::cigl_row_sums(&q, 10))?;
        for (n, s) in sums.iter().enumerate() {
            let l = ok(umbral::cigl_dobinski_exact(&q, n))?;
            ensure(&l == s, || format!("q = {q}, n = {n}: L = {l}, row sum {s}"))?;
        }
    }
    let q = rat(1, 2);
    let tol = Rational::ten_pow_neg(15);
    let sums = ok(umbral::cigl_row_sums(&q, 8))?;
    for (n, exact) in sums.iter().enumerate() {
        let roots: Vec<Rational> = (0..n).map(|j| Rational::one() - q.pow(j as i64)).collect();
        let approx = ok(bell::poisson_expectation(&poly_root_product(&roots), &tol, 80))?;
        ensure(bell::judge(&approx, exact, &tol) == Some(true), || format!("Poisson route n = {n}: {approx:?}"))?;
    }
    Ok("L(cigl product) = cigl row sums exactly for n <= 10, q in {1, 2, 1/2}; Poisson series within its bound at q = 1/2, n <= 8".into())
}

fn criterion_9() -> Check {
    let config = RunConfig::new(8, default_q_samples());
    let ledger = run_all(&config);
    let required = [
        "ex3-carlitz-convolution",
        "ex3-carlitz-tilde-readingA",
        "ex3-carlitz-tilde-readingB",
        "ex4-bell-carlitz",
        "ex4-bell-tilde-readingA",
        "ex4-bell-tilde-readingB",
        "ex5-cigl-recurrence-readingA",
        "ex5-cigl-recurrence-readingB",
        "eq16-dobinski-times",
        "eq16-dobinski-divides",
        "eq16-dobinski-times-q17",
        "eq16-dobinski-divides-q17",
    ];
    for id in required {
        ensure(ledger.iter().any(|v| v.identity_id == id), || format!("ledger lacks {id}"))?;
    }

    let q = rat(2, 1);
    let v = ok(run_suite("ex5-cigl-recurrence", 3, &[q.clone(), Rational::one()]))?;
    let (a, b, a_one) = (&v[0], &v[1], &v[2]);
    ensure(a.is_failed() && b.is_failed(), || "cigl readings did not fail at q = 2".into())?;
    let cb = b.counterexample.as_ref().unwrap();
    // {3,2}: 1 + q + q^2 from the expansion, 2q + q^2 from reading B
    ensure((cb.n, cb.k) == (3, 2) && cb.lhs == rat(7, 1) && cb.rhs == rat(8, 1), || format!("reading B {cb:?}"))?;
    let (lhs, rhs) = ok(claims::ex5_cigl(&q, Reading::A, 3, 2))?;
    ensure(lhs != rhs, || "reading A agrees at (3,2)".into())?;
    ensure(a_one.identity_id.ends_with("readingA") && a_one.is_verified(), || format!("{a_one:?}"))?;
    let ca = a.counterexample.as_ref().unwrap();

    let again = export_ledger(&run_all(&config));
    ensure(export_ledger(&ledger) == again, || "ledgers differ between runs".into())?;
    Ok(format!(
        "{} verdicts incl. all ambiguous readings; cigl (3,2) mismatch under both readings (reading A first fails at ({},{})); q = 1 reading A VERIFIED; ledger byte-identical across runs",
        ledger.len(),
        ca.n,
        ca.k
    ))
}

fn criterion_10() -> Check {
    let start = Instant::now();
    let t = ok(stirling::tilde2_by_recurrence(&PsiSequence::classical(), 60))?;
    let table = start.elapsed();
    ensure(t.row_sum(60) > Rational::zero(), || "empty table".into())?;
    ensure(table < Duration::from_secs(5), || format!("N = 60 took {table:?}"))?;

    let start = Instant::now();
    let out = ok(Command::new(env!("CARGO_BIN_EXE_umbral-stirling")).args(["verify", "--all", "--max-n", "8"]).output())?;
    let verify = start.elapsed();
    ensure(out.status.code() == Some(0), || format!("verify exited with {:?}", out.status.code()))?;
    ensure(verify < Duration::from_secs(60), || format!("verify --all took {verify:?}"))?;
    Ok(format!("tilde2 N = 60 in {table:.2?}; verify --all --max-n 8 in {verify:.2?}"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("oracle equivalence", criterion_1),
        ("route independence", criterion_2),
        ("orthogonality", criterion_3),
        ("operator identity", criterion_4),
        ("exponential polynomials", criterion_5),
        ("Bell EGF", criterion_6),
        ("classical Dobinski", criterion_7),
        ("cigl Dobinski", criterion_8),
        ("ambiguity adjudication", criterion_9),
        ("performance", criterion_10),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
