//! Acceptance criteria, one line of output per criterion.
//!
//! Run with `cargo test -p harmonic-knots --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use harmonic_knots::cfrac::{
    crossing_number_bireg, evaluate, evaluate_fraction, expand_1212, positive_cf, sign_change_profile,
    two_bridge_equivalent, Fraction, SignedCF,
};
use harmonic_knots::chebgeom::{enumerate_crossings, z_difference_sign, HarmonicTriple};
use harmonic_knots::classify::{
    analyze, canonical_h4, cf_report, check_expectation, non_harmonic_family_check, predict_family,
};
use harmonic_knots::diagram::{build_gauss_code, conway_form_h4, ConwayForm};
use harmonic_knots::exact::{compare_cos, Sign};
use harmonic_knots::invariants::{
    alexander, alexander_of_fraction, determinant, factor_square, published_rows, LaurentPoly,
};

/// Criteria that cannot pass as stated; the reason is printed with the
/// result.
const KNOWN_FAILURES: &[u32] = &[7];

type Outcome = Result<String, String>;

fn triple(a: u64, b: u64, c: u64) -> HarmonicTriple {
    HarmonicTriple::new(a, b, c).unwrap()
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    if elapsed <= budget {
        Ok(())
    } else {
        Err(format!("took {elapsed:.2?}, budget {budget:?}"))
    }
}

fn table_rows(a: u64, budget: Duration) -> Outcome {
    let start = Instant::now();
    let rows: Vec<_> = published_rows().into_iter().filter(|r| r.triple.a() == a).collect();
    for row in &rows {
        let printed = row.fraction.as_ref().ok_or(format!("{} has no printed fraction", row.triple))?;
        let report = analyze(&row.triple).map_err(|e| e.to_string())?;
        let got = report.fraction.ok_or(format!("{}: no fraction", row.triple))?;
        if got.alpha() != printed.alpha() || !two_bridge_equivalent(&got, printed, true).unwrap() {
            return Err(format!("{}: computed {got}, printed {printed}", row.triple));
        }
        if a == 4 {
            let canon = canonical_h4(row.triple.b(), row.triple.c()).map_err(|e| e.to_string())?;
            let bireg = crossing_number_bireg(&canon.conway.to_cf()).map_err(|e| e.to_string())?;
            let n = (3 * canon.b_prime + canon.c_prime - 2) / 4;
            if bireg != n || report.crossing_number != Some(n) {
                return Err(format!("{}: crossing numbers {bireg} vs {n}", row.triple));
            }
        }
    }
    within(start.elapsed(), budget)?;
    Ok(format!("{} rows in {:.2?}", rows.len(), start.elapsed()))
}

fn criterion_1() -> Outcome {
    table_rows(3, Duration::from_secs(1))
}

fn criterion_2() -> Outcome {
    table_rows(4, Duration::from_secs(1)).map(|s| format!("{s}; the published table has 13 rows with a = 4"))
}

fn is_pm2(alpha: &BigInt, beta: &BigInt) -> bool {
    let sq = (beta * beta).mod_floor(alpha);
    sq == BigInt::from(2).mod_floor(alpha) || sq == BigInt::from(-2).mod_floor(alpha)
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for b in (5..60u64).step_by(2) {
        for c in (b + 2..3 * b).step_by(2) {
            if b + c > 60 || (c - b) % 4 == 0 || num_integer::gcd(b, c) != 1 {
                continue;
            }
            count += 1;
            let cf = conway_form_h4(b as i64, c as i64).map_err(|e| e.to_string())?;
            let f = evaluate_fraction(&cf.to_cf()).map_err(|e| e.to_string())?;
            let (alpha, beta) = (f.alpha().clone(), f.beta().clone());
            if beta.is_odd() {
                return Err(format!("H(4,{b},{c}): β of {f} is odd"));
            }
            if !is_pm2(&alpha, &beta) {
                return Err(format!("H(4,{b},{c}): β² ≢ ±2 for {f}"));
            }
            let profile = sign_change_profile(&cf.to_cf()).map_err(|e| e.to_string())?;
            if profile.max_run >= 2 {
                return Err(format!("H(4,{b},{c}): two consecutive sign changes in {cf}"));
            }
            let det = determinant(&build_gauss_code(&triple(4, b, c)).unwrap()).unwrap();
            if det != alpha {
                return Err(format!("H(4,{b},{c}): determinant {det} ≠ α = {alpha}"));
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("{count} canonical pairs in {:.2?}", start.elapsed()))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    for n in 2..=6u64 {
        let k = triple(2 * n - 1, 2 * n, 2 * n + 1);
        let expected = predict_family(&k).ok_or(format!("{k}: no prediction"))?;
        if expected.conway.terms().iter().map(|t| t.unsigned_abs()).sum::<u64>() != 2 * n - 1 {
            return Err(format!("{k}: {} does not have {} crossings", expected.conway, 2 * n - 1));
        }
        let check = check_expectation(&k, &expected).map_err(|e| e.to_string())?;
        if !check.alexander_matches || !check.determinant_matches {
            return Err(format!("{k}: {check:?} against {}", expected.claim));
        }
    }
    within(start.elapsed(), Duration::from_secs(120))?;
    Ok(format!("n = 2..6 (up to 60 crossings) in {:.2?}", start.elapsed()))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    for n in 1..=3u64 {
        let ni = n as i64;
        for (b, terms, det) in [
            (5 * n + 1, vec![2 * ni + 1, 2 * ni], 4 * n * n + 2 * n + 1),
            (5 * n + 3, vec![2 * ni + 1, 2 * ni + 2], 4 * n * n + 6 * n + 3),
        ] {
            let k = triple(5, b, b + 1);
            let gc = build_gauss_code(&k).unwrap();
            let cf = ConwayForm::new(terms);
            let expected = alexander_of_fraction(&cf).map_err(|e| e.to_string())?;
            if alexander(&gc).unwrap() != expected {
                return Err(format!("{k}: Δ differs from {cf}"));
            }
            let got = determinant(&gc).unwrap();
            let from_cf = evaluate(&cf.to_cf()).unwrap().numer().abs();
            if got != BigInt::from(det) || from_cf != BigInt::from(det) {
                return Err(format!("{k}: determinant {got}, expected {det}"));
            }
        }
    }
    Ok(format!("n = 1..3 in {:.2?}", start.elapsed()))
}

fn delta(a: u64, b: u64, c: u64) -> LaurentPoly {
    alexander(&build_gauss_code(&triple(a, b, c)).unwrap()).unwrap()
}

fn criterion_6() -> Outcome {
    let fig8 = delta(3, 5, 7);
    let composite = delta(5, 7, 11);
    if composite != &fig8 * &fig8 {
        return Err(format!("Δ(H(5,7,11)) = {composite}, Δ(H(3,5,7))² = {}", &fig8 * &fig8));
    }
    match factor_square(&composite) {
        Some(q) if q == fig8 => Ok(format!("Δ = ({q})²")),
        other => Err(format!("factor_square gave {other:?}")),
    }
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let pairs = [((5, 7, 9), (3, 7, 11)), ((7, 9, 11), (5, 9, 13)), ((9, 11, 13), (7, 11, 15)), ((11, 13, 15), (9, 13, 17))];
    let mut lines = Vec::new();
    let mut failed = Vec::new();
    for (p, q) in pairs {
        let (dp, dq) = (delta(p.0, p.1, p.2), delta(q.0, q.1, q.2));
        let ok = dp == dq;
        lines.push(format!("H{p:?} {} H{q:?}", if ok { "=" } else { "≠" }));
        if !ok {
            failed.push(format!("Δ(H{p:?}) = {dp} but Δ(H{q:?}) = {dq}"));
        }
    }
    // the two 6₃ fractions must also agree up to mirror image
    let f = analyze(&triple(3, 7, 11)).unwrap().fraction.unwrap();
    if !two_bridge_equivalent(&f, &Fraction::new(13, 8).unwrap(), true).unwrap() {
        failed.push(format!("13/8 is not equivalent to {f}"));
    }
    let summary = format!("{} ({:.2?})", lines.join(", "), start.elapsed());
    if failed.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; {}", failed.join("; ")))
    }
}

fn criterion_8() -> Outcome {
    let report = cf_report(9, 4).map_err(|e| e.to_string())?;
    let rep = report
        .even_representatives
        .iter()
        .find(|r| r.fraction == Fraction::new(9, 4).unwrap())
        .ok_or("9/4 missing from the cf report")?;
    if rep.expansion.terms() != [1, 2, -1, 2, 1, -2, 1, 2] || rep.profile.max_run < 2 {
        return Err(format!("9/4 expands to {} with profile {:?}", rep.expansion, rep.profile));
    }
    for n in 1..=5u64 {
        let r = non_harmonic_family_check(n).map_err(|e| e.to_string())?;
        let ok = r.beta_squared_minus2
            && r.construction_value_matches
            && r.expansion_matches_construction
            && r.crossing_number == 3 * n
            && r.obstructed == (n > 1);
        if !ok {
            return Err(format!("S(n + 1/(2n)) check failed for n = {n}: {r:?}"));
        }
    }
    Ok("9/4 = [1,2,-1,2,1,-2,1,2]; n = 1..5 obstructed exactly for n > 1".into())
}

fn random_fraction(rng: &mut StdRng) -> Fraction {
    loop {
        let alpha = 2 * rng.gen_range(1..2500i64) + 1;
        let beta = 2 * rng.gen_range(1..=(alpha - 1) / 2);
        if num_integer::gcd(alpha, beta) == 1 {
            return Fraction::new(alpha, beta).unwrap();
        }
    }
}

/// All `[1, 2e_2, e_3, ..., 2e_{2m}]` with `e_1 = 1`.
fn sign_patterns(m: usize) -> impl Iterator<Item = SignedCF> {
    (0..1u32 << (2 * m - 1)).map(move |bits| {
        let terms = (0..2 * m)
            .map(|i| {
                let e = if i == 0 || bits >> (i - 1) & 1 == 0 { 1 } else { -1 };
                if i % 2 == 0 {
                    e
                } else {
                    2 * e
                }
            })
            .collect();
        SignedCF::new(terms).unwrap()
    })
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x4a_b1_11_a2);
    for _ in 0..1000 {
        let f = random_fraction(&mut rng);
        let e = expand_1212(&f).map_err(|e| format!("{f}: {e}"))?;
        if evaluate_fraction(&e).unwrap() != f || sign_change_profile(&e).unwrap().max_run > 2 {
            return Err(format!("round trip failed for {f}"));
        }
        // r > 1 exactly when the second term is +2
        let gt1 = f.value() > num_rational::BigRational::from_integer(1.into());
        if e.terms()[0] != 1 || (e.terms()[1] == 2) != gt1 {
            return Err(format!("sign criterion fails for {f} = {e}"));
        }
    }
    for _ in 0..100 {
        let tail: Vec<i64> = (0..rng.gen_range(1..6)).map(|_| rng.gen_range(1..6) * if rng.gen() { 1 } else { -1 }).collect();
        let tail = SignedCF::new(tail).unwrap();
        let Ok(v) = evaluate(&tail) else { continue };
        for prefix in [[1, -2, 1, -2], [2, -1, 2, -1]] {
            let cf = SignedCF::new(prefix.to_vec()).unwrap().concat(&tail);
            if evaluate(&cf).ok() != Some(v.clone()) {
                return Err(format!("periodicity fails for {cf}"));
            }
        }
    }
    let mut patterns = 0;
    for m in 1..=6 {
        for cf in sign_patterns(m) {
            let Ok(f) = evaluate_fraction(&cf) else { continue };
            let profile = sign_change_profile(&cf).unwrap();
            if profile.palindromic
                && !is_pm2(f.alpha(), f.beta()) {
                    return Err(format!("palindromic {cf} = {f} has β² ≢ ±2"));
                }
            if let Ok(n) = crossing_number_bireg(&cf) {
                let v = f.canonical_up_to_mirror().value();
                let euclid: u64 = positive_cf(&v).unwrap().terms().iter().map(|&t| t as u64).sum();
                if n != euclid {
                    return Err(format!("{cf}: bireg {n}, Euclid {euclid}"));
                }
            }
            patterns += 1;
        }
    }
    let mut crossings = 0;
    for a in 3..=11u64 {
        for c in (a + 2..a + 40).step_by(1) {
            let Ok(k) = HarmonicTriple::new(a, a + 1, c) else { continue };
            for x in enumerate_crossings(&k).unwrap() {
                let t_minus_s: Sign = match compare_cos(&x.t_angle, &x.s_angle) {
                    std::cmp::Ordering::Greater => 1,
                    std::cmp::Ordering::Less => -1,
                    std::cmp::Ordering::Equal => 0,
                };
                if x.sign != z_difference_sign(&k, x.h, x.k).unwrap() * t_minus_s {
                    return Err(format!("{k}: shortcut fails at ({}, {})", x.h, x.k));
                }
                crossings += 1;
            }
        }
        if a % 2 == 1 {
            let k = triple(a, a + 1, a + 2);
            for x in enumerate_crossings(&k).unwrap() {
                let (t, s) = (x.t_angle.to_radians().cos(), x.s_angle.to_radians().cos());
                let cheb = |n: u64, u: f64| (n as f64 * u.acos()).cos();
                let lhs = cheb(a + 2, t) - cheb(a + 2, s);
                let rhs = 2.0 * (t - s) * cheb(a + 1, t);
                if (lhs - rhs).abs() > 1e-9 {
                    return Err(format!("{k}: z(t) − z(s) = {lhs}, 2(t − s)y(t) = {rhs}"));
                }
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("1000 round trips, {patterns} sign patterns, {crossings} b = a+1 crossings in {:.2?}", start.elapsed()))
}

fn criterion_10() -> Outcome {
    let r = analyze(&triple(3, 4, 5)).map_err(|e| e.to_string())?;
    let alpha = r.fraction.as_ref().map(|f| f.alpha().to_u64());
    let ok = alpha == Some(Some(3))
        && r.alexander == [1, -1, 1]
        && r.determinant == 3
        && r.crossing_number == Some(3)
        && r.name.as_deref() == Some("3₁");
    if ok {
        Ok(format!("fraction {}, Δ = 1 - t + t^2, det 3, crossing number 3", r.fraction.unwrap()))
    } else {
        Err(format!("{r:?}"))
    }
}

type Criterion = (u32, &'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (1, "table reproduction, a = 3", criterion_1),
        (2, "table reproduction, a = 4", criterion_2),
        (3, "closed-form Conway sequences for H(4,b,c), b + c ≤ 60", criterion_3),
        (4, "H(2n−1,2n,2n+1) against H(4,·,·) and C(3,2,…,2)", criterion_4),
        (5, "H(5,5n+1,5n+2) and H(5,5n+3,5n+4) against C(2n+1,2n), C(2n+1,2n+2)", criterion_5),
        (6, "composite H(5,7,11)", criterion_6),
        (7, "isotopic pairs by Alexander polynomial", criterion_7),
        (8, "twist-knot and S(n + 1/(2n)) exclusions", criterion_8),
        (9, "continued-fraction and geometry property suites", criterion_9),
        (10, "trefoil smoke test", criterion_10),
    ];
    let mut failing = Vec::new();
    for (id, title, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {id:>2}  {title}: {detail}"),
            Err(detail) => {
                let known = if KNOWN_FAILURES.contains(&id) { " [known]" } else { "" };
                println!("FAIL  {id:>2}  {title}: {detail}{known}");
                failing.push(id);
            }
        }
    }
    assert_eq!(failing, KNOWN_FAILURES, "unexpected set of failing criteria");
}
