use harmonic_knots::cfrac::two_bridge_equivalent;
use harmonic_knots::chebgeom::HarmonicTriple;
use harmonic_knots::classify::{canonical_h4, predict_family, check_expectation, reduce_c, table_triples};
use harmonic_knots::diagram::build_gauss_code;
use harmonic_knots::invariants::alexander;
use num_integer::Integer;
use proptest::prelude::*;

fn odd_pairs(max_sum: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for b in (1..max_sum).step_by(2) {
        for c in (1..=max_sum - b).step_by(2) {
            if b != c && b.gcd(&c) == 1 {
                out.push((b, c));
            }
        }
    }
    out
}

#[test]
fn canonical_h4_is_idempotent() {
    for (b, c) in odd_pairs(200) {
        let r = canonical_h4(b, c).unwrap();
        let again = canonical_h4(r.b_prime, r.c_prime).unwrap();
        assert_eq!((again.b_prime, again.c_prime, again.mirrored), (r.b_prime, r.c_prime, false), "({b},{c})");
        if r.is_trivial() {
            continue;
        }
        assert!(r.b_prime < r.c_prime && r.c_prime < 3 * r.b_prime, "({b},{c}) → {r:?}");
        assert_ne!((r.c_prime - r.b_prime) % 4, 0);
        assert_eq!(r.crossing_number, (3 * r.b_prime + r.c_prime - 2) / 4);
        assert!(r.fraction.beta().is_even());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn canonical_pairs_are_unique(sample in prop::sample::subsequence(
        odd_pairs(200)
            .into_iter()
            .filter(|&(b, c)| b > 1 && b < c && c < 3 * b && (c - b) % 4 != 0)
            .collect::<Vec<_>>(),
        100,
    )) {
        let fractions: Vec<_> = sample.iter().map(|&(b, c)| canonical_h4(b, c).unwrap().fraction).collect();
        for i in 0..fractions.len() {
            for j in i + 1..fractions.len() {
                prop_assert!(
                    !two_bridge_equivalent(&fractions[i], &fractions[j], true).unwrap(),
                    "{:?} and {:?}", sample[i], sample[j]
                );
            }
        }
    }
}

#[test]
fn reduction_preserves_alexander() {
    let mut checked = 0;
    for a in 3u64..=6 {
        for b in a + 1..=30 / (a - 1) + 1 {
            for c in b + 1..3 * a * b {
                let Ok(k) = HarmonicTriple::new(a, b, c) else { continue };
                let (steps, reduced) = reduce_c(&k).unwrap();
                if steps.is_empty() || checked >= 40 {
                    continue;
                }
                if (c * 7 + b) % 5 != 0 {
                    continue;
                }
                let before = alexander(&build_gauss_code(&k).unwrap()).unwrap();
                let after = alexander(&build_gauss_code(&reduced).unwrap()).unwrap();
                assert_eq!(before, after, "{k} → {reduced}");
                assert_eq!(steps.last().unwrap().mirrored, steps.len() % 2 == 1);
                checked += 1;
            }
        }
    }
    assert!(checked >= 20, "{checked}");
}

#[test]
fn table_rows_are_already_reduced() {
    for k in table_triples(30) {
        assert!(reduce_c(&k).unwrap().0.is_empty(), "{k}");
    }
}

#[test]
fn family_predictions_hold() {
    for (a, b, c) in [(3, 4, 5), (5, 6, 7), (7, 8, 9), (5, 6, 7), (5, 11, 12), (5, 13, 14), (5, 8, 9), (5, 16, 17)] {
        let k = HarmonicTriple::new(a, b, c).unwrap();
        let e = predict_family(&k).unwrap_or_else(|| panic!("no prediction for {k}"));
        let check = check_expectation(&k, &e).unwrap();
        assert!(check.alexander_matches && check.determinant_matches, "{k}: {e:?}");
    }
    assert!(predict_family(&HarmonicTriple::new(3, 5, 7).unwrap()).is_none());
}
