use harmonic_knots::chebgeom::HarmonicTriple;
use harmonic_knots::render::{billiard_point, billiard_vertices, render_billiard, render_xy, RenderOptions};
use proptest::prelude::*;

fn triple() -> impl Strategy<Value = HarmonicTriple> {
    (3u64..=8)
        .prop_flat_map(|a| (Just(a), a + 1..a + 8))
        .prop_flat_map(|(a, b)| (Just(a), Just(b), b + 1..3 * a * b))
        .prop_filter_map("coprime", |(a, b, c)| HarmonicTriple::new(a, b, c).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn billiard_is_a_lattice_path_of_slope_one(k in triple()) {
        let (a, b) = (k.a() as i64, k.b() as i64);
        let v = billiard_vertices(&k);
        prop_assert_eq!(v.first().copied(), Some((-b, -a)));
        for &(x, y) in &v {
            prop_assert!(x.abs() == b || y.abs() == a, "({x}, {y}) is off the wall");
        }
        for w in v.windows(2) {
            let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
            prop_assert!(dx != 0 && dx.abs() == dy.abs());
        }
        // consecutive lattice points are one diagonal step apart
        for j in 0..k.a() * k.b() {
            let (p, q) = (billiard_point(&k, j), billiard_point(&k, j + 1));
            prop_assert_eq!((p.0 - q.0).abs(), 2);
            prop_assert_eq!((p.1 - q.1).abs(), 2);
        }
    }

    #[test]
    fn both_renderings_mark_every_crossing(k in triple()) {
        let n = k.crossing_count();
        let opts = RenderOptions { annotate_signs: true, samples: 200, ..Default::default() };
        let xy = render_xy(&k, &opts).unwrap();
        prop_assert_eq!(xy.matches(r#"class="strand""#).count(), n + 1);
        prop_assert_eq!(xy.matches(r#"class="sign""#).count(), n);
        let data_gaps = format!(r#"data-gaps="{n}""#);
        prop_assert!(xy.contains(&data_gaps));
        let billiard = render_billiard(&k, &opts).unwrap();
        prop_assert_eq!(billiard.matches(r#"class="crossing""#).count(), n);
        prop_assert_eq!(billiard.matches(r#"class="sign""#).count(), n);
    }
}

#[test]
fn lattice_points_match_the_arccos_rescaling() {
    // F(x) = (2/π) arccos x − 1, scaled by b and a
    for (a, b, c) in [(3, 4, 5), (4, 7, 9), (5, 8, 11)] {
        let k = HarmonicTriple::new(a, b, c).unwrap();
        for j in 0..=a * b {
            let th = j as f64 * std::f64::consts::PI / (a * b) as f64;
            let f = |x: f64| 2.0 / std::f64::consts::PI * x.clamp(-1.0, 1.0).acos() - 1.0;
            let (x, y) = ((a as f64 * th).cos(), (b as f64 * th).cos());
            let (bx, by) = billiard_point(&k, j);
            assert!((b as f64 * f(x) - bx as f64).abs() < 1e-6, "x at j = {j}");
            assert!((a as f64 * f(y) - by as f64).abs() < 1e-6, "y at j = {j}");
        }
    }
}
