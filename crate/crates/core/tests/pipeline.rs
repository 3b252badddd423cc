use chord_core::plane::{curve_points_fp, is_flex};
use chord_core::sample::random_curves;
use chord_core::verify::{run_full_suite, Status};
use chord_core::{chord_cubic, chord_map, CurveParams, PrimeField, Rational};

fn q(n: i64) -> Rational {
    Rational::from(n)
}

#[test]
fn full_suite_over_several_primes() {
    let c = CurveParams::new(q(-3), q(2)).unwrap();
    for p in [5, 7, 11, 101] {
        let reports = run_full_suite(&c, p, 8).unwrap();
        assert_eq!(reports.len(), 13);
        for r in &reports {
            assert_ne!(r.status, Status::Fail, "p = {p}: {r:?}");
        }
    }
}

#[test]
fn suite_json_shape() {
    let c = CurveParams::new(q(0), q(1)).unwrap();
    let reports = run_full_suite(&c, 13, 8).unwrap();
    let v = serde_json::to_value(&reports).unwrap();
    for r in v.as_array().unwrap() {
        let keys: Vec<_> = r.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["claim", "stats", "status", "witness"]);
        assert!(r["stats"]["points_checked"].is_u64());
        assert!(r["stats"].get("elapsed_ms").is_none());
    }
}

#[test]
fn image_count_is_half_the_curve() {
    let f = PrimeField::new(31).unwrap();
    for c in random_curves(3, f, 10) {
        let n = c.enumerate_points().len();
        assert_eq!(curve_points_fp(&chord_cubic(&c), f).len(), n, "#G(F_p) = #E′(F_p) = #E(F_p)");
        let image: std::collections::BTreeSet<_> = c.enumerate_points().iter().map(chord_map).collect();
        assert_eq!(image.len() * 2, n);
    }
}

#[test]
fn rational_flexes_map_to_flexes() {
    // x² − 3x + 2 = (x − 1)(x − 2): both γ are rational
    let c = CurveParams::new(q(-3), q(2)).unwrap();
    let g = chord_cubic(&c);
    let flexes = c.three_torsion_flexes();
    assert!(!flexes.is_empty());
    for q3 in &flexes {
        for gamma in c.gammas() {
            let line = chord_map(&q3.group_add(&gamma).unwrap());
            assert!(is_flex(&g, &line.to_point()).unwrap(), "{q3} + {gamma}");
        }
    }
}
