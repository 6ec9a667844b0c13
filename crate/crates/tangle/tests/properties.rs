//! Property tests: jet arithmetic against finite differences on random
//! expression trees, serializer round trips, quadrature and root-finder
//! laws, and chart consistency on the gallery curves.

mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tangle::expr::Expression;
use tangle::numerics::{find_roots, integrate_adaptive, invert_monotone, ToleranceConfig};

/// Random expression sources of depth <= 5 over one variable `x`,
/// built from operations that stay smooth on [0.15, 0.85].
fn expr_source() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (0.1f64..1.5).prop_map(|c| format!("{c:?}")),
        Just("x".to_string()),
    ];
    leaf.prop_recursive(4, 48, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a} + {b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a} - {b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})*({b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})/(1.5 + ({b})^2)")),
            (inner.clone(), 2..4i32).prop_map(|(a, n)| format!("({a})^{n}")),
            inner.clone().prop_map(|a| format!("sin({a})")),
            inner.clone().prop_map(|a| format!("cos({a})")),
            inner.clone().prop_map(|a| format!("atan({a})")),
            inner.clone().prop_map(|a| format!("tanh({a})")),
            inner.clone().prop_map(|a| format!("sqrt(1 + ({a})^2)")),
            inner.clone().prop_map(|a| format!("-({a})")),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn jet_derivatives_match_finite_differences(src in expr_source(), x in 0.15f64..0.85) {
        let e = Expression::parse(&src).unwrap();
        let j = match e.evaluate_jet(x, 3) {
            Ok(j) => j,
            Err(_) => return Ok(()), // outside the safe domain
        };
        // keep to well-conditioned samples: moderate value/derivative
        // magnitudes and a bounded fourth derivative estimate
        for i in 0..=3 {
            prop_assume!(j.get(i).abs() <= 10.0);
        }
        let d = 1e-3;
        let (lo, hi) = (e.evaluate_jet(x - d, 3), e.evaluate_jet(x + d, 3));
        let (lo, hi) = match (lo, hi) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return Ok(()),
        };
        prop_assume!(((hi.c3 - lo.c3) / (2.0 * d)).abs() <= 1e3);

        let f = |x: f64| e.evaluate(x).unwrap();
        let h1 = 1e-6;
        let fd1 = (f(x + h1) - f(x - h1)) / (2.0 * h1);
        prop_assert!(
            (j.c1 - fd1).abs() <= 1e-5 * (1.0 + j.c1.abs()),
            "c1 {} vs fd {} for {}", j.c1, fd1, src
        );
        let h2 = 1e-4;
        let fd2 = (f(x + h2) - 2.0 * f(x) + f(x - h2)) / (h2 * h2);
        prop_assert!(
            (j.c2 - fd2).abs() <= 1e-5 * (1.0 + j.c2.abs()),
            "c2 {} vs fd {} for {}", j.c2, fd2, src
        );
    }

    #[test]
    fn serialization_round_trips_structurally(src in expr_source()) {
        let e = Expression::parse(&src).unwrap();
        let printed = e.to_string();
        let back = Expression::parse(&printed).unwrap();
        prop_assert_eq!(e, back, "printed: {}", printed);
    }

    #[test]
    fn jet_value_equals_plain_evaluation(src in expr_source(), x in 0.15f64..0.85) {
        let e = Expression::parse(&src).unwrap();
        if let Ok(j) = e.evaluate_jet(x, 3) {
            let v = e.evaluate(x).unwrap();
            prop_assert_eq!(v.to_bits(), j.c0.to_bits(), "{}", src);
        }
    }

    #[test]
    fn quadrature_is_additive(
        a in -2.0f64..2.0,
        b in 0.5f64..3.0,
        c in -1.0f64..1.0,
        p in 0.0f64..1.0,
        q in 0.0f64..1.0,
    ) {
        let f = move |x: f64| Ok(a * (b * x).sin() + c * x * x);
        let cfg = ToleranceConfig::default();
        let (lo, hi) = (0.0, 3.0);
        let m1 = lo + (hi - lo) * p.min(q);
        let m2 = lo + (hi - lo) * p.max(q);
        let parts = integrate_adaptive(f, lo, m1, &cfg).unwrap()
            + integrate_adaptive(f, m1, m2, &cfg).unwrap()
            + integrate_adaptive(f, m2, hi, &cfg).unwrap();
        let whole = integrate_adaptive(f, lo, hi, &cfg).unwrap();
        prop_assert!((parts - whole).abs() <= 4.0 * cfg.quad_tol * (1.0 + whole.abs()));
    }

    #[test]
    fn reported_roots_are_genuine(
        r1 in -1.8f64..1.8,
        gap in 0.2f64..1.5,
        scale in 0.3f64..3.0,
    ) {
        let r2 = r1 + gap;
        let f = move |x: f64| Ok(scale * (x - r1) * (x - r2));
        let cfg = ToleranceConfig::default();
        let roots = find_roots(f, -2.0, 4.0, &cfg).unwrap();
        // every reported root is a sign change or a numerical zero
        for r in &roots {
            let lo = f(r - 10.0 * cfg.root_tol).unwrap();
            let hi = f(r + 10.0 * cfg.root_tol).unwrap();
            prop_assert!(
                lo * hi <= 0.0 || f(*r).unwrap().abs() < 1e-14,
                "root {r} is not genuine"
            );
        }
        // well-separated roots are all found
        prop_assert_eq!(roots.len(), 2);
        prop_assert!((roots[0] - r1).abs() <= 1e-9);
        prop_assert!((roots[1] - r2).abs() <= 1e-9);
    }

    #[test]
    fn monotone_inversion_is_the_identity(
        a in 0.1f64..2.0,
        b in 0.1f64..2.0,
        c in -1.0f64..1.0,
        frac in 0.001f64..0.999,
    ) {
        // strictly increasing cubic
        let f = move |x: f64| Ok(a * x * x * x + b * x + c);
        let cfg = ToleranceConfig::default();
        let (lo, hi) = (-2.0, 2.0);
        let x_star = lo + (hi - lo) * frac;
        let y = f(x_star).unwrap();
        let x = invert_monotone(f, y, lo, hi, &cfg).unwrap();
        prop_assert!((x - x_star).abs() <= cfg.root_tol, "{x} vs {x_star}");
    }
}

#[test]
fn chart_round_trip_on_gallery_curves() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for curve in [&*EULER, &*ELASTICA, &*VERTEX, &*CIRCLE] {
        for seg in segments_based_at_zero(curve) {
            let (lo, hi) = (seg.theta_min(), seg.theta_max());
            for _ in 0..100 {
                let th = rng.random_range(lo + 1e-6..hi - 1e-6);
                let s = seg.s_of_theta(th).unwrap();
                let back = seg.theta_of_s(s).unwrap();
                assert!(
                    (back - th).abs() <= 1e-9,
                    "round trip {th} -> {s} -> {back}"
                );
            }
        }
    }
}

#[test]
fn identity_sign_tracks_curvature_slope() {
    // The theta-speed derivative has the opposite sign of dkappa/ds.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for curve in [&*EULER, &*ELASTICA] {
        for seg in segments_based_at_zero(curve) {
            let (lo, hi) = (seg.theta_min(), seg.theta_max());
            let span = hi - lo;
            for _ in 0..40 {
                let th = rng.random_range(lo + 0.1 * span..hi - 0.1 * span);
                let chk = seg.identity_residual(th, 1e-4).unwrap();
                let s = seg.s_of_theta(th).unwrap();
                let slope = curve.frame_at_s(s).unwrap().dkappa_ds;
                if slope.abs() < 1e-3 {
                    continue; // too close to a vertex for a stable sign
                }
                assert!(
                    chk.lhs.signum() == -slope.signum(),
                    "sign law broken at theta={th}: lhs {}, dkappa/ds {}",
                    chk.lhs,
                    slope
                );
            }
        }
    }
}

#[test]
fn gallery_expressions_round_trip() {
    for src in [
        "s + s^3/3",
        "1 + s^2",
        "2 + sin(s)",
        "x^2 / sqrt(1 - x^4)",
        "sin(t^2/2)",
        "1 + (((3*t + sqrt(9*t^2 + 4))/2)^(1/3) - ((3*t + sqrt(9*t^2 + 4))/2)^(-1/3))^2",
    ] {
        let e = Expression::parse(src).unwrap();
        let back = Expression::parse(&e.to_string()).unwrap();
        assert_eq!(e, back, "{src}");
    }
}
