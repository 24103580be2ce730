use std::f64::consts::{PI, TAU};

use proptest::prelude::*;
use srg_core::geometry::{
    cpt, envelope_points, f2_eval, min_circle_through_one, oval_roots, winding_number, ComplexPoint, DiskRegion,
    PolarQuadratic, Polyline, ScaledCircleFamily,
};

fn interior() -> impl Strategy<Value = f64> {
    0.001f64..0.999
}

/// Five-pointed star drawn twice around the origin's neighbourhood, with mixed winding.
fn star(n: usize) -> Polyline {
    let pts = (0..n)
        .map(|k| {
            let t = TAU * k as f64 / n as f64;
            ComplexPoint::from_polar(1.0 + 0.4 * (5.0 * t).cos(), t)
        })
        .collect();
    Polyline::new(pts, true).unwrap()
}

proptest! {
    #[test]
    fn roots_lie_on_the_quartic(t1 in interior(), t2 in interior(), phi in -PI..PI) {
        let q = PolarQuadratic::new(t1, t2).unwrap();
        for &r in oval_roots(&q, phi).as_slice() {
            let z = ComplexPoint::from_polar(r, phi);
            prop_assert!(f2_eval(t1, t2, z).abs() < 1e-9, "r={r} f2={}", f2_eval(t1, t2, z));
            // the same point written with the negative-radius convention
            let w = ComplexPoint::from_polar(-r, phi + PI);
            prop_assert!(f2_eval(t1, t2, w).abs() < 1e-9);
        }
    }

    #[test]
    fn root_product_is_d(t1 in interior(), t2 in interior(), phi in -PI..PI) {
        let q = PolarQuadratic::new(t1, t2).unwrap();
        let roots = oval_roots(&q, phi);
        if roots.len() == 2 {
            let s = roots.as_slice();
            prop_assert!((s[0] * s[1] - q.d()).abs() < 1e-12);
        }
        prop_assert!(q.d() > -1.0 && q.d() < 1.0);
    }

    #[test]
    fn one_is_a_root_at_zero(t1 in interior(), t2 in interior()) {
        let q = PolarQuadratic::new(t1, t2).unwrap();
        let roots = oval_roots(&q, 0.0);
        prop_assert!(roots.as_slice().iter().any(|r| (r - 1.0).abs() < 1e-12));
        prop_assert!(f2_eval(t1, t2, cpt(1.0, 0.0)).abs() < 1e-12);
    }

    #[test]
    fn winding_is_invariant(dx in -3.0f64..3.0, dy in -3.0f64..3.0, s in 0.1f64..10.0, px in -2.0f64..2.0, py in -2.0f64..2.0) {
        let curve = star(400);
        let p = cpt(px, py);
        prop_assume!(curve.distance_to(p) > 1e-6);
        let w = winding_number(&curve, p).unwrap();
        let shift = cpt(dx, dy);
        let moved = curve.map(|z| z * s + shift).unwrap();
        prop_assert_eq!(winding_number(&moved, p * s + shift).unwrap(), w);
        prop_assert_eq!(winding_number(&curve.reversed(), p).unwrap(), -w);
    }

    #[test]
    fn enclosing_radius_ignores_one_and_interior_points(
        pts in prop::collection::vec((-1.0f64..0.99, -1.0f64..1.0), 1..40),
        u in 0.0f64..1.0,
        v in 0.0f64..1.0,
    ) {
        let pts: Vec<_> = pts.into_iter().map(|(x, y)| cpt(x, y)).collect();
        let rho = min_circle_through_one(&pts).unwrap();
        let mut with_one = pts.clone();
        with_one.push(cpt(1.0, 0.0));
        prop_assert_eq!(min_circle_through_one(&with_one).unwrap(), rho);

        let disk = DiskRegion::averaged(rho.min(0.999_999)).unwrap();
        for &p in &pts {
            prop_assert!(disk.signed_distance(p) <= 1e-9 || rho >= 0.999_999);
        }
        let inside = DiskRegion { center: 1.0 - rho, radius: rho }.sample(u, v * 0.999);
        if inside.re < 1.0 - 1e-9 {
            let mut more = pts.clone();
            more.push(inside);
            let rho2 = min_circle_through_one(&more).unwrap();
            prop_assert!((rho2 - rho).abs() <= 1e-12 * rho.max(1.0), "{rho} {rho2}");
        }
    }
}

#[test]
fn winding_examples() {
    let circle = DiskRegion { center: 0.0, radius: 1.0 }.boundary(360).unwrap();
    assert_eq!(winding_number(&circle, cpt(0.0, 0.0)).unwrap(), 1);
    assert_eq!(winding_number(&circle, cpt(2.0, 0.0)).unwrap(), 0);
}

#[test]
fn envelope_matches_quartic_for_asymmetric_pair() {
    let family = ScaledCircleFamily { theta1: 0.25, theta2: 0.75 };
    let grid: Vec<f64> = (0..720).map(|k| -PI + TAU * k as f64 / 720.0).collect();
    let result = envelope_points(&family, &grid);
    assert!(result.points.len() > 700);
    for (_, z) in &result.points {
        assert!(f2_eval(0.25, 0.75, *z).abs() < 1e-6);
    }
}
