use std::f64::consts::{FRAC_PI_2, PI};

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use srg_core::geometry::{f2_eval, winding_number, ComplexPoint, DiskRegion};
use srg_core::srg::{
    composition_region, dys_region, dys_step2_construct, o2_trajectory, region_contains, tangency_certificate,
    tight_composition_coeff, tightness_witness, DysClass,
};

fn grid(n: usize) -> Vec<f64> {
    (0..n).map(|k| -PI + 2.0 * PI * k as f64 / n as f64).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coefficient_is_symmetric_and_increasing(t1 in 0.01f64..0.98, t2 in 0.01f64..0.98, bump in 0.001f64..0.01) {
        let theta = tight_composition_coeff(t1, t2).unwrap();
        prop_assert!((theta - tight_composition_coeff(t2, t1).unwrap()).abs() < 1e-15);
        prop_assert!(theta > t1.max(t2) && theta < 1.0);
        prop_assert!(tight_composition_coeff(t1 + bump, t2).unwrap() > theta);
        prop_assert!(tight_composition_coeff(t1, t2 + bump).unwrap() > theta);
    }

    #[test]
    fn curvature_at_one_is_reciprocal_theta(t1 in 0.05f64..0.95, t2 in 0.05f64..0.95) {
        let cert = tangency_certificate(t1, t2, &grid(1000)).unwrap();
        for k in cert.curvature_finite_difference {
            prop_assert!((k - cert.curvature_closed_form).abs() < 1e-5);
        }
        prop_assert!(cert.curvature_error() < 1e-5, "{}", cert.curvature_error());
        prop_assert!(cert.g_residual_ok(1e-9) && cert.g_positive());
    }
}

#[test]
fn boundary_lies_in_tight_disk() {
    for &(t1, t2) in &[(0.25, 0.25), (0.5, 0.5), (0.25, 0.75), (0.75, 0.75), (0.1, 0.9), (0.6, 0.3)] {
        let region = composition_region(t1, t2, 1024).unwrap();
        let disk = DiskRegion::averaged(tight_composition_coeff(t1, t2).unwrap()).unwrap();
        for &z in region.boundary().points() {
            assert!(disk.signed_distance(z) <= 1e-9, "({t1},{t2}) {z}");
        }
    }
}

#[test]
fn shrunken_disks_have_witnesses() {
    for &(t1, t2) in &[(0.5, 0.5), (0.1, 0.2), (0.9, 0.05), (0.75, 0.75)] {
        let theta = tight_composition_coeff(t1, t2).unwrap();
        for delta in [0.05, 0.01] {
            let w = tightness_witness(t1, t2, delta).unwrap().expect("no witness");
            assert!(w.signed_distance > 0.0);
            assert!(DiskRegion::averaged((1.0 - delta) * theta).unwrap().signed_distance(w.point) > 0.0);
            assert!(DiskRegion::averaged(theta).unwrap().signed_distance(w.point) <= 1e-9);
        }
    }
}

fn random_class(rng: &mut ChaCha8Rng) -> DysClass {
    let beta = 0.1 + 4.9 * rng.random::<f64>();
    let gamma = 2.0 * beta * rng.random_range(1e-3..1.0 - 1e-3);
    DysClass::new(beta, gamma).unwrap()
}

#[test]
fn construction_lands_on_dys_circle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let cls = random_class(&mut rng);
        let theta = rng.random_range(-FRAC_PI_2..FRAC_PI_2);
        let c = dys_step2_construct(&cls, theta).unwrap();
        let disk = dys_region(&cls);
        assert!(((c.b - c.p).norm() - disk.radius).abs() < 1e-12);
        assert!((c.image(cls.gamma()) - c.b).norm() < 1e-12);
        assert!(((c.z3 * cls.beta() - 0.5).norm() - 0.5).abs() < 1e-9);
        assert!((c.o2 - c.p).norm() < disk.radius);
    }
}

#[test]
fn o2_encloses_center() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..50 {
        let cls = random_class(&mut rng);
        let disk = dys_region(&cls);
        let at_end = dys_step2_construct(&cls, -FRAC_PI_2).unwrap();
        assert!(((at_end.o2 - at_end.p).norm() - disk.radius).abs() < 1e-12);
        let path = o2_trajectory(&cls, 2048).unwrap();
        assert_ne!(winding_number(&path, ComplexPoint::new(disk.center, 0.0)).unwrap(), 0);
    }
}

fn check_oracle_against_sign(t1: f64, t2: f64, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let region = composition_region(t1, t2, 1024).unwrap();
    let mut tested = 0;
    while tested < 10_000 {
        let z = ComplexPoint::new(rng.random_range(-1.2..1.2), rng.random_range(-1.2..1.2));
        if region.boundary().distance_to(z) <= 1e-3 {
            continue;
        }
        tested += 1;
        let member = region_contains(&region, z);
        assert_eq!(member, region.contains_analytic(z), "({t1},{t2}) {z}");
        if member != (f2_eval(t1, t2, z) <= 0.0) {
            // inside the inner oval: f₂ > 0 there, yet the oracle finds a factorization
            assert!(member && f2_eval(t1, t2, z) > 0.0, "({t1},{t2}) {z}");
        }
    }
}

#[test]
fn oracle_agrees_with_quartic_sign() {
    let pairs = [(0.25, 0.75), (0.5, 0.5), (0.75, 0.75), (0.3, 0.1)];
    std::thread::scope(|scope| {
        for (k, &(t1, t2)) in pairs.iter().enumerate() {
            scope.spawn(move || check_oracle_against_sign(t1, t2, 13 + k as u64));
        }
    });
}
