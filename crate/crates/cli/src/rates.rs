//! Random averaged instances for the rate-bound and inclusion checks.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use srg_core::iteration::{
    dys_solve_inclusion, estimate_fixed_point, iterate, residual_rate_check, InclusionConfig, InclusionReport, RateReport,
};
use srg_core::operators::{averaged_from_contraction, dys_assemble, scaled_rotation, LinearPlaneOperator, Vec2};
use srg_core::srg::tight_composition_coeff;
use srg_core::{ComplexPoint, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    Averaged,
    /// Two averaged factors, checked with the tight composition coefficient.
    Composition,
    Dys,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RateOutcome {
    pub kind: InstanceKind,
    pub theta: f64,
    pub x0: Vec2,
    pub report: RateReport,
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Half the time a pure rotation, the slowest nonexpansive map.
fn contraction(rng: &mut ChaCha8Rng) -> ComplexPoint {
    let r = if rng.random_bool(0.5) { 1.0 } else { rng.random_range(0.5..1.0) };
    ComplexPoint::from_polar(r, rng.random_range(-PI..PI))
}

/// Positive semidefinite symmetric part with eigenvalues in `[lo, hi)`, plus a skew part.
pub fn random_monotone(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> LinearPlaneOperator {
    let (l1, l2) = (rng.random_range(lo..hi), rng.random_range(lo..hi));
    let (s, c) = rng.random_range(0.0..PI).sin_cos();
    let off = c * s * (l1 - l2);
    let w = rng.random_range(-1.0..1.0);
    LinearPlaneOperator::new([[c * c * l1 + s * s * l2, off - w], [off + w, s * s * l1 + c * c * l2]])
        .expect("finite entries")
}

/// A scaled rotation `ρe^{iψ}` with `ρ < cos ψ / β`.
pub fn random_cocoercive(rng: &mut ChaCha8Rng, beta: f64) -> LinearPlaneOperator {
    let psi: f64 = rng.random_range(-1.3..1.3);
    scaled_rotation(ComplexPoint::from_polar(rng.random_range(0.2..1.0) * psi.cos() / beta, psi))
}

/// Checks the residual bound on one trajectory of `k` steps, with `x*` from `10k` steps.
pub fn check_rate<T: Fn(Vec2) -> Vec2>(t: T, x0: Vec2, theta: f64, k: usize) -> Result<RateReport> {
    let (x_star, slack) = estimate_fixed_point(&t, x0, 10 * k)?;
    let trace = iterate(&t, x0, k)?.with_theta(theta).with_fixed_point(x_star, slack);
    residual_rate_check(&trace)
}

/// Instance `index` of a seeded family; kinds cycle averaged, composition, Davis–Yin.
pub fn rate_instance(seed: u64, index: usize, k: usize) -> Result<RateOutcome> {
    let mut rng = rng_for(seed, index as u64);
    let x0 = [rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0)];
    let (kind, theta, report) = match index % 3 {
        0 => {
            let theta = rng.random_range(0.05..0.95);
            let m = averaged_from_contraction(theta, contraction(&mut rng))?;
            (InstanceKind::Averaged, theta, check_rate(|x| m.apply(x), x0, theta, k)?)
        }
        1 => {
            let (t1, t2) = (rng.random_range(0.05..0.95), rng.random_range(0.05..0.95));
            let m1 = averaged_from_contraction(t1, contraction(&mut rng))?;
            let m2 = averaged_from_contraction(t2, contraction(&mut rng))?;
            let theta = tight_composition_coeff(t1, t2)?;
            (InstanceKind::Composition, theta, check_rate(|x| m1.apply(m2.apply(x)), x0, theta, k)?)
        }
        _ => {
            let beta = rng.random_range(0.2..3.0);
            let gamma = 2.0 * beta * rng.random_range(0.05..0.95);
            let (a, b) = (random_monotone(&mut rng, 0.0, 2.0), random_monotone(&mut rng, 0.0, 2.0));
            let t = dys_assemble(&a, &b, &random_cocoercive(&mut rng, beta), beta, gamma)?;
            let theta = t.class().averagedness();
            (InstanceKind::Dys, theta, check_rate(|x| t.apply(x), x0, theta, k)?)
        }
    };
    Ok(RateOutcome { kind, theta, x0, report })
}

pub fn rate_instances(seed: u64, count: usize, k: usize) -> Result<Vec<RateOutcome>> {
    (0..count).into_par_iter().map(|i| rate_instance(seed, i, k)).collect()
}

/// A well-conditioned Davis–Yin inclusion: `A`, `B` with symmetric parts `⪰ ½I`, `γ = β`.
pub fn inclusion_instance(seed: u64, index: usize) -> Result<InclusionReport> {
    // streams above the rate instances' range
    let mut rng = rng_for(seed, (1 << 32) + index as u64);
    let beta = rng.random_range(0.5..2.0);
    let (a, b) = (random_monotone(&mut rng, 0.5, 2.0), random_monotone(&mut rng, 0.5, 2.0));
    let c = random_cocoercive(&mut rng, beta);
    let x0 = [rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0)];
    dys_solve_inclusion(&a, &b, &c, beta, beta, x0, InclusionConfig::default())
}

pub fn inclusion_instances(seed: u64, count: usize) -> Result<Vec<InclusionReport>> {
    (0..count).into_par_iter().map(|i| inclusion_instance(seed, i)).collect()
}
