#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::TAU;

use super::ComplexPoint;
use crate::tolerances::{NEWTON_MAX_ITERATIONS, NEWTON_STEP};

/// A one-parameter family of plane curves `C_t = {z : F(t, z) = 0}`.
pub trait CurveFamily {
    fn value(&self, t: f64, z: ComplexPoint) -> f64;
    /// `∂F/∂t`.
    fn value_dt(&self, t: f64, z: ComplexPoint) -> f64;
    /// `(∂F/∂x, ∂F/∂y)`.
    fn gradient(&self, t: f64, z: ComplexPoint) -> ComplexPoint;
    /// `(∂²F/∂t∂x, ∂²F/∂t∂y)`.
    fn gradient_dt(&self, t: f64, z: ComplexPoint) -> ComplexPoint;
    /// Starting points for the root-finder, normally spread over `C_t`.
    fn seeds(&self, t: f64) -> Vec<ComplexPoint>;
}

/// Unit-speed translates of a circle along the real axis: center `(t, 0)`.
#[derive(Debug, Clone, Copy)]
pub struct TranslatedCircles {
    pub radius: f64,
}

/// Circles `conj(z₂(t))·Circ(θ₁)` with `z₂(t) = 1−θ₂+θ₂e^{it}` sweeping
/// `Circ(θ₂)`, written with the `|z₂(t)|⁴` factor cleared:
///
/// `F = (x − (1−θ₂+θ₂cos t)(1−θ₁))² + (y + θ₂ sin t (1−θ₁))²
///      − (2θ₂²−2θ₂+1+2θ₂(1−θ₂)cos t)θ₁²`.
#[derive(Debug, Clone, Copy)]
pub struct ScaledCircleFamily {
    pub theta1: f64,
    pub theta2: f64,
}

/// Circle data at parameter `t`: center, its derivative, squared radius and its derivative.
struct CircleAt {
    center: ComplexPoint,
    center_dt: ComplexPoint,
    radius2: f64,
    radius2_dt: f64,
}

trait CircleFamily {
    fn at(&self, t: f64) -> CircleAt;
}

impl CircleFamily for TranslatedCircles {
    fn at(&self, t: f64) -> CircleAt {
        CircleAt {
            center: ComplexPoint::new(t, 0.0),
            center_dt: ComplexPoint::new(1.0, 0.0),
            radius2: self.radius * self.radius,
            radius2_dt: 0.0,
        }
    }
}

impl CircleFamily for ScaledCircleFamily {
    fn at(&self, t: f64) -> CircleAt {
        let (a, b) = (self.theta1, self.theta2);
        let (s, c) = t.sin_cos();
        CircleAt {
            center: ComplexPoint::new((1.0 - b + b * c) * (1.0 - a), -b * s * (1.0 - a)),
            center_dt: ComplexPoint::new(-b * s * (1.0 - a), -b * c * (1.0 - a)),
            radius2: (2.0 * b * b - 2.0 * b + 1.0 + 2.0 * b * (1.0 - b) * c) * a * a,
            radius2_dt: -2.0 * b * (1.0 - b) * s * a * a,
        }
    }
}

macro_rules! circle_curve_family {
    ($ty:ty) => {
        impl CurveFamily for $ty {
            fn value(&self, t: f64, z: ComplexPoint) -> f64 {
                let c = self.at(t);
                (z - c.center).norm_sqr() - c.radius2
            }
            fn value_dt(&self, t: f64, z: ComplexPoint) -> f64 {
                let c = self.at(t);
                let w = z - c.center;
                -2.0 * (w.re * c.center_dt.re + w.im * c.center_dt.im) - c.radius2_dt
            }
            fn gradient(&self, t: f64, z: ComplexPoint) -> ComplexPoint {
                (z - self.at(t).center) * 2.0
            }
            fn gradient_dt(&self, t: f64, _z: ComplexPoint) -> ComplexPoint {
                self.at(t).center_dt * -2.0
            }
            fn seeds(&self, t: f64) -> Vec<ComplexPoint> {
                let c = self.at(t);
                let r = c.radius2.max(0.0).sqrt();
                (0..12)
                    .map(|k| c.center + ComplexPoint::from_polar(r, TAU * k as f64 / 12.0))
                    .collect()
            }
        }
    };
}

circle_curve_family!(TranslatedCircles);
circle_curve_family!(ScaledCircleFamily);

/// Envelope samples and the parameters where no seed converged.
#[derive(Debug, Clone, Default)]
pub struct EnvelopeResult {
    /// Envelope points, each paired with the `t` that produced it.
    pub points: Vec<(f64, ComplexPoint)>,
    /// Parameters with no converged solution.
    pub failed: Vec<f64>,
}

/// Solves `F(t,z) = 0, ∂F/∂t(t,z) = 0` for each `t` by Newton iteration in `z`
/// from every seed, keeping distinct converged solutions.
pub fn envelope_points<F: CurveFamily + ?Sized>(family: &F, t_grid: &[f64]) -> EnvelopeResult {
    let mut out = EnvelopeResult::default();
    for &t in t_grid {
        let mut found: Vec<ComplexPoint> = Vec::new();
        for seed in family.seeds(t) {
            if let Some(z) = newton(family, t, seed) {
                if !found.iter().any(|p| (*p - z).norm() < 1e-8) {
                    found.push(z);
                }
            }
        }
        if found.is_empty() {
            out.failed.push(t);
        }
        out.points.extend(found.into_iter().map(|z| (t, z)));
    }
    out
}

fn newton<F: CurveFamily + ?Sized>(family: &F, t: f64, mut z: ComplexPoint) -> Option<ComplexPoint> {
    for _ in 0..NEWTON_MAX_ITERATIONS {
        let (g0, g1) = (family.value(t, z), family.value_dt(t, z));
        let (j0, j1) = (family.gradient(t, z), family.gradient_dt(t, z));
        let det = j0.re * j1.im - j0.im * j1.re;
        let scale = j0.norm() * j1.norm();
        if !(det.abs() > 1e-14 * scale) || scale == 0.0 {
            return None;
        }
        let dx = -(g0 * j1.im - g1 * j0.im) / det;
        let dy = -(j0.re * g1 - j1.re * g0) / det;
        z += ComplexPoint::new(dx, dy);
        if !(z.re.is_finite() && z.im.is_finite()) {
            return None;
        }
        if dx.hypot(dy) < NEWTON_STEP {
            return Some(z);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::f2_eval;

    fn grid(n: usize, lo: f64, hi: f64) -> Vec<f64> {
        (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
    }

    #[test]
    fn translated_unit_circles_give_two_lines() {
        let res = envelope_points(&TranslatedCircles { radius: 1.0 }, &grid(21, -3.0, 3.0));
        assert!(res.failed.is_empty());
        assert_eq!(res.points.len(), 42);
        for (t, z) in res.points {
            assert!((z.im.abs() - 1.0).abs() < 1e-12);
            assert!((z.re - t).abs() < 1e-12);
        }
    }

    #[test]
    fn scaled_family_envelope_lies_on_quartic() {
        for (a, b) in [(0.5, 0.5), (0.25, 0.75), (0.3, 0.2)] {
            let res = envelope_points(&ScaledCircleFamily { theta1: a, theta2: b }, &grid(400, -3.1, 3.1));
            assert!(res.points.len() > 400, "{a} {b}: {}", res.points.len());
            for (_, z) in &res.points {
                assert!(f2_eval(a, b, *z).abs() < 1e-8, "{a} {b} {z}");
            }
        }
    }

    #[test]
    fn degenerate_member_is_reported_not_fatal() {
        // theta2 = 1/2 at t = pi collapses the member circle to the origin.
        let res = envelope_points(
            &ScaledCircleFamily { theta1: 0.3, theta2: 0.5 },
            &[core::f64::consts::PI, 0.0],
        );
        assert_eq!(res.failed, alloc::vec![core::f64::consts::PI]);
        assert!(!res.points.is_empty());
    }
}
