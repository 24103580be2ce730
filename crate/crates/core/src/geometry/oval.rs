#[cfg(not(feature = "std"))]
use num_traits::Float;

use super::ComplexPoint;
use crate::{Error, Result};

/// The quadratic in `r` whose zero set is the composition boundary curve,
///
/// `r² − 2c(φ)r + d = 0`, with `c(φ) = cos(φ)(1−θ₁)(1−θ₂) + θ₁θ₂` and
/// `d = (1−2θ₁)(1−2θ₂)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarQuadratic {
    theta1: f64,
    theta2: f64,
}

impl PolarQuadratic {
    pub fn new(theta1: f64, theta2: f64) -> Result<Self> {
        for t in [theta1, theta2] {
            if !(t > 0.0 && t < 1.0) {
                return Err(Error::InvalidTheta(t));
            }
        }
        Ok(Self { theta1, theta2 })
    }

    pub fn theta1(&self) -> f64 {
        self.theta1
    }

    pub fn theta2(&self) -> f64 {
        self.theta2
    }

    /// `(1−θ₁)(1−θ₂)`, the coefficient of `cos φ` in `c(φ)`.
    pub fn k(&self) -> f64 {
        (1.0 - self.theta1) * (1.0 - self.theta2)
    }

    pub fn c(&self, phi: f64) -> f64 {
        phi.cos() * self.k() + self.theta1 * self.theta2
    }

    pub fn d(&self) -> f64 {
        (1.0 - 2.0 * self.theta1) * (1.0 - 2.0 * self.theta2)
    }
}

/// Up to two real roots, ascending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Roots {
    vals: [f64; 2],
    len: usize,
}

impl Roots {
    const NONE: Roots = Roots { vals: [0.0; 2], len: 0 };

    fn one(r: f64) -> Self {
        Roots { vals: [r, r], len: 1 }
    }

    fn two(a: f64, b: f64) -> Self {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Roots { vals: [lo, hi], len: 2 }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.vals[..self.len]
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn max(&self) -> Option<f64> {
        self.as_slice().last().copied()
    }
}

/// Real roots of `r² − 2c(φ)r + d = 0`.
///
/// Roots may be negative; a root `r < 0` at angle `φ` stands for the point
/// `|r|e^{i(φ+π)}`. A discriminant within rounding of zero yields a double
/// root, reported once.
pub fn oval_roots(q: &PolarQuadratic, phi: f64) -> Roots {
    solve_monic(q.c(phi), q.d())
}

fn solve_monic(c: f64, d: f64) -> Roots {
    let disc = c * c - d;
    let scale = (c * c).max(d.abs()).max(f64::MIN_POSITIVE);
    if disc < -4.0 * f64::EPSILON * scale {
        return Roots::NONE;
    }
    if disc <= 4.0 * f64::EPSILON * scale {
        return Roots::one(c);
    }
    let s = disc.sqrt();
    if c == 0.0 {
        return Roots::two(-s, s);
    }
    // q carries the sign of c so the sum never cancels.
    let q = c + c.signum() * s;
    Roots::two(q, d / q)
}

/// The composition quartic
/// `f₂(x,y) = (x²+y²−2x(1−θ₁)(1−θ₂)+(1−2θ₁)(1−2θ₂))² − 4θ₁²θ₂²(x²+y²)`.
pub fn f2_eval(theta1: f64, theta2: f64, z: ComplexPoint) -> f64 {
    let (inner, rho2) = f2_parts(theta1, theta2, z);
    inner * inner - 4.0 * theta1 * theta1 * theta2 * theta2 * rho2
}

/// `(∂f₂/∂x, ∂f₂/∂y)` packed as a complex number.
pub fn f2_gradient(theta1: f64, theta2: f64, z: ComplexPoint) -> ComplexPoint {
    let (inner, _) = f2_parts(theta1, theta2, z);
    let k = (1.0 - theta1) * (1.0 - theta2);
    let p2 = 4.0 * theta1 * theta1 * theta2 * theta2;
    ComplexPoint::new(
        2.0 * inner * (2.0 * z.re - 2.0 * k) - 2.0 * p2 * z.re,
        2.0 * inner * (2.0 * z.im) - 2.0 * p2 * z.im,
    )
}

fn f2_parts(theta1: f64, theta2: f64, z: ComplexPoint) -> (f64, f64) {
    let rho2 = z.re * z.re + z.im * z.im;
    let k = (1.0 - theta1) * (1.0 - theta2);
    let d = (1.0 - 2.0 * theta1) * (1.0 - 2.0 * theta2);
    (rho2 - 2.0 * z.re * k + d, rho2)
}
