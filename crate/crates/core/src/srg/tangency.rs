#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::geometry::{curvature_at, f2_eval, oval_roots, ComplexPoint, DiskRegion, PolarQuadratic};
use crate::srg::tight_composition_coeff;
use crate::tolerances::{ANALYTIC, FINITE_DIFFERENCE};
use crate::Result;

/// Angles with `|φ|` at or below this are excluded from the positivity check on `g`.
const POSITIVITY_EXCLUSION: f64 = 1e-3;

/// Finite-difference steps for the curvature cross-check.
const FD_STEPS: [f64; 2] = [1e-3, 1e-4];

/// `g(φ) = f₂((1−θ) + θe^{iφ})` in closed form:
/// `16θ₁²θ₂²(1−θ₁)²(1−θ₂)²s² sin⁴(φ/2) / (1−θ₁θ₂)⁴`, `s = θ₁+θ₂−2θ₁θ₂`.
pub fn tangency_g(theta1: f64, theta2: f64, phi: f64) -> f64 {
    let s = theta1 + theta2 - 2.0 * theta1 * theta2;
    let p = theta1 * theta2 * (1.0 - theta1) * (1.0 - theta2) * s;
    let q = 1.0 - theta1 * theta2;
    let sin2 = (0.5 * phi).sin().powi(2);
    16.0 * p * p * sin2 * sin2 / (q * q * q * q)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TangencyCertificate {
    pub theta1: f64,
    pub theta2: f64,
    /// Tight coefficient `θ`.
    pub theta: f64,
    /// `max |f₂(Circ(θ)) − g(φ)|` over the grid.
    pub max_g_residual: f64,
    /// Smallest closed-form `g(φ)` over grid angles with `|φ| > 10⁻³`.
    pub min_g_away_from_zero: f64,
    pub g_at_zero: f64,
    /// `κ(0)` from the closed-form derivatives `r = 1`, `r' = 0`, `r'' = −(1−θ₁)(1−θ₂)/s`.
    pub curvature_closed_form: f64,
    /// `κ(0)` from central differences of the outer root, one per step in `{10⁻³, 10⁻⁴}`.
    pub curvature_finite_difference: [f64; 2],
    pub grid_len: usize,
}

impl TangencyCertificate {
    pub fn g_residual_ok(&self, tol: f64) -> bool {
        self.max_g_residual < tol
    }

    pub fn g_positive(&self) -> bool {
        self.g_at_zero == 0.0 && self.min_g_away_from_zero > 0.0
    }

    /// Largest deviation of any curvature estimate from `1/θ`.
    pub fn curvature_error(&self) -> f64 {
        let target = 1.0 / self.theta;
        self.curvature_finite_difference
            .iter()
            .fold((self.curvature_closed_form - target).abs(), |m, k| m.max((k - target).abs()))
    }

    pub fn passes(&self) -> bool {
        self.passes_with(ANALYTIC, FINITE_DIFFERENCE)
    }

    pub fn passes_with(&self, tol_analytic: f64, tol_fd: f64) -> bool {
        self.g_residual_ok(tol_analytic) && self.g_positive() && self.curvature_error() < tol_fd
    }
}

/// Certifies that `Circ(θ)` touches the region boundary only at 1, with matching curvature there.
pub fn tangency_certificate(theta1: f64, theta2: f64, phi_grid: &[f64]) -> Result<TangencyCertificate> {
    let theta = tight_composition_coeff(theta1, theta2)?;
    let circle = DiskRegion::averaged(theta)?;

    let mut max_g_residual = 0.0f64;
    let mut min_g_away_from_zero = f64::INFINITY;
    for &phi in phi_grid {
        let g = tangency_g(theta1, theta2, phi);
        let on_circle = f2_eval(theta1, theta2, circle.boundary_point(phi));
        max_g_residual = max_g_residual.max((on_circle - g).abs());
        if phi.abs() > POSITIVITY_EXCLUSION {
            min_g_away_from_zero = min_g_away_from_zero.min(g);
        }
    }

    let s = theta1 + theta2 - 2.0 * theta1 * theta2;
    let k = (1.0 - theta1) * (1.0 - theta2);
    let curvature_closed_form = curvature_at(1.0, 0.0, -k / s)?;

    let q = PolarQuadratic::new(theta1, theta2)?;
    let mut curvature_finite_difference = [0.0; 2];
    for (slot, &h) in curvature_finite_difference.iter_mut().zip(FD_STEPS.iter()) {
        *slot = outer_branch_curvature(&q, h)?;
    }

    Ok(TangencyCertificate {
        theta1,
        theta2,
        theta,
        max_g_residual,
        min_g_away_from_zero,
        g_at_zero: tangency_g(theta1, theta2, 0.0),
        curvature_closed_form,
        curvature_finite_difference,
        grid_len: phi_grid.len(),
    })
}

/// Curvature at φ = 0 of the root branch through 1, by five-point central differences.
fn outer_branch_curvature(q: &PolarQuadratic, h: f64) -> Result<f64> {
    let r = |phi: f64| oval_roots(q, phi).max().unwrap_or(f64::NAN);
    let (rm2, rm, r0, rp, rp2) = (r(-2.0 * h), r(-h), r(0.0), r(h), r(2.0 * h));
    let dr = (rm2 - 8.0 * rm + 8.0 * rp - rp2) / (12.0 * h);
    let d2r = (-rm2 + 16.0 * rm - 30.0 * r0 + 16.0 * rp - rp2) / (12.0 * h * h);
    curvature_at(r0, dr, d2r)
}

/// Uniform angles on `[−π, π)` plus log-spaced angles on `±[finest, ½]`, sorted.
pub fn refined_angle_grid(uniform: usize, per_side: usize, finest: f64) -> Vec<f64> {
    let mut grid = Vec::with_capacity(uniform + 2 * per_side + 1);
    for i in 0..uniform {
        grid.push(-PI + 2.0 * PI * i as f64 / uniform as f64);
    }
    if per_side > 0 {
        let (lo, hi) = (finest.ln(), 0.5f64.ln());
        for i in 0..per_side {
            let t = if per_side == 1 { 0.0 } else { i as f64 / (per_side - 1) as f64 };
            let a = (lo + t * (hi - lo)).exp();
            grid.push(a);
            grid.push(-a);
        }
    }
    grid.push(0.0);
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    grid
}

/// Products `z₁z₂` with `z₁ ∈ Circ(θ₁)`, `z₂ ∈ Circ(θ₂)` at every pair of grid angles.
pub fn circ_product_sweep(theta1: f64, theta2: f64, angles: &[f64]) -> Result<Vec<ComplexPoint>> {
    let d1 = DiskRegion::averaged(theta1)?;
    let d2 = DiskRegion::averaged(theta2)?;
    let first: Vec<_> = angles.iter().map(|&a| d1.boundary_point(a)).collect();
    let second: Vec<_> = angles.iter().map(|&a| d2.boundary_point(a)).collect();
    let mut out = Vec::with_capacity(first.len() * second.len());
    for &z1 in &first {
        out.extend(second.iter().map(|&z2| z1 * z2));
    }
    Ok(out)
}

/// A product point outside the shrunken disk `Disk((1−δ)θ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TightnessWitness {
    pub point: ComplexPoint,
    /// Angles of the factors on `Circ(θ₁)` and `Circ(θ₂)`.
    pub angles: (f64, f64),
    pub shrunk_theta: f64,
    /// Signed distance from `Disk(shrunk_theta)`; positive means outside.
    pub signed_distance: f64,
}

/// Searches products of boundary points for the one farthest outside
/// `Disk((1−δ)θ)`. Returns `None` if every product lies inside.
pub fn tightness_witness(theta1: f64, theta2: f64, delta: f64) -> Result<Option<TightnessWitness>> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(crate::Error::InvalidArgument("delta must lie in (0,1)"));
    }
    let theta = tight_composition_coeff(theta1, theta2)?;
    let shrunk_theta = (1.0 - delta) * theta;
    let shrunk = DiskRegion::averaged(shrunk_theta)?;
    let d1 = DiskRegion::averaged(theta1)?;
    let d2 = DiskRegion::averaged(theta2)?;

    let angles = refined_angle_grid(360, 200, 1e-5);
    let mut best: Option<TightnessWitness> = None;
    for &s in &angles {
        let z1 = d1.boundary_point(s);
        for &t in &angles {
            let point = z1 * d2.boundary_point(t);
            let signed_distance = shrunk.signed_distance(point);
            if signed_distance > 0.0 && best.is_none_or(|b| signed_distance > b.signed_distance) {
                best = Some(TightnessWitness { point, angles: (s, t), shrunk_theta, signed_distance });
            }
        }
    }
    Ok(best)
}
