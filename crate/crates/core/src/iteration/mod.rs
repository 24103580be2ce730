//! Fixed-point iteration traces and the Krasnosel'skii–Mann residual bound.
//!
//! For a θ-averaged `T` with fixed point `x*`, the iterates `x_{k+1} = Tx_k`
//! satisfy `‖x_k − Tx_k‖² ≤ θ‖x₀ − x*‖² / ((1−θ)(k+1))`.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;

use crate::operators::{dys_assemble, LinearPlaneOperator, Vec2};
use crate::{Error, Result};

/// Default stopping threshold on `‖x − Tx‖`.
pub const FIXED_POINT_TOLERANCE: f64 = 1e-10;

/// Default target for `‖(A+B+C)z‖`.
pub const INCLUSION_TOLERANCE: f64 = 1e-8;

/// Relative slack when comparing residuals against the bound and each other.
const COMPARISON_SLACK: f64 = 1e-12;

fn norm(v: Vec2) -> f64 {
    v[0].hypot(v[1])
}

fn sub(a: Vec2, b: Vec2) -> Vec2 {
    [a[0] - b[0], a[1] - b[1]]
}

#[derive(Debug, Clone, PartialEq)]
pub struct IterationTrace {
    /// `x₀, …, x_{K−1}`.
    pub iterates: Vec<Vec2>,
    /// `‖x_k − Tx_k‖` for `k < K`.
    pub residuals: Vec<f64>,
    /// `x_K`.
    pub last: Vec2,
    pub theta_claimed: Option<f64>,
    pub x_star: Option<Vec2>,
    /// Bound on `‖x_star − x*‖` when `x_star` is an estimate.
    pub x_star_slack: f64,
}

impl IterationTrace {
    pub fn len(&self) -> usize {
        self.residuals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residuals.is_empty()
    }

    pub fn with_theta(mut self, theta: f64) -> Self {
        self.theta_claimed = Some(theta);
        self
    }

    pub fn with_fixed_point(mut self, x_star: Vec2, slack: f64) -> Self {
        self.x_star = Some(x_star);
        self.x_star_slack = slack;
        self
    }

    /// Whether residuals never increase, up to a relative `10⁻¹²`.
    pub fn residuals_nonincreasing(&self) -> bool {
        self.residuals
            .windows(2)
            .all(|w| w[1] <= w[0] * (1.0 + COMPARISON_SLACK) + f64::MIN_POSITIVE)
    }
}

/// Runs `x_{k+1} = T(x_k)` for `k < K`, recording residuals `‖x_k − Tx_k‖`.
pub fn iterate<T: FnMut(Vec2) -> Vec2>(mut t: T, x0: Vec2, k: usize) -> Result<IterationTrace> {
    if k == 0 {
        return Err(Error::InvalidArgument("iteration count must be at least 1"));
    }
    if !(x0[0].is_finite() && x0[1].is_finite()) {
        return Err(Error::NonFinite { index: 0 });
    }
    let mut iterates = Vec::with_capacity(k);
    let mut residuals = Vec::with_capacity(k);
    let mut x = x0;
    for index in 0..k {
        let next = t(x);
        if !(next[0].is_finite() && next[1].is_finite()) {
            return Err(Error::NonFinite { index: index + 1 });
        }
        iterates.push(x);
        residuals.push(norm(sub(x, next)));
        x = next;
    }
    Ok(IterationTrace { iterates, residuals, last: x, theta_claimed: None, x_star: None, x_star_slack: 0.0 })
}

/// Fixed-point estimate after `iterations` steps from `x0`, with a bound on its error.
///
/// The error bound is `ρ_N q/(1−q)` for the observed residual ratio `q < 1`
/// (the tail of a geometric series of steps), or `N ρ_N` otherwise.
pub fn estimate_fixed_point<T: FnMut(Vec2) -> Vec2>(mut t: T, x0: Vec2, iterations: usize) -> Result<(Vec2, f64)> {
    let mut x = x0;
    let mut previous = f64::INFINITY;
    let mut residual = 0.0;
    for index in 0..iterations.max(1) {
        let next = t(x);
        if !(next[0].is_finite() && next[1].is_finite()) {
            return Err(Error::NonFinite { index: index + 1 });
        }
        previous = residual;
        residual = norm(sub(x, next));
        x = next;
        if residual == 0.0 {
            return Ok((x, 0.0));
        }
    }
    let q = residual / previous;
    let slack = if q.is_finite() && q < 1.0 - 1e-9 {
        residual * q / (1.0 - q)
    } else {
        residual * iterations as f64
    };
    Ok((x, slack))
}

/// Comparison of a trace against `θ(‖x₀ − x*‖ + e)² / ((1−θ)(k+1))`.
#[derive(Debug, Clone, PartialEq)]
pub struct RateReport {
    pub theta: f64,
    /// `‖x₀ − x*‖` with the estimated `x*`.
    pub initial_distance: f64,
    /// `e`, the error allowance on `x*`.
    pub slack: f64,
    /// `max_k ‖x_k − Tx_k‖²(k+1)(1−θ)/θ`.
    pub max_scaled_residual: f64,
    /// `max_scaled_residual / (‖x₀ − x*‖ + e)²`; the bound holds iff this is at most 1.
    pub max_ratio: f64,
    pub first_violation: Option<usize>,
    pub violations: usize,
    pub nonincreasing: bool,
    pub holds: bool,
}

impl RateReport {
    /// The bound at step `k`.
    pub fn bound(&self, k: usize) -> f64 {
        let radius = self.initial_distance + self.slack;
        self.theta * radius * radius / ((1.0 - self.theta) * (k + 1) as f64)
    }
}

/// Checks every residual of `trace` against the averagedness bound.
/// Requires `theta_claimed ∈ (0,1)` and `x_star`.
pub fn residual_rate_check(trace: &IterationTrace) -> Result<RateReport> {
    let theta = trace.theta_claimed.ok_or(Error::InvalidArgument("trace has no claimed theta"))?;
    if !(theta > 0.0 && theta < 1.0) {
        return Err(Error::InvalidTheta(theta));
    }
    let x_star = trace.x_star.ok_or(Error::InvalidArgument("trace has no fixed point"))?;
    let x0 = *trace.iterates.first().ok_or(Error::InvalidArgument("empty trace"))?;
    let initial_distance = norm(sub(x0, x_star));
    let radius = initial_distance + trace.x_star_slack;

    let mut report = RateReport {
        theta,
        initial_distance,
        slack: trace.x_star_slack,
        max_scaled_residual: 0.0,
        max_ratio: 0.0,
        first_violation: None,
        violations: 0,
        nonincreasing: trace.residuals_nonincreasing(),
        holds: true,
    };
    for (k, &r) in trace.residuals.iter().enumerate() {
        let scaled = r * r * (k + 1) as f64 * (1.0 - theta) / theta;
        report.max_scaled_residual = report.max_scaled_residual.max(scaled);
        let allowed = radius * radius;
        if allowed > 0.0 {
            report.max_ratio = report.max_ratio.max(scaled / allowed);
        } else if scaled > 0.0 {
            report.max_ratio = f64::INFINITY;
        }
        if scaled > allowed * (1.0 + COMPARISON_SLACK) {
            report.violations += 1;
            report.first_violation.get_or_insert(k);
        }
    }
    report.holds = report.violations == 0;
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InclusionConfig {
    pub max_iterations: usize,
    pub fixed_point_tolerance: f64,
    pub inclusion_tolerance: f64,
}

impl Default for InclusionConfig {
    fn default() -> Self {
        Self {
            max_iterations: 10_000,
            fixed_point_tolerance: FIXED_POINT_TOLERANCE,
            inclusion_tolerance: INCLUSION_TOLERANCE,
        }
    }
}

/// Result of solving `0 ∈ (A+B+C)z` with Davis–Yin iterations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InclusionReport {
    /// `J_{γB}x_K`.
    pub z: Vec2,
    pub x: Vec2,
    /// `‖(A+B+C)z‖`.
    pub residual: f64,
    /// `‖x_K − Tx_K‖`.
    pub fixed_point_residual: f64,
    pub iterations: usize,
    /// `c = 1/γ + ‖A‖` with `‖(A+B+C)z‖ ≤ c‖x − Tx‖`.
    pub condition_factor: f64,
    /// Whether `‖x − Tx‖` reached `min(fixed-point tolerance, inclusion tolerance / c)`.
    pub converged: bool,
    /// Whether `‖(A+B+C)z‖` is within the inclusion tolerance.
    pub certified: bool,
}

/// Iterates the Davis–Yin operator until `‖x − Tx‖ ≤ min(tol_fp, tol/c)`, where
/// `(A+B+C)J_{γB}x = (x−Tx)/γ + A(x−Tx)` gives `‖(A+B+C)z‖ ≤ c‖x−Tx‖`.
pub fn dys_solve_inclusion(
    a: &LinearPlaneOperator,
    b: &LinearPlaneOperator,
    c: &LinearPlaneOperator,
    beta: f64,
    gamma: f64,
    x0: Vec2,
    config: InclusionConfig,
) -> Result<InclusionReport> {
    let t = dys_assemble(a, b, c, beta, gamma)?;
    let condition_factor = 1.0 / gamma + a.norm();
    let target = config.fixed_point_tolerance.min(config.inclusion_tolerance / condition_factor);

    let mut x = x0;
    let mut iterations = 0;
    let mut tx = t.apply(x);
    let mut fixed_point_residual = norm(sub(x, tx));
    while fixed_point_residual > target && iterations < config.max_iterations {
        x = tx;
        tx = t.apply(x);
        if !(tx[0].is_finite() && tx[1].is_finite()) {
            return Err(Error::NonFinite { index: iterations + 1 });
        }
        fixed_point_residual = norm(sub(x, tx));
        iterations += 1;
    }
    let z = t.resolvent_b().apply(x);
    let residual = norm(t.inclusion_operator().apply(z));
    Ok(InclusionReport {
        z,
        x,
        residual,
        fixed_point_residual,
        iterations,
        condition_factor,
        converged: fixed_point_residual <= target,
        certified: residual <= config.inclusion_tolerance,
    })
}
