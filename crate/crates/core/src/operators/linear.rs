#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::TAU;
use core::ops::{Add, Mul, Sub};

use crate::geometry::ComplexPoint;
use crate::srg::AveragedClass;
use crate::tolerances::OPERATOR_CHECK;
use crate::{Error, Result};

/// A point of `ℝ²`.
pub type Vec2 = [f64; 2];

/// Smallest `|det|` accepted when inverting.
const SINGULAR: f64 = 1e-12;

/// A real 2×2 matrix acting on `ℝ²`, stored row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearPlaneOperator {
    m: [[f64; 2]; 2],
}

impl LinearPlaneOperator {
    pub fn new(m: [[f64; 2]; 2]) -> Result<Self> {
        if m.iter().flatten().all(|v| v.is_finite()) {
            Ok(Self { m })
        } else {
            Err(Error::InvalidArgument("matrix entries must be finite"))
        }
    }

    pub const fn identity() -> Self {
        Self { m: [[1.0, 0.0], [0.0, 1.0]] }
    }

    pub const fn zero() -> Self {
        Self { m: [[0.0; 2]; 2] }
    }

    pub fn scalar(s: f64) -> Self {
        Self { m: [[s, 0.0], [0.0, s]] }
    }

    pub fn entries(&self) -> [[f64; 2]; 2] {
        self.m
    }

    pub fn apply(&self, x: Vec2) -> Vec2 {
        let m = &self.m;
        [m[0][0] * x[0] + m[0][1] * x[1], m[1][0] * x[0] + m[1][1] * x[1]]
    }

    pub fn apply_point(&self, z: ComplexPoint) -> ComplexPoint {
        let [x, y] = self.apply([z.re, z.im]);
        ComplexPoint::new(x, y)
    }

    pub fn scale(&self, s: f64) -> Self {
        let m = &self.m;
        Self { m: [[s * m[0][0], s * m[0][1]], [s * m[1][0], s * m[1][1]]] }
    }

    pub fn transpose(&self) -> Self {
        let m = &self.m;
        Self { m: [[m[0][0], m[1][0]], [m[0][1], m[1][1]]] }
    }

    pub fn det(&self) -> f64 {
        let m = &self.m;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if !(det.abs() > SINGULAR) {
            return Err(Error::Singular { det });
        }
        let m = &self.m;
        Ok(Self { m: [[m[1][1] / det, -m[0][1] / det], [-m[1][0] / det, m[0][0] / det]] })
    }

    /// `(M + Mᵀ)/2`.
    pub fn symmetric_part(&self) -> Self {
        (*self + self.transpose()).scale(0.5)
    }

    /// Spectral norm `‖M‖₂`.
    pub fn norm(&self) -> f64 {
        let (_, hi) = symmetric_eigenvalues(&(self.transpose() * *self));
        hi.max(0.0).sqrt()
    }

    /// `⟨Mx, x⟩ ≥ 0`: the symmetric part has eigenvalues `≥ −10⁻¹²`.
    pub fn is_monotone(&self) -> bool {
        symmetric_eigenvalues(&self.symmetric_part()).0 >= -OPERATOR_CHECK
    }

    /// `⟨Mx, x⟩ ≥ β‖Mx‖²`: `sym(M) − βMᵀM` has eigenvalues `≥ −10⁻¹²`.
    ///
    /// For a scaled rotation `ρe^{iψ}` this reads `ρ cos ψ ≥ βρ² − 10⁻¹²`.
    pub fn is_cocoercive(&self, beta: f64) -> bool {
        let gram = (self.transpose() * *self).scale(beta);
        symmetric_eigenvalues(&(self.symmetric_part() - gram)).0 >= -OPERATOR_CHECK
    }

    /// `‖Mx‖ ≤ ‖x‖` up to `10⁻¹²`.
    pub fn is_nonexpansive(&self) -> bool {
        self.norm() <= 1.0 + OPERATOR_CHECK
    }

    /// The complex number this matrix multiplies by, if it has the form `[[a, −b], [b, a]]`.
    pub fn as_complex(&self, tol: f64) -> Option<ComplexPoint> {
        let m = &self.m;
        let scale = 1.0f64.max(m.iter().flatten().fold(0.0, |a: f64, v| a.max(v.abs())));
        let ok = (m[0][0] - m[1][1]).abs() <= tol * scale && (m[0][1] + m[1][0]).abs() <= tol * scale;
        ok.then(|| ComplexPoint::new(0.5 * (m[0][0] + m[1][1]), 0.5 * (m[1][0] - m[0][1])))
    }

    /// Largest entrywise difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let (a, b) = (self.m.iter().flatten(), other.m.iter().flatten());
        a.zip(b).fold(0.0, |acc, (x, y)| acc.max((x - y).abs()))
    }
}

/// Eigenvalues `(λ_min, λ_max)` of the symmetric part of `m`.
fn symmetric_eigenvalues(m: &LinearPlaneOperator) -> (f64, f64) {
    let [[a, b], [c, d]] = m.m;
    let off = 0.5 * (b + c);
    let mean = 0.5 * (a + d);
    let radius = (0.5 * (a - d)).hypot(off);
    (mean - radius, mean + radius)
}

impl Mul for LinearPlaneOperator {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (&self.m, &rhs.m);
        let mut m = [[0.0; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Self { m }
    }
}

impl Add for LinearPlaneOperator {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let (a, b) = (&self.m, &rhs.m);
        Self { m: [[a[0][0] + b[0][0], a[0][1] + b[0][1]], [a[1][0] + b[1][0], a[1][1] + b[1][1]]] }
    }
}

impl Sub for LinearPlaneOperator {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + rhs.scale(-1.0)
    }
}

/// Multiplication by `z = re^{iφ}`: `r[[cos φ, −sin φ], [sin φ, cos φ]]`.
pub fn scaled_rotation(z: ComplexPoint) -> LinearPlaneOperator {
    LinearPlaneOperator { m: [[z.re, -z.im], [z.im, z.re]] }
}

/// `(1−θ)I + θN` with `N` the scaled rotation of `n`, `|n| ≤ 1`.
pub fn averaged_from_contraction(theta: f64, n: ComplexPoint) -> Result<LinearPlaneOperator> {
    let theta = AveragedClass::new(theta)?.theta();
    let modulus = n.norm();
    if !(modulus <= 1.0 + OPERATOR_CHECK) {
        return Err(Error::NotNonexpansive(modulus));
    }
    Ok(LinearPlaneOperator::scalar(1.0 - theta) + scaled_rotation(n).scale(theta))
}

/// `J_{γM} = (I + γM)⁻¹`.
pub fn resolvent_linear(m: &LinearPlaneOperator, gamma: f64) -> Result<LinearPlaneOperator> {
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(Error::InvalidArgument("resolvent step must be positive and finite"));
    }
    (LinearPlaneOperator::identity() + m.scale(gamma)).inverse()
}

/// The monotone scaled rotation `A` with `J_{γA} = z`, i.e. `A = (1/z − 1)/γ`,
/// for `z ∈ Disk(½)∖{0}`.
pub fn monotone_with_resolvent(z: ComplexPoint, gamma: f64) -> Result<LinearPlaneOperator> {
    if z.norm_sqr() == 0.0 {
        return Err(Error::InvalidArgument("resolvent point must be nonzero"));
    }
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(Error::InvalidArgument("resolvent step must be positive and finite"));
    }
    let a = scaled_rotation((z.inv() - 1.0) / gamma);
    if !a.is_monotone() {
        return Err(Error::NotMonotone("resolvent point outside Disk(1/2)"));
    }
    Ok(a)
}

/// One SRG element `magnitude·e^{±i·angle}` of an operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SrgSample {
    pub magnitude: f64,
    /// In `[0, π]`.
    pub angle: f64,
}

impl SrgSample {
    pub fn point(&self) -> ComplexPoint {
        ComplexPoint::from_polar(self.magnitude, self.angle)
    }

    pub fn conjugate_point(&self) -> ComplexPoint {
        self.point().conj()
    }
}

/// `(‖Mu‖, ∠(Mu, u))` for `n` unit vectors `u` evenly spaced on the circle.
pub fn srg_points_of_linear(m: &LinearPlaneOperator, n_directions: usize) -> Result<Vec<SrgSample>> {
    if n_directions == 0 {
        return Err(Error::InvalidArgument("need at least one direction"));
    }
    Ok((0..n_directions)
        .map(|k| {
            let (s, c) = (TAU * k as f64 / n_directions as f64).sin_cos();
            let u = [c, s];
            let v = m.apply(u);
            let dot = v[0] * u[0] + v[1] * u[1];
            let cross = u[0] * v[1] - u[1] * v[0];
            SrgSample { magnitude: v[0].hypot(v[1]), angle: cross.abs().atan2(dot) }
        })
        .collect())
}
