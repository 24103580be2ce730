#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::geometry::{ComplexPoint, DiskRegion, Polyline};
use crate::srg::DysClass;
use crate::{Error, Result};

/// `𝒢(𝒯_{β,γ}) = Disk(2β/(4β−γ))`, centered at `(2β−γ)/(4β−γ)`.
pub fn dys_region(cls: &DysClass) -> DiskRegion {
    let r = cls.averagedness();
    DiskRegion { center: 1.0 - r, radius: r }
}

/// `Π(z₁,z₂,z₃) = 1 − z₂ + z₁(2z₂ − 1 − γz₃z₂)`: the SRG point of the DYS
/// operator assembled from resolvent SRG points `z₁`, `z₂` and cocoercive point `z₃`.
pub fn dys_srg_map(z1: ComplexPoint, z2: ComplexPoint, z3: ComplexPoint, gamma: f64) -> ComplexPoint {
    let one = ComplexPoint::new(1.0, 0.0);
    one - z2 + z1 * (z2 * 2.0 - one - z3 * z2 * gamma)
}

/// The boundary construction with `z₁ = z₂ = a₁ = cos θ e^{iθ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DysConstruction {
    pub theta: f64,
    pub a1: ComplexPoint,
    /// `2a₁² − 2a₁ + 1 = cos 2θ e^{2iθ}`.
    pub a2: ComplexPoint,
    /// `(γ/β)a₁²`.
    pub a3: ComplexPoint,
    pub o1: ComplexPoint,
    pub o2: ComplexPoint,
    /// Point of the circle about `o2` of radius `(γ/2β)cos²θ` farthest from `p`.
    pub b: ComplexPoint,
    /// Center of the DYS disk.
    pub p: ComplexPoint,
    /// Cocoercive SRG point realizing `b = Π(a₁, a₁, z₃)`; lies on `(1/β)Circ(½)`.
    pub z3: ComplexPoint,
}

impl DysConstruction {
    /// `Π(a₁, a₁, z₃)`, which equals `b`.
    pub fn image(&self, gamma: f64) -> ComplexPoint {
        dys_srg_map(self.a1, self.a1, self.z3, gamma)
    }
}

pub fn dys_step2_construct(cls: &DysClass, theta: f64) -> Result<DysConstruction> {
    if !(-FRAC_PI_2..FRAC_PI_2).contains(&theta) {
        return Err(Error::InvalidArgument("construction angle must lie in [-pi/2, pi/2)"));
    }
    let (beta, gamma) = (cls.beta(), cls.gamma());
    let cos = theta.cos();
    let a1 = ComplexPoint::from_polar(cos, theta);
    let a2 = a1 * a1 * 2.0 - a1 * 2.0 + 1.0;
    let a3 = a1 * a1 * (gamma / beta);
    let o1 = a3 * 0.5;
    let o2 = a2 - o1;
    let p = ComplexPoint::new(dys_region(cls).center, 0.0);

    let offset = o2 - p;
    let reach = 0.5 * gamma / beta * cos * cos;
    let b = p + offset * ((offset.norm() + reach) / offset.norm());

    let z3 = if a3.norm_sqr() == 0.0 {
        ComplexPoint::new(0.0, 0.0)
    } else {
        (a2 - b) / a3 / beta
    };
    Ok(DysConstruction { theta, a1, a2, a3, o1, o2, b, p, z3 })
}

/// Constructions at `θ_k = −π/2 + kπ/n`, `k = 0..n`.
pub fn dys_step2_sweep(cls: &DysClass, n: usize) -> Result<Vec<DysConstruction>> {
    if n == 0 {
        return Err(Error::InvalidArgument("sweep needs at least one angle"));
    }
    (0..n)
        .map(|k| dys_step2_construct(cls, -FRAC_PI_2 + PI * k as f64 / n as f64))
        .collect()
}

/// Closed curve traced by `o2` over the sweep.
pub fn o2_trajectory(cls: &DysClass, n: usize) -> Result<Polyline> {
    let points = dys_step2_sweep(cls, n)?.into_iter().map(|c| c.o2).collect();
    Polyline::new(points, true)
}

/// Largest angular gap, in radians, between points as seen from `center`.
/// Returns `2π` for fewer than two distinct directions.
pub fn max_angular_gap(points: &[ComplexPoint], center: ComplexPoint) -> f64 {
    let mut angles: Vec<f64> = points
        .iter()
        .filter(|z| **z != center)
        .map(|z| (z - center).arg())
        .collect();
    if angles.len() < 2 {
        return TAU;
    }
    angles.sort_by(f64::total_cmp);
    let wrap = angles[0] + TAU - angles[angles.len() - 1];
    angles.windows(2).map(|w| w[1] - w[0]).fold(wrap, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{cpt, winding_number};

    fn close(a: ComplexPoint, b: ComplexPoint, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn region_parameters() {
        let d = dys_region(&DysClass::new(1.0, 1.0).unwrap());
        assert!((d.center - 1.0 / 3.0).abs() < 1e-15);
        assert!((d.radius - 2.0 / 3.0).abs() < 1e-15);
        let d = dys_region(&DysClass::new(1.0, 1.3).unwrap());
        assert!((d.radius - 2.0 / 2.7).abs() < 1e-15);
        assert!((d.center - 0.7 / 2.7).abs() < 1e-15);
        let d = dys_region(&DysClass::new(1.0, 2.0 - 1e-9).unwrap());
        assert!((d.radius - 1.0).abs() < 1e-8 && d.center.abs() < 1e-8);
    }

    #[test]
    fn srg_map_fixes_one() {
        assert_eq!(dys_srg_map(cpt(1.0, 0.0), cpt(1.0, 0.0), cpt(0.0, 0.0), 0.7), cpt(1.0, 0.0));
    }

    #[test]
    fn rightmost_point_at_zero_angle() {
        let cls = DysClass::new(1.0, 1.0).unwrap();
        let c = dys_step2_construct(&cls, 0.0).unwrap();
        assert!(close(c.o2, cpt(0.5, 0.0), 1e-15));
        assert!(close(c.p, cpt(1.0 / 3.0, 0.0), 1e-15));
        assert!(close(c.b, cpt(1.0, 0.0), 1e-15));
        assert!(close(c.image(1.0), c.b, 1e-15));
    }

    #[test]
    fn degenerate_angle() {
        let cls = DysClass::new(1.0, 0.5).unwrap();
        let c = dys_step2_construct(&cls, -FRAC_PI_2).unwrap();
        assert!(c.a1.norm() < 1e-16);
        assert!(close(c.a2, cpt(1.0, 0.0), 1e-15));
        assert!(c.a3.norm() < 1e-16);
        assert!(close(c.b, cpt(1.0, 0.0), 1e-15));
    }

    #[test]
    fn rejects_angle_outside_half_open_range() {
        let cls = DysClass::new(1.0, 0.5).unwrap();
        assert!(dys_step2_construct(&cls, FRAC_PI_2).is_err());
        assert!(dys_step2_construct(&cls, -2.0).is_err());
    }

    #[test]
    fn construction_lands_on_circle() {
        let cls = DysClass::new(2.0, 3.9).unwrap();
        let r = cls.averagedness();
        for c in dys_step2_sweep(&cls, 500).unwrap() {
            assert!(((c.b - c.p).norm() - r).abs() < 1e-12);
            assert!(((c.image(cls.gamma()) - c.p).norm() - r).abs() < 1e-9);
            let w = c.z3 * cls.beta();
            assert!(c.a3.norm() == 0.0 || ((w - 0.5).norm() - 0.5).abs() < 1e-9);
        }
    }

    #[test]
    fn trajectory_winds_twice_about_center() {
        // o2 traces a limacon whose inner loop contains p
        for &(beta, gamma) in &[(1.0, 0.5), (1.0, 1.0), (1.0, 1.3), (2.0, 3.9)] {
            let cls = DysClass::new(beta, gamma).unwrap();
            let traj = o2_trajectory(&cls, 2000).unwrap();
            let p = cpt(dys_region(&cls).center, 0.0);
            assert_eq!(winding_number(&traj, p).unwrap().abs(), 2);
        }
    }

    #[test]
    fn sweep_gap_shrinks() {
        let cls = DysClass::new(1.0, 1.3).unwrap();
        let p = cpt(dys_region(&cls).center, 0.0);
        let gap = |n| {
            let b: Vec<_> = dys_step2_sweep(&cls, n).unwrap().iter().map(|c| c.b).collect();
            max_angular_gap(&b, p)
        };
        let (g1, g2) = (gap(100), gap(1000));
        assert!(g2 < g1 && g2 < 0.05, "{g1} {g2}");
    }
}
