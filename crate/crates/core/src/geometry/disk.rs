#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::TAU;

use super::{ComplexPoint, Polyline};
use crate::{Error, Result};

/// A closed disk `{z : |z − center| ≤ radius}` with real center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskRegion {
    pub center: f64,
    pub radius: f64,
}

impl DiskRegion {
    pub fn new(center: f64, radius: f64) -> Result<Self> {
        if !center.is_finite() || !(radius >= 0.0) || !radius.is_finite() {
            return Err(Error::InvalidArgument("disk needs a finite center and radius >= 0"));
        }
        Ok(Self { center, radius })
    }

    /// `Disk(θ)`: center `1−θ`, radius `θ`, so the point 1 is on the boundary.
    pub fn averaged(theta: f64) -> Result<Self> {
        if !(theta > 0.0 && theta < 1.0) {
            return Err(Error::InvalidTheta(theta));
        }
        Ok(Self { center: 1.0 - theta, radius: theta })
    }

    pub fn center_point(&self) -> ComplexPoint {
        ComplexPoint::new(self.center, 0.0)
    }

    /// `|z − c| − ρ`: negative inside, zero on `Circ`, positive outside.
    pub fn signed_distance(&self, z: ComplexPoint) -> f64 {
        (z - self.center_point()).norm() - self.radius
    }

    pub fn contains(&self, z: ComplexPoint, tol: f64) -> bool {
        self.signed_distance(z) <= tol
    }

    pub fn boundary_point(&self, phi: f64) -> ComplexPoint {
        self.center_point() + ComplexPoint::from_polar(self.radius, phi)
    }

    pub fn rightmost(&self) -> f64 {
        self.center + self.radius
    }

    pub fn leftmost(&self) -> f64 {
        self.center - self.radius
    }

    /// Counterclockwise boundary polygon with `n ≥ 3` vertices starting at the rightmost point.
    pub fn boundary(&self, n: usize) -> Result<Polyline> {
        let pts: Vec<_> = (0..n)
            .map(|k| self.boundary_point(TAU * k as f64 / n as f64))
            .collect();
        Polyline::new(pts, true)
    }

    /// Uniform sample from the disk given two uniforms in `[0,1)`.
    pub fn sample(&self, u: f64, v: f64) -> ComplexPoint {
        self.center_point() + ComplexPoint::from_polar(self.radius * u.sqrt(), TAU * v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::cpt;

    #[test]
    fn averaged_disk_touches_one() {
        for t in [0.1, 0.5, 0.75] {
            let d = DiskRegion::averaged(t).unwrap();
            assert_eq!(d.rightmost(), 1.0);
            assert!((d.leftmost() - (1.0 - 2.0 * t)).abs() < 1e-15);
        }
        assert!(DiskRegion::averaged(1.0).is_err());
        assert!(DiskRegion::averaged(0.0).is_err());
    }

    #[test]
    fn signed_distance_sign() {
        let d = DiskRegion::averaged(0.5).unwrap();
        assert!(d.signed_distance(cpt(0.5, 0.0)) < 0.0);
        assert!(d.signed_distance(cpt(1.0, 0.0)).abs() < 1e-15);
        assert!(d.signed_distance(cpt(1.1, 0.0)) > 0.0);
    }

    #[test]
    fn samples_stay_inside() {
        let d = DiskRegion::new(0.25, 0.75).unwrap();
        for i in 0..50 {
            for j in 0..50 {
                let z = d.sample(i as f64 / 50.0, j as f64 / 50.0);
                assert!(d.contains(z, 1e-12));
            }
        }
    }
}
