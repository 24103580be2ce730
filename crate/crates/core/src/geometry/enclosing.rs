use super::ComplexPoint;
use crate::tolerances::AT_ONE;
use crate::{Error, Result};

/// Radius of the smallest disk centered on the real axis whose boundary passes
/// through 1 and which contains every point.
///
/// Expanding `|p − (1−ρ)|² ≤ ρ²` gives `ρ ≥ |p−1|² / (2(1 − Re p))`, so the
/// answer is the maximum of that ratio. Points within [`AT_ONE`] of 1 impose
/// no constraint; any other point with `Re p ≥ 1` has no such circle.
pub fn min_circle_through_one<'a, I>(points: I) -> Result<f64>
where
    I: IntoIterator<Item = &'a ComplexPoint>,
{
    let one = ComplexPoint::new(1.0, 0.0);
    let mut best: f64 = 0.0;
    for &p in points {
        let gap = p - one;
        if gap.norm_sqr() <= AT_ONE * AT_ONE {
            continue;
        }
        let slack = 1.0 - p.re;
        if !(slack > 0.0) {
            return Err(Error::NoEnclosingCircle { re: p.re, im: p.im });
        }
        best = best.max(gap.norm_sqr() / (2.0 * slack));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::cpt;

    #[test]
    fn single_points() {
        assert_eq!(min_circle_through_one(&[cpt(-1.0, 0.0)]).unwrap(), 1.0);
        assert_eq!(min_circle_through_one(&[cpt(0.0, 0.0)]).unwrap(), 0.5);
        assert_eq!(min_circle_through_one(&[]).unwrap(), 0.0);
        assert_eq!(min_circle_through_one(&[cpt(1.0, 0.0)]).unwrap(), 0.0);
    }

    #[test]
    fn point_right_of_one_has_no_circle() {
        assert!(min_circle_through_one(&[cpt(1.0, 0.5)]).is_err());
        assert!(min_circle_through_one(&[cpt(1.5, 0.0)]).is_err());
    }

    #[test]
    fn returned_disk_contains_all_points() {
        let pts = [cpt(0.2, 0.3), cpt(-0.1, -0.4), cpt(0.9, 0.1)];
        let rho = min_circle_through_one(&pts).unwrap();
        for p in pts {
            assert!((p - cpt(1.0 - rho, 0.0)).norm() <= rho + 1e-12);
        }
    }
}
