#[cfg(not(feature = "std"))]
use num_traits::Float;

use core::f64::consts::TAU;

use super::polyline::segment_distance;
use super::{is_finite, ComplexPoint, Polyline};
use crate::tolerances::{ON_CURVE, WINDING_RESIDUAL};
use crate::{Error, Result};

/// Signed winding number of a closed polyline around `z`, by summing the
/// signed angle each segment subtends at `z`.
pub fn winding_number(curve: &Polyline, z: ComplexPoint) -> Result<i64> {
    if !curve.is_closed() {
        return Err(Error::NotClosed);
    }
    if !is_finite(z) {
        return Err(Error::InvalidArgument("query point must be finite"));
    }
    let mut total = 0.0;
    for (a, b) in curve.segments() {
        let distance = segment_distance(z, a, b);
        if distance < ON_CURVE {
            return Err(Error::PointOnCurve { distance });
        }
        let (u, v) = (a - z, b - z);
        total += (u.re * v.im - u.im * v.re).atan2(u.re * v.re + u.im * v.im);
    }
    let turns = total / TAU;
    let rounded = turns.round();
    let residual = (turns - rounded).abs();
    if residual >= WINDING_RESIDUAL {
        return Err(Error::WindingResidual { residual });
    }
    Ok(rounded as i64)
}
