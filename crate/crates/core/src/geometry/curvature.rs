#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::{Error, Result};

/// Curvature of a polar curve `r(φ)` from `r`, `dr/dφ`, `d²r/dφ²`:
///
/// `κ = (r² + 2r'² − r·r'') / (r² + r'²)^{3/2}`.
pub fn curvature_at(r0: f64, dr: f64, d2r: f64) -> Result<f64> {
    let speed2 = r0 * r0 + dr * dr;
    if speed2 == 0.0 {
        return Err(Error::DegenerateCurvature);
    }
    Ok((r0 * r0 + 2.0 * dr * dr - r0 * d2r) / (speed2 * speed2.sqrt()))
}
