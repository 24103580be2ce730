//! Complex-plane and plane-curve primitives.

mod curvature;
mod disk;
mod enclosing;
mod envelope;
mod oval;
mod polyline;
mod winding;

pub use curvature::curvature_at;
pub use disk::DiskRegion;
pub use enclosing::min_circle_through_one;
pub use envelope::{envelope_points, CurveFamily, EnvelopeResult, ScaledCircleFamily, TranslatedCircles};
pub use oval::{f2_eval, f2_gradient, oval_roots, PolarQuadratic, Roots};
pub use polyline::Polyline;
pub use winding::winding_number;

/// A finite point of the complex plane.
///
/// The SRG's point at infinity is not represented.
pub type ComplexPoint = num_complex::Complex64;

/// `ComplexPoint` constructor shorthand.
#[inline]
pub const fn cpt(re: f64, im: f64) -> ComplexPoint {
    ComplexPoint::new(re, im)
}

#[inline]
pub(crate) fn is_finite(z: ComplexPoint) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
