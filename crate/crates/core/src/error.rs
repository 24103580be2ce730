use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("theta must lie in the open interval (0,1), got {0}")]
    InvalidTheta(f64),
    #[error("beta must be positive and finite, got {0}")]
    InvalidBeta(f64),
    #[error("gamma must lie in the open interval (0, 2*beta) = (0, {bound}), got {gamma}")]
    InvalidGamma { gamma: f64, bound: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error("curvature is undefined where r and dr/dphi both vanish")]
    DegenerateCurvature,
    #[error("winding number requires a closed polyline")]
    NotClosed,
    #[error("point lies on the curve (distance {distance:e})")]
    PointOnCurve { distance: f64 },
    #[error("winding number did not round cleanly (residual {residual:e})")]
    WindingResidual { residual: f64 },
    #[error("no circle through 1 centered on the real axis encloses ({re}, {im})")]
    NoEnclosingCircle { re: f64, im: f64 },
    #[error("matrix is singular (|det| = {det:e})")]
    Singular { det: f64 },
    #[error("operator `{0}` is not monotone")]
    NotMonotone(&'static str),
    #[error("operator is not {beta}-cocoercive")]
    NotCocoercive { beta: f64 },
    #[error("contraction factor has modulus {0} > 1")]
    NotNonexpansive(f64),
    #[error("non-finite value encountered at iterate {index}")]
    NonFinite { index: usize },
    #[error("zero contour through 1 could not be extracted: {0}")]
    ContourExtraction(&'static str),
}
