//! Default numerical tolerances. Every public operation that consumes one of
//! these also accepts an override.

/// Algebraic identities evaluated in f64.
pub const ANALYTIC: f64 = 1e-9;

/// Finite-difference checks.
pub const FINITE_DIFFERENCE: f64 = 1e-5;

/// Monte-Carlo agreements.
pub const MONTE_CARLO: f64 = 1e-3;

/// A winding-number query point closer than this to the curve is rejected.
pub const ON_CURVE: f64 = 1e-12;

/// Largest allowed distance of a summed winding angle from an integer.
pub const WINDING_RESIDUAL: f64 = 1e-6;

/// Envelope Newton iteration.
pub const NEWTON_STEP: f64 = 1e-10;
pub const NEWTON_MAX_ITERATIONS: usize = 50;

/// Boundary vertices of extracted contours must satisfy `|f2| <` this.
pub const CONTOUR_RESIDUAL: f64 = 1e-8;

/// Points this close to 1 are treated as the point 1 itself.
pub const AT_ONE: f64 = 1e-12;

/// Slack for monotonicity and cocoercivity checks of constructed matrices.
pub const OPERATOR_CHECK: f64 = 1e-12;
