//! Concrete operators on `ℝ²` and brute-force sampling oracles for the SRG regions.

mod coverage;
mod dys;
mod linear;
mod sampling;

pub use coverage::{
    coverage_report, coverage_report_with, TargetRegion, VerificationReport, Violation, CONTAINMENT_TOLERANCE,
    MAX_LISTED_VIOLATIONS,
};
pub use dys::{dys_assemble, DysOperator};
pub use linear::{
    averaged_from_contraction, monotone_with_resolvent, resolvent_linear, scaled_rotation, srg_points_of_linear,
    LinearPlaneOperator, SrgSample, Vec2,
};
pub use sampling::{
    composition_boundary_sweep, composition_product_slice, dys_boundary_sweep, dys_family_sweep, dys_sample_slice,
    sample_composition_product, sample_dys_region, slice_count, slice_range, BOUNDARY_SWEEP, DYS_FAMILY_SWEEP, DYS_SWEEP,
    SAMPLE_SLICE,
};
