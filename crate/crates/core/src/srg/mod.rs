//! Operator classes and their scaled relative graphs.
//!
//! - `𝒩_θ` (θ-averaged) has SRG `Disk(θ)`.
//! - Compositions `𝒩_{θ₁}𝒩_{θ₂}` have SRG `Disk(θ₁)Disk(θ₂)`, the region
//!   enclosed by the outer curve of the quartic `f₂ = 0`.
//! - Davis–Yin operators `𝒯_{β,γ}` have SRG `Disk(2β/(4β−γ))`.

mod classes;
mod composition;
mod dys;
mod tangency;

pub use classes::{srg_of_averaged, tight_composition_coeff, AveragedClass, CocoerciveClass, DysClass};
pub use composition::{composition_region, composition_region_with, region_contains, CompositionConfig, CompositionOvalRegion};
pub use dys::{
    dys_region, dys_srg_map, dys_step2_construct, dys_step2_sweep, max_angular_gap, o2_trajectory,
    DysConstruction,
};
pub use tangency::{
    circ_product_sweep, refined_angle_grid, tangency_certificate, tangency_g, tightness_witness,
    TangencyCertificate, TightnessWitness,
};
