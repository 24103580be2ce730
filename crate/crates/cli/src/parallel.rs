//! Rayon versions of the core samplers. Slices are generated in parallel and
//! concatenated in slice order, so the output equals the sequential sampler's.

use rayon::prelude::*;
use srg_core::operators::{
    composition_boundary_sweep, composition_product_slice, dys_boundary_sweep, dys_family_sweep, dys_sample_slice,
    slice_count, BOUNDARY_SWEEP, DYS_FAMILY_SWEEP, DYS_SWEEP,
};
use srg_core::srg::DysClass;
use srg_core::ComplexPoint;

use crate::error::{CliError, CliResult};

fn require_samples(n: usize) -> CliResult<()> {
    if n == 0 {
        return Err(CliError::Input("--n must be at least 1".into()));
    }
    Ok(())
}

pub fn composition_samples(theta1: f64, theta2: f64, n: usize, seed: u64) -> CliResult<Vec<ComplexPoint>> {
    require_samples(n)?;
    let slices = (0..slice_count(n))
        .into_par_iter()
        .map(|s| composition_product_slice(theta1, theta2, n, seed, s))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = slices.concat();
    out.extend(composition_boundary_sweep(theta1, theta2, BOUNDARY_SWEEP)?);
    Ok(out)
}

pub fn dys_samples(cls: &DysClass, n: usize, seed: u64) -> CliResult<Vec<ComplexPoint>> {
    require_samples(n)?;
    let slices: Vec<Vec<ComplexPoint>> =
        (0..slice_count(n)).into_par_iter().map(|s| dys_sample_slice(cls, n, seed, s)).collect();
    let mut out = slices.concat();
    out.extend(dys_boundary_sweep(cls, DYS_SWEEP)?);
    let (n_theta, n_rho, n_alpha) = DYS_FAMILY_SWEEP;
    out.extend(dys_family_sweep(cls, n_theta, n_rho, n_alpha)?);
    Ok(out)
}
