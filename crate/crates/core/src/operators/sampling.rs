//! Seeded sampling of SRG product sets.
//!
//! Random draws are split into slices of [`SAMPLE_SLICE`] indices. Slice `s`
//! uses ChaCha8 seeded with `seed` on stream `s`, so any partition of the
//! slices (sequential or parallel) merges to the same sample set.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{ComplexPoint, DiskRegion};
use crate::srg::{dys_srg_map, dys_step2_sweep, CocoerciveClass, DysClass};
use crate::{Error, Result};

pub const SAMPLE_SLICE: usize = 1 << 16;

/// Angles per factor in the deterministic `Circ(θ₁) × Circ(θ₂)` sweep.
pub const BOUNDARY_SWEEP: usize = 256;

/// Angles in the deterministic DYS boundary construction sweep.
pub const DYS_SWEEP: usize = 4096;

pub fn slice_count(n: usize) -> usize {
    n.div_ceil(SAMPLE_SLICE)
}

/// Index range `[start, end)` covered by `slice` out of `n` draws.
pub fn slice_range(n: usize, slice: usize) -> (usize, usize) {
    let start = (slice * SAMPLE_SLICE).min(n);
    (start, (start + SAMPLE_SLICE).min(n))
}

fn slice_rng(seed: u64, slice: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(slice as u64);
    rng
}

fn draw(rng: &mut ChaCha8Rng, disk: &DiskRegion) -> ComplexPoint {
    let u: f64 = rng.random();
    let v: f64 = rng.random();
    disk.sample(u, v)
}

/// Random products `z₁z₂`, `z₁ ∈ Disk(θ₁)`, `z₂ ∈ Disk(θ₂)`, for one slice of an `n`-draw run.
pub fn composition_product_slice(theta1: f64, theta2: f64, n: usize, seed: u64, slice: usize) -> Result<Vec<ComplexPoint>> {
    let d1 = DiskRegion::averaged(theta1)?;
    let d2 = DiskRegion::averaged(theta2)?;
    let (start, end) = slice_range(n, slice);
    let mut rng = slice_rng(seed, slice);
    Ok((start..end).map(|_| draw(&mut rng, &d1) * draw(&mut rng, &d2)).collect())
}

/// Products of `per_axis` evenly spaced points on each of `Circ(θ₁)` and `Circ(θ₂)`.
pub fn composition_boundary_sweep(theta1: f64, theta2: f64, per_axis: usize) -> Result<Vec<ComplexPoint>> {
    let d1 = DiskRegion::averaged(theta1)?;
    let d2 = DiskRegion::averaged(theta2)?;
    let angle = |k: usize| TAU * k as f64 / per_axis as f64;
    let mut out = Vec::with_capacity(per_axis * per_axis);
    for i in 0..per_axis {
        let z1 = d1.boundary_point(angle(i));
        out.extend((0..per_axis).map(|j| z1 * d2.boundary_point(angle(j))));
    }
    Ok(out)
}

/// `n` random products followed by the boundary sweep.
pub fn sample_composition_product(theta1: f64, theta2: f64, n: usize, seed: u64) -> Result<Vec<ComplexPoint>> {
    if n == 0 {
        return Err(Error::InvalidArgument("sample count must be at least 1"));
    }
    let mut out = Vec::with_capacity(n + BOUNDARY_SWEEP * BOUNDARY_SWEEP);
    for slice in 0..slice_count(n) {
        out.extend(composition_product_slice(theta1, theta2, n, seed, slice)?);
    }
    out.extend(composition_boundary_sweep(theta1, theta2, BOUNDARY_SWEEP)?);
    Ok(out)
}

/// Random `Π(z₁,z₂,z₃)` with `z₁, z₂ ∈ Disk(½)` and `z₃ ∈ (1/β)Disk(½)`, for one slice.
pub fn dys_sample_slice(cls: &DysClass, n: usize, seed: u64, slice: usize) -> Vec<ComplexPoint> {
    let half = DiskRegion { center: 0.5, radius: 0.5 };
    let cocoercive = CocoerciveClass::new(cls.beta()).map(|c| c.srg()).unwrap_or(half);
    let (start, end) = slice_range(n, slice);
    let mut rng = slice_rng(seed, slice);
    (start..end)
        .map(|_| {
            let z1 = draw(&mut rng, &half);
            let z2 = draw(&mut rng, &half);
            let z3 = draw(&mut rng, &cocoercive);
            dys_srg_map(z1, z2, z3, cls.gamma())
        })
        .collect()
}

/// Images `Π(a₁, a₁, z₃)` of the boundary construction at `m` angles.
pub fn dys_boundary_sweep(cls: &DysClass, m: usize) -> Result<Vec<ComplexPoint>> {
    Ok(dys_step2_sweep(cls, m)?.iter().map(|c| c.image(cls.gamma())).collect())
}

/// Grid sizes `(angles, radii, directions)` of [`dys_family_sweep`] in [`sample_dys_region`].
pub const DYS_FAMILY_SWEEP: (usize, usize, usize) = (512, 8, 64);

/// `Π(a₁, a₁, z₃)` for `a₁ = cos θ e^{iθ}` at `n_theta` angles and `z₃` on a
/// polar grid of `(1/β)Disk(½)` (`n_rho + 1` radii including 0, `n_alpha` directions).
///
/// For each angle these fill the disk `a₂ − a₃Disk(½)` about `o2`; uniform
/// sampling reaches the parts of the DYS disk they cover only slowly.
pub fn dys_family_sweep(cls: &DysClass, n_theta: usize, n_rho: usize, n_alpha: usize) -> Result<Vec<ComplexPoint>> {
    if n_rho == 0 || n_alpha == 0 {
        return Err(Error::InvalidArgument("family sweep needs at least one radius and direction"));
    }
    let constructions = dys_step2_sweep(cls, n_theta)?;
    let mut out = Vec::with_capacity(n_theta * (n_rho + 1) * n_alpha);
    for c in &constructions {
        for i in 0..=n_rho {
            let radius = 0.5 * i as f64 / n_rho as f64;
            for j in 0..n_alpha {
                let w = ComplexPoint::new(0.5, 0.0) + ComplexPoint::from_polar(radius, TAU * j as f64 / n_alpha as f64);
                out.push(dys_srg_map(c.a1, c.a1, w / cls.beta(), cls.gamma()));
            }
        }
    }
    Ok(out)
}

/// `n` random DYS SRG points, then the boundary construction sweep, then the
/// `z₁ = z₂` family sweep.
pub fn sample_dys_region(beta: f64, gamma: f64, n: usize, seed: u64) -> Result<Vec<ComplexPoint>> {
    let cls = DysClass::new(beta, gamma)?;
    if n == 0 {
        return Err(Error::InvalidArgument("sample count must be at least 1"));
    }
    let (n_theta, n_rho, n_alpha) = DYS_FAMILY_SWEEP;
    let mut out = Vec::with_capacity(n + DYS_SWEEP + n_theta * (n_rho + 1) * n_alpha);
    for slice in 0..slice_count(n) {
        out.extend(dys_sample_slice(&cls, n, seed, slice));
    }
    out.extend(dys_boundary_sweep(&cls, DYS_SWEEP)?);
    out.extend(dys_family_sweep(&cls, n_theta, n_rho, n_alpha)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srg::{composition_region, dys_region};

    #[test]
    fn slices_partition_the_run() {
        let n = 2 * SAMPLE_SLICE + 17;
        assert_eq!(slice_count(n), 3);
        let whole = sample_composition_product(0.3, 0.6, n, 5).unwrap();
        let mut pieces = Vec::new();
        for s in (0..3).rev() {
            let mut part = composition_product_slice(0.3, 0.6, n, 5, s).unwrap();
            part.extend(pieces);
            pieces = part;
        }
        assert_eq!(&whole[..n], &pieces[..]);
    }

    #[test]
    fn seeds_differ() {
        let a = sample_composition_product(0.3, 0.6, 10, 1).unwrap();
        let b = sample_composition_product(0.3, 0.6, 10, 2).unwrap();
        assert_ne!(a[0], b[0]);
    }

    #[test]
    fn products_stay_in_region() {
        let region = composition_region(0.25, 0.75, 256).unwrap();
        for z in sample_composition_product(0.25, 0.75, 2000, 9).unwrap().into_iter().step_by(7) {
            assert!(region.exterior_distance(z) <= 1e-9, "{z}");
        }
    }

    #[test]
    fn cardioid_samples_reach_origin() {
        let pts = sample_composition_product(0.5, 0.5, 1, 0).unwrap();
        let nearest = pts.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
        assert!(nearest < 1e-3);
        let farthest = pts.iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!((farthest - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dys_samples_in_disk() {
        let cls = DysClass::new(1.0, 1.3).unwrap();
        let disk = dys_region(&cls);
        let pts = sample_dys_region(1.0, 1.3, 50_000, 3).unwrap();
        assert!(pts.iter().all(|&z| disk.signed_distance(z) <= 1e-9));
        for z in &pts[50_000..50_000 + DYS_SWEEP] {
            assert!(disk.signed_distance(*z).abs() < 1e-9);
        }
        assert!(sample_dys_region(1.0, 2.5, 10, 0).is_err());
    }
}
