
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use crate::geometry::{f2_eval, f2_gradient, oval_roots, ComplexPoint, PolarQuadratic, Polyline};
use crate::tolerances::CONTOUR_RESIDUAL;
use crate::{Error, Result};

/// Half-width of the square sampled by marching squares. The quartic's zero
/// set lies in the closed unit disk.
const EXTENT: f64 = 1.05;

/// A point this close to the boundary polyline counts as a member.
const BOUNDARY_MEMBERSHIP: f64 = 1e-9;

/// Below this distance the exterior distance is recomputed by projecting onto `f₂ = 0`.
const PROJECTION_BAND: f64 = 1e-5;

/// Extracted boundary vertices must match the polar roots at their angle to this.
const ROOT_AGREEMENT: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompositionConfig {
    /// Marching-squares cells per axis over `[-1.05, 1.05]²` (rounded up to even).
    pub boundary_resolution: usize,
    /// Polar grid size (per axis) of the membership oracle over `Disk(θ₂)`.
    pub oracle_grid: usize,
    /// Points per axis of each local refinement grid.
    pub refine_grid: usize,
    pub refine_levels: usize,
    /// Maximum sagitta of a boundary chord; longer chords are subdivided.
    pub chord_tolerance: f64,
}

impl Default for CompositionConfig {
    fn default() -> Self {
        Self {
            boundary_resolution: 1024,
            oracle_grid: 256,
            refine_grid: 16,
            refine_levels: 2,
            chord_tolerance: 1e-7,
        }
    }
}

/// `Disk(θ₁)Disk(θ₂)`, the SRG of `𝒩_{θ₁}𝒩_{θ₂}`.
///
/// Holds the outer boundary curve (the component of `f₂ = 0` through 1) as a
/// counterclockwise polyline whose vertices satisfy `|f₂| < 10⁻⁸`.
#[derive(Debug, Clone)]
pub struct CompositionOvalRegion {
    quadratic: PolarQuadratic,
    boundary: Polyline,
    config: CompositionConfig,
}

/// Builds the region with default oracle settings and the given marching-squares resolution.
pub fn composition_region(theta1: f64, theta2: f64, boundary_resolution: usize) -> Result<CompositionOvalRegion> {
    composition_region_with(
        theta1,
        theta2,
        CompositionConfig { boundary_resolution, ..CompositionConfig::default() },
    )
}

pub fn composition_region_with(theta1: f64, theta2: f64, config: CompositionConfig) -> Result<CompositionOvalRegion> {
    let quadratic = PolarQuadratic::new(theta1, theta2)?;
    if config.boundary_resolution < 64 {
        return Err(Error::InvalidArgument("boundary resolution must be at least 64"));
    }
    if config.oracle_grid < 2 || config.refine_grid < 3 {
        return Err(Error::InvalidArgument("membership oracle grid is too coarse"));
    }
    let traced = trace_outer_curve(&quadratic, config.boundary_resolution)?;
    let polished: Vec<_> = traced.into_iter().map(|z| polish_outer(&quadratic, z)).collect();
    let refined = refine_chords(&quadratic, &polished, config.chord_tolerance);
    let mut boundary = Polyline::new(refined, true)?;
    if boundary.signed_area() < 0.0 {
        boundary = boundary.reversed();
    }
    let region = CompositionOvalRegion { quadratic, boundary, config };
    region.validate()?;
    Ok(region)
}

/// Membership in `Disk(θ₁)Disk(θ₂)` by the quantifier oracle.
pub fn region_contains(region: &CompositionOvalRegion, z: ComplexPoint) -> bool {
    region.contains(z)
}

impl CompositionOvalRegion {
    pub fn theta1(&self) -> f64 {
        self.quadratic.theta1()
    }

    pub fn theta2(&self) -> f64 {
        self.quadratic.theta2()
    }

    pub fn quadratic(&self) -> &PolarQuadratic {
        &self.quadratic
    }

    pub fn boundary(&self) -> &Polyline {
        &self.boundary
    }

    pub fn config(&self) -> &CompositionConfig {
        &self.config
    }

    /// `0 ∈ Disk(θ₁)Disk(θ₂)` exactly when one of the disks contains 0.
    pub fn origin_inside(&self) -> bool {
        origin_inside(&self.quadratic)
    }

    /// Is `z` in `Disk(θ₁)Disk(θ₂)`?
    ///
    /// Searches for `w ∈ Disk(θ₂)∖{0}` with `z/w ∈ Disk(θ₁)`, i.e.
    /// `|z − (1−θ₁)w| ≤ θ₁|w|`, over a polar grid of `Disk(θ₂)` followed by
    /// local refinement around the best cell. Points within `10⁻⁹` of the
    /// boundary polyline count as members.
    pub fn contains(&self, z: ComplexPoint) -> bool {
        if z.re == 0.0 && z.im == 0.0 {
            return self.origin_inside();
        }
        // |z₁z₂| ≤ 1 on the product, so nothing farther out can factor.
        if z.norm() > 1.0 + BOUNDARY_MEMBERSHIP {
            return false;
        }
        if self.boundary.distance_to(z) <= BOUNDARY_MEMBERSHIP {
            return true;
        }
        let (t1, t2) = (self.theta1(), self.theta2());
        let center = ComplexPoint::new(1.0 - t2, 0.0);
        // |z/w − (1−θ₁)|² − θ₁², nonpositive iff z/w ∈ Disk(θ₁).
        let gap_at = |w: ComplexPoint| {
            let den = w.norm_sqr();
            if den == 0.0 {
                return f64::INFINITY;
            }
            (z - w * (1.0 - t1)).norm_sqr() / den - t1 * t1
        };
        let gap = |rho: f64, alpha: f64| gap_at(center + ComplexPoint::from_polar(t2 * rho, alpha));

        let n = self.config.oracle_grid;
        let d_rho = 1.0 / (n - 1) as f64;
        let d_alpha = TAU / n as f64;
        let directions: Vec<ComplexPoint> = (0..n).map(|j| ComplexPoint::from_polar(t2, j as f64 * d_alpha)).collect();
        let mut best = (f64::INFINITY, 0.0, 0.0);
        for i in 0..n {
            let rho = i as f64 * d_rho;
            for (j, &u) in directions.iter().enumerate() {
                let g = gap_at(center + u * rho);
                if g <= 0.0 {
                    return true;
                }
                if g < best.0 {
                    best = (g, rho, j as f64 * d_alpha);
                }
            }
        }

        let m = self.config.refine_grid;
        let (mut half_rho, mut half_alpha) = (d_rho, d_alpha);
        for _ in 0..self.config.refine_levels {
            let (_, rho0, alpha0) = best;
            let lo = (rho0 - half_rho).max(0.0);
            let hi = (rho0 + half_rho).min(1.0);
            let step_rho = (hi - lo) / (m - 1) as f64;
            let step_alpha = 2.0 * half_alpha / (m - 1) as f64;
            for i in 0..m {
                let rho = lo + i as f64 * step_rho;
                for j in 0..m {
                    let alpha = alpha0 - half_alpha + j as f64 * step_alpha;
                    let g = gap(rho, alpha);
                    if g <= 0.0 {
                        return true;
                    }
                    if g < best.0 {
                        best = (g, rho, alpha);
                    }
                }
            }
            half_rho = step_rho;
            half_alpha = step_alpha;
        }
        false
    }

    /// The interval of moduli where the ray at angle `psi` meets the region,
    /// read off the polar roots: positive roots at `psi` and negated negative
    /// roots at `psi + π` are the quartic's points on that ray.
    pub fn radial_extent(&self, psi: f64) -> Option<(f64, f64)> {
        radial_extent(&self.quadratic, psi)
    }

    /// Membership in the region enclosed by the outer curve, decided from the
    /// polar roots along the ray through `z`.
    pub fn contains_analytic(&self, z: ComplexPoint) -> bool {
        let modulus = z.norm();
        if modulus == 0.0 {
            return self.origin_inside();
        }
        match self.radial_extent(z.arg()) {
            Some((lo, hi)) => lo <= modulus && modulus <= hi,
            None => false,
        }
    }

    /// Distance from `z` to the region; zero for members.
    pub fn exterior_distance(&self, z: ComplexPoint) -> f64 {
        if self.contains_analytic(z) {
            return 0.0;
        }
        let modulus = z.norm();
        let radial = match self.radial_extent(z.arg()) {
            Some((_, hi)) if modulus > hi => modulus - hi,
            Some((lo, _)) => lo - modulus,
            None => f64::INFINITY,
        };
        let d = radial.min(self.boundary.distance_to(z));
        if d < PROJECTION_BAND {
            let foot = polish(self.theta1(), self.theta2(), z);
            let projected = (foot - z).norm();
            if projected <= 2.0 * d {
                return projected;
            }
        }
        d
    }

    /// Boundary vertices must sit on `f₂ = 0` and on the outer curve as seen by the polar roots.
    fn validate(&self) -> Result<()> {
        let (t1, t2) = (self.theta1(), self.theta2());
        let one = ComplexPoint::new(1.0, 0.0);
        if self.boundary.distance_to(one) > 1e-9 {
            return Err(Error::ContourExtraction("boundary misses the point 1"));
        }
        for &z in self.boundary.points() {
            if !(f2_eval(t1, t2, z).abs() < CONTOUR_RESIDUAL) {
                return Err(Error::ContourExtraction("vertex residual exceeds 1e-8"));
            }
            let modulus = z.norm();
            if modulus < ROOT_AGREEMENT {
                continue;
            }
            let on_outer = match self.radial_extent(z.arg()) {
                Some((lo, hi)) => {
                    (modulus - hi).abs() <= ROOT_AGREEMENT
                        || (!self.origin_inside() && (modulus - lo).abs() <= ROOT_AGREEMENT)
                }
                None => false,
            };
            if !on_outer {
                return Err(Error::ContourExtraction("boundary disagrees with the polar roots"));
            }
        }
        Ok(())
    }
}

fn origin_inside(q: &PolarQuadratic) -> bool {
    q.theta1() >= 0.5 || q.theta2() >= 0.5
}

fn radial_extent(q: &PolarQuadratic, psi: f64) -> Option<(f64, f64)> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &r in oval_roots(q, psi).as_slice() {
        if r >= 0.0 {
            lo = lo.min(r);
            hi = hi.max(r);
        }
    }
    for &r in oval_roots(q, psi + PI).as_slice() {
        if r <= 0.0 {
            lo = lo.min(-r);
            hi = hi.max(-r);
        }
    }
    if hi < lo {
        return None;
    }
    if origin_inside(q) {
        lo = 0.0;
    }
    Some((lo, hi))
}

/// Continuous function that is negative inside the region, positive outside
/// and zero exactly on the outer curve.
fn outer_level(q: &PolarQuadratic, z: ComplexPoint) -> f64 {
    let modulus = z.norm();
    if modulus == 0.0 {
        if !origin_inside(q) {
            return radial_extent(q, 0.0).map_or(1.0, |(lo, _)| lo);
        }
        let reach = |psi| radial_extent(q, psi).map_or(0.0, |(_, hi)| hi);
        return -reach(0.0).min(reach(PI));
    }
    match radial_extent(q, z.arg()) {
        Some((lo, hi)) => (modulus - hi).max(lo - modulus),
        None => modulus,
    }
}

/// Newton projection onto `f₂ = 0` along the gradient.
fn polish(theta1: f64, theta2: f64, mut z: ComplexPoint) -> ComplexPoint {
    for _ in 0..80 {
        let f = f2_eval(theta1, theta2, z);
        if f == 0.0 {
            break;
        }
        let g = f2_gradient(theta1, theta2, z);
        let g2 = g.norm_sqr();
        if g2 == 0.0 {
            break;
        }
        let step = g * (f / g2);
        z -= step;
        if step.norm() < 1e-16 {
            break;
        }
    }
    z
}

/// Subdivides chords whose midpoints sit farther than `tol` from the curve.
/// Projects onto the outer curve: Newton along the gradient, or along the ray
/// through `z` when Newton lands on the inner oval.
fn polish_outer(q: &PolarQuadratic, z: ComplexPoint) -> ComplexPoint {
    let foot = polish(q.theta1(), q.theta2(), z);
    if outer_level(q, foot).abs() < 0.1 * ROOT_AGREEMENT {
        return foot;
    }
    let (modulus, psi) = z.to_polar();
    match radial_extent(q, psi) {
        Some((lo, hi)) => {
            let r = if !origin_inside(q) && (modulus - lo).abs() < (modulus - hi).abs() { lo } else { hi };
            ComplexPoint::from_polar(r, psi)
        }
        None => foot,
    }
}

/// Midpoints that polish onto the inner oval are rejected.
fn refine_chords(q: &PolarQuadratic, vertices: &[ComplexPoint], tol: f64) -> Vec<ComplexPoint> {
    let (theta1, theta2) = (q.theta1(), q.theta2());
    let n = vertices.len();
    let mut out = Vec::with_capacity(n * 2);
    let mut stack: Vec<(ComplexPoint, usize)> = Vec::new();
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        out.push(a);
        // depth-first, right half pushed first so points come out in order
        stack.clear();
        let mut left = a;
        stack.push((b, 0));
        while let Some((right, depth)) = stack.pop() {
            let chord = (right - left).norm();
            let mid = (left + right) * 0.5;
            let foot = polish(theta1, theta2, mid);
            let sag = (foot - mid).norm();
            let on_outer = outer_level(q, foot).abs() < 0.1 * ROOT_AGREEMENT;
            if depth < 24 && chord > 1e-9 && sag > tol && sag < chord && on_outer {
                stack.push((right, depth + 1));
                stack.push((foot, depth + 1));
            } else {
                if right != b {
                    out.push(right);
                }
                left = right;
            }
        }
    }
    out
}

/// Marching squares over the outer level function, returning the closed chain
/// of edge crossings that passes nearest to 1.
///
/// The level function vanishes only on the outer curve of `f₂ = 0`, so the
/// inner oval cannot capture the contour where the two ovals touch. Saddle
/// cells keep the negative corners connected.
fn trace_outer_curve(q: &PolarQuadratic, resolution: usize) -> Result<Vec<ComplexPoint>> {
    let n = resolution + resolution % 2;
    let half = (n / 2) as f64;
    let h = EXTENT / half;
    let coord = |i: usize| (i as f64 - half) * h;
    let stride = n + 1;

    let mut values = vec![0.0f64; stride * stride];
    for j in 0..=n {
        for i in 0..=n {
            values[j * stride + i] = outer_level(q, ComplexPoint::new(coord(i), coord(j)));
        }
    }
    let high = |i: usize, j: usize| values[j * stride + i] >= 0.0;

    // Edge ids: horizontal (i,j)-(i+1,j) then vertical (i,j)-(i,j+1).
    let horizontal = |i: usize, j: usize| j * n + i;
    let vertical_base = stride * n;
    let vertical = |i: usize, j: usize| vertical_base + j * stride + i;
    let edge_count = vertical_base + n * stride;

    const EMPTY: u32 = u32::MAX;
    let mut links = vec![[EMPTY; 2]; edge_count];
    let mut link = |a: usize, b: usize| -> Result<()> {
        for (from, to) in [(a, b), (b, a)] {
            let slot = links[from].iter_mut().find(|s| **s == EMPTY);
            match slot {
                Some(s) => *s = to as u32,
                None => return Err(Error::ContourExtraction("edge crossed by more than two segments")),
            }
        }
        Ok(())
    };

    for j in 0..n {
        for i in 0..n {
            let corners = [high(i, j), high(i + 1, j), high(i + 1, j + 1), high(i, j + 1)];
            // edges in corner order: bottom (0-1), right (1-2), top (2-3), left (3-0)
            let edges = [horizontal(i, j), vertical(i + 1, j), horizontal(i, j + 1), vertical(i, j)];
            let crossing: Vec<usize> = (0..4).filter(|&e| corners[e] != corners[(e + 1) % 4]).collect();
            match crossing.len() {
                0 => {}
                2 => link(edges[crossing[0]], edges[crossing[1]])?,
                4 => {
                    // Cut off the two high corners so the low ones stay joined.
                    // Corner c sits between edges c-1 and c.
                    for c in (0..4).filter(|&c| corners[c]) {
                        link(edges[(c + 3) % 4], edges[c])?;
                    }
                }
                _ => unreachable!("a square has an even number of sign changes"),
            }
        }
    }

    let crossing_point = |e: usize| -> ComplexPoint {
        let (a, b) = if e < vertical_base {
            let (i, j) = (e % n, e / n);
            ((i, j), (i + 1, j))
        } else {
            let k = e - vertical_base;
            let (i, j) = (k % stride, k / stride);
            ((i, j), (i, j + 1))
        };
        let fa = values[a.1 * stride + a.0];
        let fb = values[b.1 * stride + b.0];
        let t = if fa == fb { 0.5 } else { fa / (fa - fb) };
        let pa = ComplexPoint::new(coord(a.0), coord(a.1));
        let pb = ComplexPoint::new(coord(b.0), coord(b.1));
        pa + (pb - pa) * t
    };

    let one = ComplexPoint::new(1.0, 0.0);
    let start = (0..edge_count)
        .filter(|&e| links[e][0] != EMPTY)
        .min_by(|&a, &b| {
            (crossing_point(a) - one)
                .norm_sqr()
                .total_cmp(&(crossing_point(b) - one).norm_sqr())
        })
        .ok_or(Error::ContourExtraction("no sign change of f2 on the grid"))?;
    if (crossing_point(start) - one).norm() > 4.0 * h {
        return Err(Error::ContourExtraction("no contour passes near 1"));
    }

    let mut chain = vec![crossing_point(start)];
    let mut prev = start;
    let mut current = links[start][0] as usize;
    while current != start {
        if links[current][1] == EMPTY {
            return Err(Error::ContourExtraction("open contour"));
        }
        chain.push(crossing_point(current));
        let [a, b] = links[current];
        let next = if a as usize == prev { b } else { a } as usize;
        prev = current;
        current = next;
        if chain.len() > edge_count {
            return Err(Error::ContourExtraction("contour walk did not close"));
        }
    }
    Ok(chain)
}
