#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec;
use alloc::vec::Vec;

use crate::geometry::{ComplexPoint, DiskRegion};
use crate::srg::CompositionOvalRegion;

/// Default distance outside the target beyond which a sample is a violation.
pub const CONTAINMENT_TOLERANCE: f64 = 1e-9;

/// At most this many violations are listed individually.
pub const MAX_LISTED_VIOLATIONS: usize = 64;

/// A region that samples are checked against.
pub trait TargetRegion {
    /// Euclidean distance to the region, zero for members.
    fn exterior_distance(&self, z: ComplexPoint) -> f64;

    /// Lower-left and upper-right corners of a box containing the region.
    fn bounds(&self) -> (ComplexPoint, ComplexPoint);
}

impl TargetRegion for DiskRegion {
    fn exterior_distance(&self, z: ComplexPoint) -> f64 {
        self.signed_distance(z).max(0.0)
    }

    fn bounds(&self) -> (ComplexPoint, ComplexPoint) {
        (
            ComplexPoint::new(self.leftmost(), -self.radius),
            ComplexPoint::new(self.rightmost(), self.radius),
        )
    }
}

impl TargetRegion for CompositionOvalRegion {
    fn exterior_distance(&self, z: ComplexPoint) -> f64 {
        CompositionOvalRegion::exterior_distance(self, z)
    }

    fn bounds(&self) -> (ComplexPoint, ComplexPoint) {
        let mut lo = ComplexPoint::new(f64::INFINITY, f64::INFINITY);
        let mut hi = ComplexPoint::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for z in self.boundary().points() {
            lo = ComplexPoint::new(lo.re.min(z.re), lo.im.min(z.im));
            hi = ComplexPoint::new(hi.re.max(z.re), hi.im.max(z.im));
        }
        (lo, hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub point: ComplexPoint,
    /// Distance outside the target.
    pub distance: f64,
}

/// Outcome of checking a sample set against a target region.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub n_samples: usize,
    /// The largest violations, at most [`MAX_LISTED_VIOLATIONS`], largest first.
    pub containment_violations: Vec<Violation>,
    pub violation_count: usize,
    pub max_exterior_distance: f64,
    /// Largest distance from an interior probe to its nearest sample.
    pub coverage_gap: f64,
    /// The probe attaining the coverage gap.
    pub gap_probe: Option<ComplexPoint>,
    pub interior_probes: usize,
    pub probe_resolution: usize,
    pub containment_tolerance: f64,
    pub eps: f64,
    pub seed: Option<u64>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn containment_pass(&self) -> bool {
        self.violation_count == 0
    }

    pub fn coverage_pass(&self) -> bool {
        self.coverage_gap <= self.eps
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

/// Containment and coverage of `samples` against `target`, probing a
/// `probe_resolution²` grid of cell centers over the target's bounding box.
/// Passes iff no sample lies farther than `10⁻⁹` outside and the coverage gap is at most `eps`.
pub fn coverage_report<R: TargetRegion + ?Sized>(
    samples: &[ComplexPoint],
    target: &R,
    probe_resolution: usize,
    eps: f64,
) -> VerificationReport {
    coverage_report_with(samples, target, probe_resolution, eps, CONTAINMENT_TOLERANCE)
}

pub fn coverage_report_with<R: TargetRegion + ?Sized>(
    samples: &[ComplexPoint],
    target: &R,
    probe_resolution: usize,
    eps: f64,
    containment_tolerance: f64,
) -> VerificationReport {
    let mut violations = Vec::new();
    let mut violation_count = 0;
    let mut max_exterior_distance = 0.0f64;
    for &z in samples {
        let distance = target.exterior_distance(z);
        max_exterior_distance = max_exterior_distance.max(distance);
        if !(distance <= containment_tolerance) {
            violation_count += 1;
            violations.push(Violation { point: z, distance });
        }
    }
    violations.sort_by(|a, b| b.distance.total_cmp(&a.distance));
    violations.truncate(MAX_LISTED_VIOLATIONS);

    let probe_resolution = probe_resolution.max(1);
    let (lo, hi) = target.bounds();
    let index = SpatialIndex::new(samples, lo, hi);
    let mut coverage_gap = 0.0f64;
    let mut gap_probe = None;
    let mut interior_probes = 0;
    let step = (hi - lo) / probe_resolution as f64;
    for j in 0..probe_resolution {
        for i in 0..probe_resolution {
            let probe = lo + ComplexPoint::new((i as f64 + 0.5) * step.re, (j as f64 + 0.5) * step.im);
            if target.exterior_distance(probe) > 0.0 {
                continue;
            }
            interior_probes += 1;
            let d = index.nearest_distance(probe);
            if d > coverage_gap || gap_probe.is_none() {
                coverage_gap = d;
                gap_probe = Some(probe);
            }
        }
    }

    let pass = violation_count == 0 && coverage_gap <= eps;
    VerificationReport {
        n_samples: samples.len(),
        containment_violations: violations,
        violation_count,
        max_exterior_distance,
        coverage_gap,
        gap_probe,
        interior_probes,
        probe_resolution,
        containment_tolerance,
        eps,
        seed: None,
        pass,
    }
}

/// Uniform bucket grid over a box; samples outside are clamped into edge cells.
struct SpatialIndex<'a> {
    samples: &'a [ComplexPoint],
    origin: ComplexPoint,
    cell: f64,
    nx: usize,
    ny: usize,
    /// `starts[c]..starts[c+1]` indexes `order` for cell `c`.
    starts: Vec<usize>,
    order: Vec<usize>,
}

impl<'a> SpatialIndex<'a> {
    fn new(samples: &'a [ComplexPoint], lo: ComplexPoint, hi: ComplexPoint) -> Self {
        let per_axis = ((samples.len() as f64 / 4.0).sqrt() as usize).clamp(1, 1024);
        let span = (hi.re - lo.re).max(hi.im - lo.im).max(f64::MIN_POSITIVE);
        let cell = span / per_axis as f64;
        let nx = (((hi.re - lo.re) / cell).ceil() as usize).max(1);
        let ny = (((hi.im - lo.im) / cell).ceil() as usize).max(1);
        let mut index = Self { samples, origin: lo, cell, nx, ny, starts: vec![0; nx * ny + 1], order: Vec::new() };

        let cells: Vec<usize> = samples.iter().map(|&z| index.cell_of(z)).collect();
        for &c in &cells {
            index.starts[c + 1] += 1;
        }
        for c in 0..nx * ny {
            index.starts[c + 1] += index.starts[c];
        }
        let mut fill = index.starts.clone();
        index.order = vec![0; samples.len()];
        for (k, &c) in cells.iter().enumerate() {
            index.order[fill[c]] = k;
            fill[c] += 1;
        }
        index
    }

    fn axis_cell(&self, offset: f64, n: usize) -> usize {
        let c = (offset / self.cell).floor();
        if c.is_nan() || c < 0.0 {
            0
        } else {
            (c as usize).min(n - 1)
        }
    }

    fn cell_of(&self, z: ComplexPoint) -> usize {
        let i = self.axis_cell(z.re - self.origin.re, self.nx);
        let j = self.axis_cell(z.im - self.origin.im, self.ny);
        j * self.nx + i
    }

    fn nearest_distance(&self, q: ComplexPoint) -> f64 {
        if self.samples.is_empty() {
            return f64::INFINITY;
        }
        let ci = self.axis_cell(q.re - self.origin.re, self.nx) as isize;
        let cj = self.axis_cell(q.im - self.origin.im, self.ny) as isize;
        let mut best = f64::INFINITY;
        let max_ring = self.nx.max(self.ny) as isize;
        for ring in 0..=max_ring {
            for j in (cj - ring)..=(cj + ring) {
                if j < 0 || j >= self.ny as isize {
                    continue;
                }
                let edge_row = j == cj - ring || j == cj + ring;
                let mut i = ci - ring;
                while i <= ci + ring {
                    if i >= 0 && i < self.nx as isize {
                        let c = j as usize * self.nx + i as usize;
                        for &k in &self.order[self.starts[c]..self.starts[c + 1]] {
                            best = best.min((self.samples[k] - q).norm());
                        }
                    }
                    i += if edge_row || ring == 0 { 1 } else { 2 * ring };
                }
            }
            if best <= ring as f64 * self.cell {
                break;
            }
        }
        best
    }
}
