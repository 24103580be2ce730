use alloc::vec::Vec;

use super::{is_finite, ComplexPoint};
use crate::{Error, Result};

/// An ordered vertex list, optionally closed (last vertex joins the first).
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    points: Vec<ComplexPoint>,
    closed: bool,
}

impl Polyline {
    /// Removes consecutive duplicates (and a repeated first vertex at the end of
    /// a closed curve). A closed polyline must keep at least 3 vertices.
    pub fn new(mut points: Vec<ComplexPoint>, closed: bool) -> Result<Self> {
        if !points.iter().all(|&p| is_finite(p)) {
            return Err(Error::InvalidArgument("polyline vertices must be finite"));
        }
        points.dedup();
        if closed {
            while points.len() > 1 && points.first() == points.last() {
                points.pop();
            }
            if points.len() < 3 {
                return Err(Error::InvalidArgument("closed polyline needs at least 3 vertices"));
            }
        }
        Ok(Self { points, closed })
    }

    pub fn points(&self) -> &[ComplexPoint] {
        &self.points
    }

    pub fn into_points(self) -> Vec<ComplexPoint> {
        self.points
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Segments in order, including the closing segment for closed curves.
    pub fn segments(&self) -> impl Iterator<Item = (ComplexPoint, ComplexPoint)> + '_ {
        let n = self.points.len();
        let count = if self.closed { n } else { n.saturating_sub(1) };
        (0..count).map(move |i| (self.points[i], self.points[(i + 1) % n]))
    }

    pub fn reversed(&self) -> Self {
        let mut points = self.points.clone();
        points.reverse();
        Self { points, closed: self.closed }
    }

    pub fn map(&self, f: impl Fn(ComplexPoint) -> ComplexPoint) -> Result<Self> {
        Self::new(self.points.iter().map(|&p| f(p)).collect(), self.closed)
    }

    /// Shoelace area; positive for counterclockwise closed curves.
    pub fn signed_area(&self) -> f64 {
        0.5 * self.segments().map(|(a, b)| a.re * b.im - b.re * a.im).sum::<f64>()
    }

    pub fn perimeter(&self) -> f64 {
        self.segments().map(|(a, b)| (b - a).norm()).sum()
    }

    /// Euclidean distance from `z` to the nearest point of the curve.
    pub fn distance_to(&self, z: ComplexPoint) -> f64 {
        match self.points.len() {
            0 => f64::INFINITY,
            1 => (z - self.points[0]).norm(),
            _ => self
                .segments()
                .map(|(a, b)| segment_distance(z, a, b))
                .fold(f64::INFINITY, f64::min),
        }
    }

    /// Closest point of the curve to `z`.
    pub fn closest_point(&self, z: ComplexPoint) -> Option<ComplexPoint> {
        if self.points.len() == 1 {
            return Some(self.points[0]);
        }
        self.segments()
            .map(|(a, b)| segment_closest(z, a, b))
            .min_by(|p, q| (z - *p).norm_sqr().total_cmp(&(z - *q).norm_sqr()))
    }
}

pub(crate) fn segment_closest(z: ComplexPoint, a: ComplexPoint, b: ComplexPoint) -> ComplexPoint {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return a;
    }
    let t = ((z - a).re * ab.re + (z - a).im * ab.im) / len2;
    a + ab * t.clamp(0.0, 1.0)
}

pub(crate) fn segment_distance(z: ComplexPoint, a: ComplexPoint, b: ComplexPoint) -> f64 {
    (z - segment_closest(z, a, b)).norm()
}
