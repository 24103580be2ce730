use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use srg_core::ComplexPoint;

pub const TOOL_VERSION: &str = concat!("srgcli ", env!("CARGO_PKG_VERSION"));

pub fn pair(z: ComplexPoint) -> [f64; 2] {
    [z.re, z.im]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegionKindTag {
    Disk,
    CompositionOval,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: [f64; 2],
    pub radius: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionMetadata {
    pub resolution: usize,
    pub tool_version: String,
    /// Bound on the defining-equation residual of every boundary vertex.
    pub boundary_tolerance: f64,
    /// Largest residual actually observed.
    pub max_boundary_residual: f64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionDocument {
    pub kind: RegionKindTag,
    pub parameters: BTreeMap<String, f64>,
    /// The region itself when it is a disk.
    pub disk: Option<Circle>,
    /// `Circ(θ)` for the tight averagedness coefficient `θ`.
    pub tight_circle: Circle,
    /// Closed, counterclockwise; the first vertex is not repeated.
    pub boundary: Vec<[f64; 2]>,
    pub metadata: RegionMetadata,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Comparison {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = ">")]
    Above,
    #[serde(rename = "!=")]
    NotEqual,
    #[serde(rename = "==")]
    Equal,
}

impl Comparison {
    pub fn holds(self, observed: f64, expected: f64) -> bool {
        match self {
            Comparison::AtMost => observed <= expected,
            Comparison::AtLeast => observed >= expected,
            Comparison::Above => observed > expected,
            Comparison::NotEqual => observed != expected,
            Comparison::Equal => observed == expected,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub observed: f64,
    pub comparison: Comparison,
    pub expected: f64,
    /// The numeric tolerance the check was run with, if any.
    pub tolerance: Option<f64>,
    pub pass: bool,
    pub witnesses: Vec<[f64; 2]>,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>, observed: f64, comparison: Comparison, expected: f64) -> Self {
        Self {
            name: name.into(),
            observed,
            comparison,
            expected,
            tolerance: None,
            pass: comparison.holds(observed, expected),
            witnesses: Vec::new(),
        }
    }

    pub fn tolerance(mut self, tol: f64) -> Self {
        self.tolerance = Some(tol);
        self
    }

    pub fn witnesses(mut self, points: impl IntoIterator<Item = ComplexPoint>) -> Self {
        self.witnesses = points.into_iter().map(pair).collect();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub suite: String,
    pub pass: bool,
    pub seed: u64,
    pub parameters: BTreeMap<String, f64>,
    pub checks: Vec<CheckRecord>,
    pub tool_version: String,
}

impl ReportDocument {
    pub fn new(suite: &str, seed: u64, parameters: BTreeMap<String, f64>, checks: Vec<CheckRecord>) -> Self {
        Self {
            suite: suite.to_owned(),
            pass: checks.iter().all(|c| c.pass),
            seed,
            parameters,
            checks,
            tool_version: TOOL_VERSION.to_owned(),
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn params<const N: usize>(entries: [(&str, f64); N]) -> BTreeMap<String, f64> {
    entries.into_iter().map(|(k, v)| (k.to_owned(), v)).collect()
}
