use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "srgcli", version, about = "Scaled relative graph coefficients, regions and verification suites")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: Common,
}

/// Overrides accepted by every command.
#[derive(Debug, Clone, Copy, Args)]
pub struct Common {
    /// Seed for all random sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Tolerance for algebraic identities.
    #[arg(long, global = true, default_value_t = srg_core::tolerances::ANALYTIC)]
    pub tol_analytic: f64,

    /// Distance outside a region beyond which a sample counts as a violation.
    #[arg(long, global = true, default_value_t = srg_core::operators::CONTAINMENT_TOLERANCE)]
    pub tol_mc: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tight averagedness coefficient of a composition.
    Coeff(CoeffArgs),
    /// Write a region boundary as JSON, optionally with an SVG figure.
    Region(RegionArgs),
    /// Run a verification suite and write its report.
    Verify(VerifyArgs),
    /// Iterate an averaged map and write the residual trace as CSV.
    Iterate(IterateArgs),
}

#[derive(Debug, Args)]
pub struct CoeffArgs {
    #[arg(long)]
    pub theta1: f64,
    #[arg(long)]
    pub theta2: f64,
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionKind {
    /// `Disk(θ)`.
    Disk,
    /// `Disk(θ₁)Disk(θ₂)`.
    Composition,
    /// The Davis–Yin disk for `(β, γ)`.
    Dys,
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    #[arg(long, value_enum)]
    pub kind: RegionKind,
    #[arg(long)]
    pub theta: Option<f64>,
    #[arg(long)]
    pub theta1: Option<f64>,
    #[arg(long)]
    pub theta2: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Boundary resolution (marching-squares grid for compositions, vertex count for disks).
    #[arg(long, default_value_t = 1024)]
    pub resolution: usize,
    /// JSON output path; stdout if omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Composition,
    Dys,
    Tightness,
    Rates,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub theta1: Option<f64>,
    #[arg(long)]
    pub theta2: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Shrink factor for the tightness witness; both 0.05 and 0.01 if omitted.
    #[arg(long)]
    pub delta: Option<f64>,
    /// Random samples (composition, dys).
    #[arg(long, default_value_t = 1_000_000)]
    pub n: usize,
    /// Coverage-gap threshold.
    #[arg(long, default_value_t = 0.02)]
    pub eps: f64,
    /// Probe grid size per axis for the coverage gap.
    #[arg(long, default_value_t = 64)]
    pub probe: usize,
    /// Random instances (rates).
    #[arg(long, default_value_t = 100)]
    pub instances: usize,
    /// Iterations per rate-bound check (rates).
    #[arg(long, default_value_t = 1000)]
    pub k: usize,
    /// Report output path; stdout if omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OperatorKind {
    Identity,
    /// `((1−θ₁)I + θ₁e^{iφ₁})((1−θ₂)I + θ₂e^{iφ₂})`.
    Composition,
    /// Davis–Yin with scaled-rotation `A`, `B`, `C`.
    Dys,
}

#[derive(Debug, Args)]
pub struct IterateArgs {
    #[arg(long, value_enum)]
    pub operator: OperatorKind,
    /// Claimed averagedness for the identity map.
    #[arg(long, default_value_t = 0.5)]
    pub theta: f64,
    #[arg(long)]
    pub theta1: Option<f64>,
    #[arg(long)]
    pub theta2: Option<f64>,
    /// Rotation angle of the first composition factor.
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub phi1: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub phi2: f64,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    /// `A` as the complex number `re,im`.
    #[arg(long, value_delimiter = ',', value_name = "RE,IM", allow_negative_numbers = true, default_values_t = [0.0, 0.0])]
    pub a: Vec<f64>,
    #[arg(long, value_delimiter = ',', value_name = "RE,IM", allow_negative_numbers = true, default_values_t = [0.0, 0.0])]
    pub b: Vec<f64>,
    #[arg(long, value_delimiter = ',', value_name = "RE,IM", allow_negative_numbers = true, default_values_t = [0.0, 0.0])]
    pub c: Vec<f64>,
    #[arg(long, value_delimiter = ',', value_name = "RE,IM", allow_negative_numbers = true, default_values_t = [1.0, 0.0])]
    pub x0: Vec<f64>,
    #[arg(long, default_value_t = 1000)]
    pub k: usize,
    /// CSV output path; stdout if omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
