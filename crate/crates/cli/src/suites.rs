use std::f64::consts::PI;

use srg_core::geometry::winding_number;
use srg_core::operators::{coverage_report_with, VerificationReport};
use srg_core::srg::{
    composition_region, dys_region, dys_step2_sweep, o2_trajectory, tangency_certificate, tight_composition_coeff,
    tightness_witness, CompositionOvalRegion, DysClass,
};
use srg_core::iteration::INCLUSION_TOLERANCE;
use srg_core::tolerances::FINITE_DIFFERENCE;
use srg_core::{ComplexPoint, DiskRegion};

use crate::args::{Common, Suite, VerifyArgs};
use crate::documents::{params, CheckRecord, Comparison, ReportDocument};
use crate::error::{CliError, CliResult};
use crate::{json, parallel, rates};

/// Boundary resolution used by the composition suite.
pub const SUITE_RESOLUTION: usize = 1024;

/// Hausdorff tolerance against the cardioid at `θ₁ = θ₂ = ½`.
pub const CARDIOID_TOLERANCE: f64 = 1e-6;

/// Witness points listed per check.
const WITNESS_LIMIT: usize = 16;

pub const DEFAULT_DELTAS: [f64; 2] = [0.05, 0.01];

fn need(v: Option<f64>, flag: &str) -> CliResult<f64> {
    v.ok_or_else(|| CliError::missing(flag))
}

fn coverage_checks(report: &VerificationReport) -> Vec<CheckRecord> {
    vec![
        CheckRecord::new("containment_violations", report.violation_count as f64, Comparison::Equal, 0.0)
            .tolerance(report.containment_tolerance)
            .witnesses(report.containment_violations.iter().take(WITNESS_LIMIT).map(|v| v.point)),
        CheckRecord::new("max_exterior_distance", report.max_exterior_distance, Comparison::AtMost, report.containment_tolerance),
        CheckRecord::new("coverage_gap", report.coverage_gap, Comparison::AtMost, report.eps)
            .witnesses(report.gap_probe),
    ]
}

/// Two-sided Hausdorff distance between the extracted boundary and `r = (1 + cos φ)/2`,
/// with the point attaining it.
pub fn cardioid_hausdorff(region: &CompositionOvalRegion) -> (f64, ComplexPoint) {
    let cardioid = |phi: f64| ComplexPoint::from_polar(0.5 * (1.0 + phi.cos()), phi);
    let mut worst = (0.0, ComplexPoint::new(1.0, 0.0));
    // vertex to curve, bounded by the radial gap
    for &z in region.boundary().points() {
        let d = if z.norm() == 0.0 { 0.0 } else { (z.norm() - cardioid(z.arg()).norm()).abs() };
        if d > worst.0 {
            worst = (d, z);
        }
    }
    // curve to polyline
    let n = 8192;
    for k in 0..n {
        let p = cardioid(-PI + 2.0 * PI * k as f64 / n as f64);
        let d = region.boundary().distance_to(p);
        if d > worst.0 {
            worst = (d, p);
        }
    }
    worst
}

pub fn composition(args: &VerifyArgs, common: &Common) -> CliResult<ReportDocument> {
    let (t1, t2) = (need(args.theta1, "theta1")?, need(args.theta2, "theta2")?);
    let theta = tight_composition_coeff(t1, t2)?;
    let region = composition_region(t1, t2, SUITE_RESOLUTION)?;
    let samples = parallel::composition_samples(t1, t2, args.n, common.seed)?;
    let report = coverage_report_with(&samples, &region, args.probe, args.eps, common.tol_mc);

    let mut checks = coverage_checks(&report);
    let tight = DiskRegion::averaged(theta)?;
    let (outside, at) = region
        .boundary()
        .points()
        .iter()
        .map(|&z| (tight.signed_distance(z), z))
        .fold((f64::NEG_INFINITY, ComplexPoint::new(1.0, 0.0)), |a, b| if b.0 > a.0 { b } else { a });
    checks.push(
        CheckRecord::new("boundary_in_tight_disk", outside, Comparison::AtMost, common.tol_analytic).witnesses([at]),
    );
    if t1 == 0.5 && t2 == 0.5 {
        let (d, at) = cardioid_hausdorff(&region);
        checks.push(CheckRecord::new("cardioid_hausdorff", d, Comparison::AtMost, CARDIOID_TOLERANCE).witnesses([at]));
    }
    let parameters = params([
        ("theta1", t1),
        ("theta2", t2),
        ("theta", theta),
        ("n", args.n as f64),
        ("eps", args.eps),
        ("probe", args.probe as f64),
        ("n_total", report.n_samples as f64),
        ("interior_probes", report.interior_probes as f64),
    ]);
    Ok(ReportDocument::new("composition", common.seed, parameters, checks))
}

pub fn dys(args: &VerifyArgs, common: &Common) -> CliResult<ReportDocument> {
    let (beta, gamma) = (need(args.beta, "beta")?, need(args.gamma, "gamma")?);
    let cls = DysClass::new(beta, gamma)?;
    let disk = dys_region(&cls);
    let samples = parallel::dys_samples(&cls, args.n, common.seed)?;
    let report = coverage_report_with(&samples, &disk, args.probe, args.eps, common.tol_mc);
    let mut checks = coverage_checks(&report);

    let sweep = dys_step2_sweep(&cls, srg_core::operators::DYS_SWEEP)?;
    let (off, at) = sweep
        .iter()
        .map(|c| {
            let image = c.image(gamma);
            (disk.signed_distance(image).abs(), image)
        })
        .fold((0.0, ComplexPoint::new(1.0, 0.0)), |a, b| if b.0 > a.0 { b } else { a });
    checks.push(CheckRecord::new("step2_on_circle", off, Comparison::AtMost, common.tol_analytic).witnesses([at]));

    let path = o2_trajectory(&cls, 4096)?;
    let winding = winding_number(&path, disk.center_point())?;
    checks.push(CheckRecord::new("o2_winding_about_center", winding as f64, Comparison::NotEqual, 0.0));

    let parameters = params([
        ("beta", beta),
        ("gamma", gamma),
        ("theta", cls.averagedness()),
        ("center", disk.center),
        ("radius", disk.radius),
        ("n", args.n as f64),
        ("eps", args.eps),
        ("probe", args.probe as f64),
        ("n_total", report.n_samples as f64),
        ("interior_probes", report.interior_probes as f64),
    ]);
    Ok(ReportDocument::new("dys", common.seed, parameters, checks))
}

/// Uniform grid of `n` angles on `[-π, π)`.
pub fn uniform_angles(n: usize) -> Vec<f64> {
    (0..n).map(|k| -PI + 2.0 * PI * k as f64 / n as f64).collect()
}

pub fn tightness(args: &VerifyArgs, common: &Common) -> CliResult<ReportDocument> {
    let (t1, t2) = (need(args.theta1, "theta1")?, need(args.theta2, "theta2")?);
    let deltas = match args.delta {
        Some(d) => vec![d],
        None => DEFAULT_DELTAS.to_vec(),
    };
    let cert = tangency_certificate(t1, t2, &uniform_angles(1000))?;
    let mut checks = vec![
        CheckRecord::new("g_residual", cert.max_g_residual, Comparison::AtMost, common.tol_analytic),
        CheckRecord::new("g_at_zero", cert.g_at_zero, Comparison::Equal, 0.0),
        CheckRecord::new("g_min_away_from_zero", cert.min_g_away_from_zero, Comparison::Above, 0.0),
        CheckRecord::new("curvature_error", cert.curvature_error(), Comparison::AtMost, FINITE_DIFFERENCE),
    ];
    let mut parameters = params([("theta1", t1), ("theta2", t2), ("theta", cert.theta)]);
    for (k, &delta) in deltas.iter().enumerate() {
        parameters.insert(format!("delta{k}"), delta);
        let name = format!("witness_outside_shrunk_disk_{k}");
        parameters.insert(format!("shrunk_theta{k}"), (1.0 - delta) * cert.theta);
        checks.push(match tightness_witness(t1, t2, delta)? {
            Some(w) => CheckRecord::new(name, w.signed_distance, Comparison::Above, 0.0).witnesses([w.point]),
            None => CheckRecord::new(name, 0.0, Comparison::Above, 0.0),
        });
    }
    Ok(ReportDocument::new("tightness", common.seed, parameters, checks))
}

pub fn rate_suite(args: &VerifyArgs, common: &Common) -> CliResult<ReportDocument> {
    if args.k == 0 || args.instances == 0 {
        return Err(CliError::Input("--k and --instances must be at least 1".into()));
    }
    let outcomes = rates::rate_instances(common.seed, args.instances, args.k)?;
    let max_ratio = outcomes.iter().map(|o| o.report.max_ratio).fold(0.0, f64::max);
    let violating = outcomes.iter().filter(|o| !o.report.holds).count();
    let increasing = outcomes.iter().filter(|o| !o.report.nonincreasing).count();
    let inclusions = rates::inclusion_instances(common.seed, args.instances)?;
    let worst = inclusions.iter().map(|r| r.residual).fold(0.0, f64::max);
    let max_iterations = inclusions.iter().map(|r| r.iterations).max().unwrap_or(0);
    let uncertified = inclusions.iter().filter(|r| !r.certified).count();

    let checks = vec![
        CheckRecord::new("max_bound_ratio", max_ratio, Comparison::AtMost, 1.0),
        CheckRecord::new("instances_violating_bound", violating as f64, Comparison::Equal, 0.0),
        CheckRecord::new("instances_with_increasing_residuals", increasing as f64, Comparison::Equal, 0.0),
        CheckRecord::new("max_inclusion_residual", worst, Comparison::AtMost, INCLUSION_TOLERANCE),
        CheckRecord::new("uncertified_inclusions", uncertified as f64, Comparison::Equal, 0.0),
        CheckRecord::new("max_inclusion_iterations", max_iterations as f64, Comparison::AtMost, 10_000.0),
    ];
    let parameters = params([("instances", args.instances as f64), ("k", args.k as f64)]);
    Ok(ReportDocument::new("rates", common.seed, parameters, checks))
}

pub fn build(args: &VerifyArgs, common: &Common) -> CliResult<ReportDocument> {
    if args.eps.is_nan() || args.eps <= 0.0 {
        return Err(CliError::Input("--eps must be positive".into()));
    }
    if args.probe == 0 {
        return Err(CliError::Input("--probe must be at least 1".into()));
    }
    match args.suite {
        Suite::Composition => composition(args, common),
        Suite::Dys => dys(args, common),
        Suite::Tightness => tightness(args, common),
        Suite::Rates => rate_suite(args, common),
    }
}

/// Writes the report; 0 if it passes, 1 otherwise.
pub fn run(args: &VerifyArgs, common: &Common) -> CliResult<i32> {
    let doc = build(args, common)?;
    json::emit(args.out.as_deref(), &json::to_string(&doc))?;
    if args.out.is_some() {
        for c in &doc.checks {
            println!("{} {} {}", if c.pass { "ok  " } else { "FAIL" }, c.name, json::format_float(c.observed));
        }
        println!("{} {}", doc.suite, if doc.pass { "pass" } else { "fail" });
    }
    Ok(if doc.pass { 0 } else { 1 })
}
