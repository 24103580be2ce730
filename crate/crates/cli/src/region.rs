use srg_core::geometry::f2_eval;
use srg_core::srg::{composition_region, dys_region, tight_composition_coeff, DysClass};
use srg_core::tolerances::CONTOUR_RESIDUAL;
use srg_core::DiskRegion;

use crate::args::{Common, RegionArgs, RegionKind};
use crate::documents::{pair, params, Circle, RegionDocument, RegionKindTag, RegionMetadata, TOOL_VERSION};
use crate::error::{CliError, CliResult};
use crate::{json, svg};

fn circle(disk: &DiskRegion) -> Circle {
    Circle { center: [disk.center, 0.0], radius: disk.radius }
}

fn disk_document(disk: DiskRegion, parameters: [(&str, f64); 3], resolution: usize, common: &Common) -> CliResult<RegionDocument> {
    let boundary = disk.boundary(resolution)?;
    let max_boundary_residual = boundary
        .points()
        .iter()
        .map(|&z| disk.signed_distance(z).abs())
        .fold(0.0, f64::max);
    Ok(RegionDocument {
        kind: RegionKindTag::Disk,
        parameters: params(parameters),
        disk: Some(circle(&disk)),
        tight_circle: circle(&disk),
        boundary: boundary.points().iter().copied().map(pair).collect(),
        metadata: RegionMetadata {
            resolution,
            tool_version: TOOL_VERSION.to_owned(),
            boundary_tolerance: common.tol_analytic,
            max_boundary_residual,
            seed: common.seed,
        },
    })
}

pub fn build(args: &RegionArgs, common: &Common) -> CliResult<RegionDocument> {
    let need = |v: Option<f64>, flag: &str| v.ok_or_else(|| CliError::missing(flag));
    match args.kind {
        RegionKind::Disk => {
            let theta = need(args.theta, "theta")?;
            if args.resolution < 3 {
                return Err(CliError::Input("resolution must be at least 3".into()));
            }
            let disk = DiskRegion::averaged(theta)?;
            disk_document(disk, [("theta", theta), ("center", disk.center), ("radius", disk.radius)], args.resolution, common)
        }
        RegionKind::Dys => {
            let (beta, gamma) = (need(args.beta, "beta")?, need(args.gamma, "gamma")?);
            if args.resolution < 3 {
                return Err(CliError::Input("resolution must be at least 3".into()));
            }
            let cls = DysClass::new(beta, gamma)?;
            disk_document(dys_region(&cls), [("beta", beta), ("gamma", gamma), ("theta", cls.averagedness())], args.resolution, common)
        }
        RegionKind::Composition => {
            let (t1, t2) = (need(args.theta1, "theta1")?, need(args.theta2, "theta2")?);
            let theta = tight_composition_coeff(t1, t2)?;
            let region = composition_region(t1, t2, args.resolution)?;
            let points = region.boundary().points();
            let max_boundary_residual = points.iter().map(|&z| f2_eval(t1, t2, z).abs()).fold(0.0, f64::max);
            Ok(RegionDocument {
                kind: RegionKindTag::CompositionOval,
                parameters: params([("theta1", t1), ("theta2", t2), ("theta", theta)]),
                disk: None,
                tight_circle: circle(&DiskRegion::averaged(theta)?),
                boundary: points.iter().copied().map(pair).collect(),
                metadata: RegionMetadata {
                    resolution: args.resolution,
                    tool_version: TOOL_VERSION.to_owned(),
                    boundary_tolerance: CONTOUR_RESIDUAL,
                    max_boundary_residual,
                    seed: common.seed,
                },
            })
        }
    }
}

pub fn run(args: &RegionArgs, common: &Common) -> CliResult<i32> {
    let doc = build(args, common)?;
    json::emit(args.out.as_deref(), &json::to_string(&doc))?;
    if let Some(path) = &args.svg {
        std::fs::write(path, svg::render(&doc)).map_err(|e| CliError::io(path, e))?;
    }
    Ok(0)
}
