use std::fmt::Write;

use srg_core::iteration::{estimate_fixed_point, iterate, residual_rate_check, IterationTrace, RateReport};
use srg_core::operators::{averaged_from_contraction, dys_assemble, scaled_rotation, Vec2};
use srg_core::srg::{tight_composition_coeff, AveragedClass};
use srg_core::ComplexPoint;

use crate::args::{Common, IterateArgs, OperatorKind};
use crate::error::{CliError, CliResult};
use crate::json::{self, format_float};

pub struct IterateOutput {
    pub csv: String,
    pub trace: IterationTrace,
    pub report: RateReport,
}

fn complex(v: &[f64], flag: &str) -> CliResult<ComplexPoint> {
    match v {
        &[re, im] if re.is_finite() && im.is_finite() => Ok(ComplexPoint::new(re, im)),
        _ => Err(CliError::Input(format!("--{flag} takes two finite numbers separated by a comma"))),
    }
}

fn trace_for<T: Fn(Vec2) -> Vec2>(t: T, x0: Vec2, theta: f64, k: usize) -> CliResult<(IterationTrace, RateReport)> {
    let (x_star, slack) = estimate_fixed_point(&t, x0, 10 * k)?;
    let trace = iterate(&t, x0, k)?.with_theta(theta).with_fixed_point(x_star, slack);
    let report = residual_rate_check(&trace)?;
    Ok((trace, report))
}

/// CSV rows `k,x,y,residual,bound`. Rows stop after the first zero residual,
/// since every later row would repeat it.
pub fn to_csv(trace: &IterationTrace, report: &RateReport) -> String {
    let mut s = String::from("k,x,y,residual,bound\n");
    for (k, (x, &r)) in trace.iterates.iter().zip(&trace.residuals).enumerate() {
        let _ = writeln!(s, "{k},{},{},{},{}", format_float(x[0]), format_float(x[1]), format_float(r), format_float(report.bound(k)));
        if r == 0.0 {
            break;
        }
    }
    s
}

pub fn build(args: &IterateArgs) -> CliResult<IterateOutput> {
    if args.k == 0 {
        return Err(CliError::Input("--k must be at least 1".into()));
    }
    let x0 = complex(&args.x0, "x0")?;
    let x0 = [x0.re, x0.im];
    let (trace, report) = match args.operator {
        OperatorKind::Identity => {
            let theta = AveragedClass::new(args.theta)?.theta();
            trace_for(|x| x, x0, theta, args.k)?
        }
        OperatorKind::Composition => {
            let t1 = args.theta1.ok_or_else(|| CliError::missing("theta1"))?;
            let t2 = args.theta2.ok_or_else(|| CliError::missing("theta2"))?;
            let m1 = averaged_from_contraction(t1, ComplexPoint::from_polar(1.0, args.phi1))?;
            let m2 = averaged_from_contraction(t2, ComplexPoint::from_polar(1.0, args.phi2))?;
            let m = m1 * m2;
            trace_for(|x| m.apply(x), x0, tight_composition_coeff(t1, t2)?, args.k)?
        }
        OperatorKind::Dys => {
            let beta = args.beta.ok_or_else(|| CliError::missing("beta"))?;
            let gamma = args.gamma.ok_or_else(|| CliError::missing("gamma"))?;
            let a = scaled_rotation(complex(&args.a, "a")?);
            let b = scaled_rotation(complex(&args.b, "b")?);
            let c = scaled_rotation(complex(&args.c, "c")?);
            let t = dys_assemble(&a, &b, &c, beta, gamma)?;
            trace_for(|x| t.apply(x), x0, t.class().averagedness(), args.k)?
        }
    };
    Ok(IterateOutput { csv: to_csv(&trace, &report), trace, report })
}

pub fn summary(report: &RateReport) -> String {
    let radius = report.initial_distance + report.slack;
    format!(
        "theta {}\nmax_scaled_residual {}\nbound_constant {}\nslack {}\nratio {}\nholds {}\n",
        format_float(report.theta),
        format_float(report.max_scaled_residual),
        format_float(radius * radius),
        format_float(report.slack),
        format_float(report.max_ratio),
        report.holds,
    )
}

/// 0 when the bound holds at every step, 1 otherwise.
pub fn run(args: &IterateArgs, _common: &Common) -> CliResult<i32> {
    let out = build(args)?;
    json::emit(args.out.as_deref(), &out.csv)?;
    let text = summary(&out.report);
    if args.out.is_some() {
        print!("{text}");
    } else {
        eprint!("{text}");
    }
    Ok(if out.report.holds { 0 } else { 1 })
}
