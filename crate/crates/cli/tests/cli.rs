use std::path::Path;
use std::process::{Command, Output};

use srg_cli::documents::{RegionDocument, RegionKindTag, ReportDocument};
use srg_cli::json;

fn srgcli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srgcli")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path_arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn coeff_examples() {
    let out = srgcli(&["coeff", "--theta1", "0.5", "--theta2", "0.5"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("theta 0.666666666667\n"), "{}", stdout(&out));

    let out = srgcli(&["coeff", "--theta1", "0.25", "--theta2", "0.75"]);
    assert!(stdout(&out).starts_with("theta 0.769230769231\n"));

    let out = srgcli(&["coeff", "--theta1", "0.25", "--theta2", "0.75", "--json"]);
    let doc: std::collections::BTreeMap<String, f64> = json::from_str(&stdout(&out)).unwrap();
    assert!((doc["theta"] - 0.625 / 0.8125).abs() < 1e-15);

    let out = srgcli(&["coeff", "--theta1", "1.0", "--theta2", "0.5"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("theta must lie in the open interval (0,1)"));
}

#[test]
fn bad_flags_and_help() {
    assert_eq!(code(&srgcli(&["coeff", "--theta1", "abc", "--theta2", "0.5"])), 2);
    assert_eq!(code(&srgcli(&["verify", "nonsense"])), 2);
    assert_eq!(code(&srgcli(&["region", "--kind", "composition", "--theta1", "0.5"])), 2);
    assert_eq!(code(&srgcli(&["verify", "dys", "--beta", "1", "--gamma", "2.5"])), 2);
    assert_eq!(code(&srgcli(&["--help"])), 0);
}

#[test]
fn region_examples() {
    let out = srgcli(&["region", "--kind", "composition", "--theta1", "0.5", "--theta2", "0.5"]);
    assert_eq!(code(&out), 0);
    let doc: RegionDocument = json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.kind, RegionKindTag::CompositionOval);
    assert!(doc.metadata.max_boundary_residual < doc.metadata.boundary_tolerance);
    for p in &doc.boundary {
        let (r, phi) = (p[0].hypot(p[1]), p[1].atan2(p[0]));
        assert!((r - 0.5 * (1.0 + phi.cos())).abs() < 1e-6 || r < 1e-9, "{p:?}");
    }

    let out = srgcli(&["region", "--kind", "dys", "--beta", "1", "--gamma", "1.3"]);
    let doc: RegionDocument = json::from_str(&stdout(&out)).unwrap();
    let disk = doc.disk.unwrap();
    assert!((disk.radius - 2.0 / 2.7).abs() < 1e-15 && (disk.center[0] - 0.7 / 2.7).abs() < 1e-15);

    let out = srgcli(&["region", "--kind", "disk", "--theta", "0.25"]);
    let doc: RegionDocument = json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.disk.unwrap().center, [0.75, 0.0]);
    assert_eq!(doc.disk.unwrap().radius, 0.25);
    assert!(doc.metadata.max_boundary_residual <= doc.metadata.boundary_tolerance);
}

#[test]
fn region_round_trips_bit_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    for kind in [["--kind", "composition", "--theta1", "0.6667", "--theta2", "0.25"], ["--kind", "dys", "--beta", "2", "--gamma", "3.9"]] {
        let mut args = vec!["region", "--resolution", "256", "--out", path_arg(&path)];
        args.extend(kind);
        assert_eq!(code(&srgcli(&args)), 0);
        let doc: RegionDocument = json::read(&path).unwrap();
        let rewritten = json::to_string(&doc);
        assert_eq!(rewritten, std::fs::read_to_string(&path).unwrap());
        let again: RegionDocument = json::from_str(&rewritten).unwrap();
        for (a, b) in doc.boundary.iter().zip(&again.boundary) {
            assert_eq!(a[0].to_bits(), b[0].to_bits());
            assert_eq!(a[1].to_bits(), b[1].to_bits());
        }
    }
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name);
    let region = |json: &Path, svg: &Path| {
        srgcli(&[
            "region", "--kind", "composition", "--theta1", "0.75", "--theta2", "0.75", "--out", path_arg(json), "--svg",
            path_arg(svg),
        ])
    };
    assert_eq!(code(&region(&p("a.json"), &p("a.svg"))), 0);
    assert_eq!(code(&region(&p("b.json"), &p("b.svg"))), 0);
    assert_eq!(std::fs::read(p("a.json")).unwrap(), std::fs::read(p("b.json")).unwrap());
    assert_eq!(std::fs::read(p("a.svg")).unwrap(), std::fs::read(p("b.svg")).unwrap());

    let verify = |out: &Path, seed: &str| {
        srgcli(&["verify", "composition", "--theta1", "0.3", "--theta2", "0.6", "--n", "150000", "--seed", seed, "--out", path_arg(out)])
    };
    verify(&p("v1.json"), "9");
    verify(&p("v2.json"), "9");
    verify(&p("v3.json"), "10");
    let v1 = std::fs::read(p("v1.json")).unwrap();
    assert_eq!(v1, std::fs::read(p("v2.json")).unwrap());
    assert_ne!(v1, std::fs::read(p("v3.json")).unwrap());

    let iterate = |out: &Path| srgcli(&["iterate", "--operator", "composition", "--theta1", "0.3", "--theta2", "0.9", "--k", "300", "--out", path_arg(out)]);
    iterate(&p("i1.csv"));
    iterate(&p("i2.csv"));
    assert_eq!(std::fs::read(p("i1.csv")).unwrap(), std::fs::read(p("i2.csv")).unwrap());
}

#[test]
fn svg_follows_fixed_style() {
    let dir = tempfile::tempdir().unwrap();
    let (json_path, svg_path) = (dir.path().join("r.json"), dir.path().join("r.svg"));
    let out = srgcli(&[
        "region", "--kind", "composition", "--theta1", "0.25", "--theta2", "0.75", "--out", path_arg(&json_path), "--svg",
        path_arg(&svg_path),
    ]);
    assert_eq!(code(&out), 0);
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.lines().nth(1).unwrap().contains("srgcli"));
    assert!(svg.contains("width=\"800\" height=\"800\""));
    assert_eq!(svg.matches("<polygon").count(), 1);
    assert_eq!(svg.matches("<line").count(), 2);
    assert!(svg.contains("stroke-dasharray"));
    assert!(svg.trim_end().ends_with("</svg>"));
}

#[test]
fn io_failures_exit_3() {
    let out = srgcli(&["region", "--kind", "disk", "--theta", "0.5", "--out", "/nonexistent-dir/x.json"]);
    assert_eq!(code(&out), 3);
    let out = srgcli(&["iterate", "--operator", "identity", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn failed_verification_still_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fail.json");
    let out = srgcli(&["verify", "dys", "--beta", "1", "--gamma", "1", "--n", "1000", "--eps", "0.001", "--out", path_arg(&path)]);
    assert_eq!(code(&out), 1);
    let report: ReportDocument = json::read(&path).unwrap();
    assert!(!report.pass);
    assert!(!report.check("coverage_gap").unwrap().pass);
    assert!(report.check("containment_violations").unwrap().pass);
    assert_eq!(report.pass, report.checks.iter().all(|c| c.pass));
}

#[test]
fn tightness_suite_finds_witness() {
    let out = srgcli(&["verify", "tightness", "--theta1", "0.5", "--theta2", "0.5", "--delta", "0.05"]);
    assert_eq!(code(&out), 0);
    let report: ReportDocument = json::from_str(&stdout(&out)).unwrap();
    let w = report.check("witness_outside_shrunk_disk_0").unwrap().witnesses[0];
    let shrunk = 0.95 * 2.0 / 3.0;
    assert!((w[0] - (1.0 - shrunk)).hypot(w[1]) > shrunk);
}

#[test]
fn iterate_examples() {
    let out = srgcli(&["iterate", "--operator", "identity", "--k", "50"]);
    assert_eq!(code(&out), 0);
    let csv = stdout(&out);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("k,x,y,residual,bound"));
    for row in lines {
        assert_eq!(row.split(',').nth(3).unwrap().parse::<f64>().unwrap(), 0.0);
    }

    let out = srgcli(&["iterate", "--operator", "dys", "--beta", "1", "--gamma", "1", "--x0", "2,-1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 2);

    let out = srgcli(&["iterate", "--operator", "composition", "--theta1", "0.5", "--theta2", "0.5", "--k", "1000"]);
    assert_eq!(code(&out), 0);
    let summary = String::from_utf8(out.stderr.clone()).unwrap();
    let field = |name: &str| -> f64 {
        summary.lines().find_map(|l| l.strip_prefix(name)).unwrap().trim().parse().unwrap()
    };
    assert!(field("max_scaled_residual ") <= field("bound_constant "));
    assert!(summary.contains("holds true"));
    let csv = stdout(&out);
    assert!(csv.ends_with('\n') && !csv.contains('\r'));
    for row in csv.lines().skip(1) {
        let cols: Vec<f64> = row.split(',').skip(3).map(|c| c.parse().unwrap()).collect();
        assert!(cols[0] * cols[0] <= cols[1] * (1.0 + 1e-12));
    }
}
