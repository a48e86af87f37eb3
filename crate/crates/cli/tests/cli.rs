use std::process::{Command, Output};

use serde_json::Value;

fn e8chain(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e8chain")).args(args).output().expect("binary runs")
}

fn manifest(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON manifest")
}

#[test]
fn roots_manifest_has_count_check() {
    let out = e8chain(&["roots", "--norm2", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let m = manifest(&out);
    assert_eq!(m["command"], "roots");
    let c = m["checks"].as_array().unwrap().iter().find(|c| c["name"] == "count").unwrap();
    assert_eq!(c["expected"], 240);
    assert_eq!(c["actual"], 240);
    assert_eq!(c["pass"], true);
    assert!(m["tool_version"].is_string());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(e8chain(&["roots", "--norm2", "3"]).status.code(), Some(2));
    assert_eq!(e8chain(&["roots", "--bogus"]).status.code(), Some(2));
    assert_eq!(e8chain(&["nosuchcommand"]).status.code(), Some(2));
    assert_eq!(e8chain(&["f4", "--label", "01x1"]).status.code(), Some(2));
    assert_eq!(e8chain(&["polytope"]).status.code(), Some(2));
    assert_eq!(e8chain(&["weier", "--alpha", "3"]).status.code(), Some(2));
    assert_eq!(e8chain(&["gaussband", "--umax", "0"]).status.code(), Some(2));
}

#[test]
fn screwcheck_passes() {
    let out = e8chain(&["screwcheck"]);
    assert_eq!(out.status.code(), Some(0));
    let m = manifest(&out);
    let relation_checks =
        m["checks"].as_array().unwrap().iter().filter(|c| c["name"].as_str().unwrap().starts_with("net_turn")).count();
    assert!(relation_checks >= 3);
}

#[test]
fn output_is_deterministic() {
    for args in [&["decompose"][..], &["polytope", "--lift", "0", "10"], &["t0"], &["rod", "--L", "40", "--d", "9"]] {
        let a = e8chain(args);
        let b = e8chain(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn csv_format_prints_table() {
    let out = e8chain(&["--format", "csv", "roots", "--norm2", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x1,x2,x3,x4,x5,x6,x7,x8"));
    assert_eq!(lines.count(), 240);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t0.json");
    let out = e8chain(&["t0", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let m: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(m["command"], "t0");
}

#[test]
fn rod_obj_has_polyline() {
    let dir = tempfile::tempdir().unwrap();
    let obj = dir.path().join("rod.obj");
    let csv = dir.path().join("rod.csv");
    let out = e8chain(&[
        "rod",
        "--L",
        "30",
        "--d",
        "11",
        "--steps",
        "30",
        "--obj",
        obj.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&obj).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 30);
    assert_eq!(text.lines().filter(|l| l.starts_with("l ")).count(), 29);
    let points = e8chain::io::parse_obj_vertices(&text).unwrap();
    let rows: Vec<Vec<f64>> = std::fs::read_to_string(&csv)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| l.split(',').skip(2).map(|x| x.parse().unwrap()).collect())
        .collect();
    for (p, r) in points.iter().zip(&rows) {
        for k in 0..3 {
            assert!((p[k] - r[k]).abs() <= 1e-8 * r[k].abs().max(1.0));
        }
    }
}

#[test]
fn two_strand_rod_has_two_polylines() {
    let dir = tempfile::tempdir().unwrap();
    let obj = dir.path().join("rod.obj");
    e8chain(&["rod", "--L", "40", "--d", "11", "--strands", "2", "--steps", "10", "--obj", obj.to_str().unwrap()]);
    let text = std::fs::read_to_string(&obj).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 20);
    assert_eq!(text.lines().filter(|l| l.starts_with("l ")).count(), 18);
}

#[test]
fn mesh_and_polytope_exports() {
    let dir = tempfile::tempdir().unwrap();
    let mesh = dir.path().join("m.obj");
    assert_eq!(
        e8chain(&["minsurf", "--alpha", "0.5", "--grid", "64", "--obj", mesh.to_str().unwrap()]).status.code(),
        Some(0)
    );
    let text = std::fs::read_to_string(&mesh).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 4096);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 3969);

    let poly = dir.path().join("p.obj");
    let dot = dir.path().join("p.dot");
    let out = e8chain(&["polytope", "--geom240", "--obj", poly.to_str().unwrap(), "--dot", dot.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&poly).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("l ")).count(), 480);
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("graph"));
}

#[test]
fn polyhedron_obj_levels() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("to.obj");
    assert_eq!(e8chain(&["polyhedron", "--n", "0", "--obj", p.to_str().unwrap()]).status.code(), Some(0));
    let text = std::fs::read_to_string(&p).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 24);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 14);
    assert_eq!(e8chain(&["polyhedron", "--n", "2", "--obj", p.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn catenoid_past_critical_ratio_has_no_solution() {
    let m = manifest(&e8chain(&["catenoid", "--r", "1", "--h", "1.5"]));
    assert_eq!(m["results"]["solutions"].as_array().unwrap().len(), 0);
    let m = manifest(&e8chain(&["catenoid", "--r", "1", "--h", "1"]));
    assert_eq!(m["results"]["solutions"].as_array().unwrap().len(), 2);
}

#[test]
fn pg3_comparison_is_reported_not_asserted() {
    let out = e8chain(&["torusmap", "--b", "3", "--c", "1", "--check-pg", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let m = manifest(&out);
    assert_eq!(m["results"]["pg_isomorphic"], false);
    assert!(m["results"]["pg_note"].is_string());
}

#[test]
fn screw_non_symmetry_is_reported() {
    let m = manifest(&e8chain(&["polytope", "--screw", "132", "36"]));
    assert_eq!(m["results"]["screw"]["is_symmetry"], false);
}
