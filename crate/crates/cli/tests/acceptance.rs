//! Acceptance suite: one PASS/FAIL line per criterion, judged from the run
//! manifests the binary emits plus a few independent recomputations.

use std::f64::consts::PI;
use std::process::Command;
use std::time::Instant;

use serde_json::Value;

struct Run {
    code: i32,
    json: Value,
}

fn run(args: &[&str]) -> Result<Run, String> {
    let out =
        Command::new(env!("CARGO_BIN_EXE_e8chain")).args(args).output().map_err(|e| format!("spawn failed: {e}"))?;
    let code = out.status.code().unwrap_or(-1);
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    Ok(Run { code, json })
}

/// Runs a subcommand that must exit 0 with every check passing.
fn ok(args: &[&str]) -> Result<Value, String> {
    let r = run(args)?;
    let checks = r.json["checks"].as_array().ok_or_else(|| format!("{args:?}: no manifest"))?;
    if let Some(c) = checks.iter().find(|c| c["pass"] != Value::Bool(true)) {
        return Err(format!("{args:?}: check {} failed (expected {}, got {})", c["name"], c["expected"], c["actual"]));
    }
    if r.code != 0 {
        return Err(format!("{args:?}: exit {}", r.code));
    }
    Ok(r.json)
}

fn check<'a>(m: &'a Value, name: &str) -> Result<&'a Value, String> {
    m["checks"]
        .as_array()
        .and_then(|cs| cs.iter().find(|c| c["name"] == name))
        .ok_or_else(|| format!("manifest {} lacks check {name}", m["command"]))
}

/// Requires the named check to be present with the given actual value.
fn actual_is(m: &Value, name: &str, want: Value) -> Result<(), String> {
    let c = check(m, name)?;
    if c["actual"] == want && c["pass"] == Value::Bool(true) {
        Ok(())
    } else {
        Err(format!("{name}: want {want}, got {} (pass={})", c["actual"], c["pass"]))
    }
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn num(v: &Value) -> Result<f64, String> {
    v.as_f64().ok_or_else(|| format!("not a number: {v}"))
}

fn c1() -> Result<(), String> {
    let m = ok(&["roots", "--norm2", "2"])?;
    actual_is(&m, "count", 240.into())?;
    let vs = m["results"]["vectors"].as_array().ok_or("no vectors")?;
    ensure(vs.len() == 240, format!("{} vectors listed", vs.len()))
}

fn c2() -> Result<(), String> {
    let m = ok(&["deephole", "--shells", "4"])?;
    actual_is(&m, "counts", serde_json::json!([16, 128, 448, 1024]))?;
    actual_is(&m, "shell2_plus_shell4", 1152.into())
}

fn c3() -> Result<(), String> {
    let m = ok(&["decompose", "--verify"])?;
    actual_is(&m, "subsets", 10.into())?;
    actual_is(&m, "sizes", serde_json::json!(vec![24; 10]))?;
    actual_is(&m, "pairwise_disjoint", true.into())?;
    actual_is(&m, "union_equals_shell", true.into())
}

fn c4() -> Result<(), String> {
    let m = ok(&["hopf"])?;
    actual_is(&m, "single_point_per_subset", true.into())?;
    actual_is(&m, "cross_polytope", true.into())?;
    actual_is(&m, "inner_products", serde_json::json!(["-4", "0"]))?;
    // Each image is ±2eᵢ: exactly one nonzero coordinate of magnitude 2.
    let imgs = m["results"]["images"].as_array().ok_or("no images")?;
    ensure(imgs.len() == 10, "ten images")?;
    for row in imgs {
        let coords: Vec<&str> = row.as_array().ok_or("row")?[1..].iter().filter_map(Value::as_str).collect();
        let nz: Vec<&&str> = coords.iter().filter(|c| **c != "0").collect();
        ensure(nz.len() == 1 && (*nz[0] == "2" || *nz[0] == "-2"), format!("image {row} is not ±2e_i"))?;
    }
    Ok(())
}

fn c5() -> Result<(), String> {
    for (b, c, want) in [("2", "1", [14, 21, 7]), ("3", "1", [26, 39, 13]), ("5", "0", [50, 75, 25])] {
        let m = ok(&["torusmap", "--b", b, "--c", c])?;
        actual_is(&m, "counts", serde_json::json!(want))?;
    }
    let m = ok(&["torusmap", "--b", "2", "--c", "1", "--check-pg", "2"])?;
    actual_is(&m, "pg_isomorphic", true.into())
}

fn c6() -> Result<(), String> {
    let m = ok(&["torusmap", "--b", "2", "--c", "1", "--pipeline240"])?;
    actual_is(&m, "handle_cut_counts", serde_json::json!([14, 18, 6]))?;
    actual_is(&m, "refined_degrees", serde_json::json!({"4": 6, "6": 8}))?;
    actual_is(&m, "dual_counts", serde_json::json!([24, 36, 14]))?;
    actual_is(&m, "dual_is_truncated_octahedron", true.into())
}

fn c7() -> Result<(), String> {
    for n in 0..3u32 {
        let s = 1usize << n;
        let m = ok(&["polyhedron", "--n", &n.to_string(), "--flip"])?;
        actual_is(&m, "curvature_sum", 12.into())?;
        let total = num(&check(&m, "face_total")?["actual"])? as usize;
        ensure(total == 2 + 12 * s, format!("level {n}: face total {total}"))?;
        actual_is(&m, "q_matching_size", (12 * s).into())?;
        actual_is(&m, "q_matching_perfect", true.into())?;
        match n {
            0 => actual_is(&m, "flip_verdict", "degenerate".into())?,
            2 => actual_is(&m, "flip_verdict", "type_unchanged".into())?,
            _ => {}
        }
    }
    Ok(())
}

fn c8() -> Result<(), String> {
    for (n, q, v) in [("0", "10", 240), ("1", "12", 576), ("2", "12", 1152)] {
        let m = ok(&["polytope", "--lift", n, q])?;
        actual_is(&m, "vertices", v.into())?;
        actual_is(&m, "edges", (2 * v).into())?;
        actual_is(&m, "four_regular", true.into())?;
        actual_is(&m, "connected", true.into())?;
    }
    Ok(())
}

fn c9() -> Result<(), String> {
    let start = Instant::now();
    let m = ok(&["polytope", "--geom240", "--tol", "1e-9"])?;
    ensure(start.elapsed().as_secs() < 300, "search took over five minutes")?;
    actual_is(&m, "vertices", 240.into())?;
    actual_is(&m, "four_regular", true.into())?;
    actual_is(&m, "connected", true.into())?;
    check(&m, "unit_norms").and_then(|c| ensure(num(&c["actual"])? <= 1e-9, "unit norms"))?;
    ensure(num(&m["results"]["min_chord"])? > 0.0, "positive minimal chord")
}

fn c10() -> Result<(), String> {
    let table = [
        ("0001", 24, Some(96)),
        ("0010", 96, Some(288)),
        ("1011", 576, None),
        ("0111", 576, None),
        ("1111", 1152, Some(2304)),
    ];
    for (label, v, e) in table {
        let elements = label == "0001";
        let mut args = vec!["f4", "--label", label];
        if elements {
            args.push("--elements");
        }
        let m = ok(&args)?;
        actual_is(&m, "vertices", v.into())?;
        if let Some(e) = e {
            actual_is(&m, "edges", e.into())?;
        }
        if elements {
            actual_is(&m, "faces", 96.into())?;
            actual_is(&m, "cells", 24.into())?;
        }
    }
    Ok(())
}

fn c11() -> Result<(), String> {
    let m = ok(&["screwcheck"])?;
    let terms = m["results"]["relations"]["terms"].as_array().ok_or("no terms")?;
    let got: Vec<(String, String)> = terms
        .iter()
        .map(|t| {
            (
                format!("{}^{}", t["axis"].as_str().unwrap_or(""), t["power"]),
                t["net_turn"].as_str().unwrap_or("").to_string(),
            )
        })
        .collect();
    let want = [("30/11^3", "1/10"), ("40/11^4", "1/10"), ("40/9^4", "-1/10")];
    for (k, v) in want {
        ensure(got.iter().any(|(a, b)| a == k && b == v), format!("missing net turn {k} ≡ {v}: {got:?}"))?;
    }
    actual_is(&m, "relations_consistent", true.into())?;
    for ax in ["30/11", "40/9", "40/11"] {
        actual_is(&m, &format!("gosset_{ax}"), ax.into())?;
    }
    Ok(())
}

fn c12() -> Result<(), String> {
    let m = ok(&["rod", "--L", "30", "--d", "11"])?;
    let t = &m["results"]["tetrahelix"];
    let step = num(&t["step_angle_deg"])?;
    ensure((step - 132.0).abs() < 1e-12, format!("step angle {step}"))?;
    let oracle = (-2.0f64 / 3.0).acos().to_degrees();
    let dev = num(&t["deviation_deg"])?;
    ensure((dev - (step - oracle).abs()).abs() < 1e-9, "deviation disagrees with arccos(-2/3)")?;
    ensure(dev < 0.2 && (dev - 0.1897).abs() < 1e-4, format!("deviation {dev}"))
}

fn c13() -> Result<(), String> {
    let m = ok(&["t0"])?;
    let t0 = num(&m["results"]["t0"])?;
    ensure((t0 - 1.199678640).abs() < 1e-9, format!("t0 = {t0}"))?;
    ensure((1.0 / t0.tanh() - t0).abs() < 1e-12, "coth residual")?;
    ensure((2.399..=2.400).contains(&(2.0 * t0)), "2 t0 outside [2.399, 2.400]")?;
    let ring = 2.0 * t0 / t0.cosh();
    ensure((ring - 1.325487).abs() < 1e-6, format!("ring ratio {ring}"))?;
    let sweep = num(&m["results"]["critical_ratio_sweep"])?;
    ensure((sweep - ring).abs() < 1e-6, format!("sweep transition {sweep} vs {ring}"))
}

fn c14() -> Result<(), String> {
    for alpha in [0.0, PI / 4.0, PI / 2.0] {
        let a = alpha.to_string();
        let m = ok(&["minsurf", "--alpha", &a, "--grid", "128"])?;
        ensure(num(&check(&m, "mean_curvature")?["actual"])? < 1e-3, "max |H|")?;
        ensure(num(&check(&m, "metric_invariance")?["actual"])? < 1e-8, "metric spread")?;
    }
    let m = ok(&["weier", "--preset", "catenoid", "--alpha", "0", "--grid", "128"])?;
    let d = num(&m["results"]["registration"]["max_distance"])?;
    ensure(d < 1e-6, format!("registered distance {d}"))
}

fn c15() -> Result<(), String> {
    let t0 = num(&ok(&["t0"])?["results"]["t0"])?;
    let inside = ok(&["gaussband", "--umax", &(0.9 * t0).to_string()])?;
    ensure(inside["results"]["band"]["pass"] == Value::Bool(true), "0.9 t0 band should pass")?;
    let outside = ok(&["gaussband", "--umax", &(1.5 * t0).to_string()])?;
    ensure(outside["results"]["band"]["pass"] == Value::Bool(false), "1.5 t0 band should fail")?;
    let u = num(&outside["results"]["band"]["crossing_u"])?;
    let grid_step = 2.0 * 1.5 * t0 / 127.0;
    ensure((u - t0).abs() <= grid_step, format!("crossing at {u}, t0 = {t0}"))
}

type Criterion = fn() -> Result<(), String>;

fn main() {
    let criteria: [(&str, Criterion); 15] = [
        ("E8 first shell has 240 vectors", c1),
        ("deep-hole shells 16/128/448/1024 and 1152", c2),
        ("ten disjoint 24-sets cover the roots", c3),
        ("Hopf images form a 5D cross-polytope", c4),
        ("torus map counts and Heawood graph", c5),
        ("handle cut, refinement, truncated octahedron", c6),
        ("loaded polyhedra: Euler, matchings, flips", c7),
        ("cover lifts 240/576/1152", c8),
        ("geometric {240}", c9),
        ("F4 orbit table", c10),
        ("screw relations and Gosset tuples", c11),
        ("30/11 axis against the tetrahelix", c12),
        ("coth fixed point and catenoid transition", c13),
        ("associated family and Weierstrass data", c14),
        ("Gauss-map band", c15),
    ];
    let mut failed = 0;
    for (i, (what, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match f() {
            Ok(()) => println!("PASS {:>2} {what} ({:.1}s)", i + 1, start.elapsed().as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {what}: {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
