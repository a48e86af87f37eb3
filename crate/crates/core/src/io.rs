//! Run manifests, OBJ export and DOT graphs.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use crate::error::{invalid, Error, Result};

/// One named validation with its expected and observed values.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

/// Structured record of one command invocation.
///
/// Serialises with sorted keys and no timestamps, so identical inputs give
/// byte-identical output.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub results: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub tool_version: String,
}

impl RunManifest {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            parameters: BTreeMap::new(),
            results: BTreeMap::new(),
            checks: Vec::new(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn param(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.parameters.insert(key.to_string(), to_value(v));
        self
    }

    pub fn result(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.results.insert(key.to_string(), to_value(v));
        self
    }

    /// Records a check passing iff `expected == actual`.
    pub fn check_eq<T: Serialize + PartialEq>(&mut self, name: &str, expected: T, actual: T) -> bool {
        let pass = expected == actual;
        self.check(name, expected, actual, pass)
    }

    /// Records `|actual − expected| ≤ tol`.
    pub fn check_close(&mut self, name: &str, expected: f64, actual: f64, tol: f64) -> bool {
        let pass = (actual - expected).abs() <= tol;
        self.check(name, expected, actual, pass)
    }

    pub fn check(&mut self, name: &str, expected: impl Serialize, actual: impl Serialize, pass: bool) -> bool {
        self.checks.push(Check {
            name: name.to_string(),
            expected: to_value(expected),
            actual: to_value(actual),
            pass,
        });
        pass
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("manifest is serialisable");
        serde_json::to_string_pretty(&v).expect("value is serialisable")
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

/// Nine significant digits, printed in the shortest form that re-parses exactly.
fn fmt9(x: f64) -> String {
    let rounded: f64 = format!("{x:.8e}").parse().expect("formatted float parses");
    let s = format!("{rounded}");
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

/// OBJ text: `v` lines, then `l` lines for edges, then `f` lines; 1-based.
pub fn obj_string(points: &[[f64; 3]], edges: &[(usize, usize)], faces: &[Vec<usize>]) -> Result<String> {
    if points.iter().flatten().any(|x| !x.is_finite()) {
        return Err(invalid("non-finite coordinate"));
    }
    let n = points.len();
    if edges.iter().any(|&(a, b)| a >= n || b >= n) || faces.iter().flatten().any(|&v| v >= n) {
        return Err(invalid("index out of range"));
    }
    let mut s = String::new();
    for p in points {
        let _ = writeln!(s, "v {} {} {}", fmt9(p[0]), fmt9(p[1]), fmt9(p[2]));
    }
    for (a, b) in edges {
        let _ = writeln!(s, "l {} {}", a + 1, b + 1);
    }
    for f in faces {
        let idx: Vec<String> = f.iter().map(|v| (v + 1).to_string()).collect();
        let _ = writeln!(s, "f {}", idx.join(" "));
    }
    Ok(s)
}

pub fn export_obj(points: &[[f64; 3]], edges: &[(usize, usize)], faces: &[Vec<usize>], path: &Path) -> Result<()> {
    let s = obj_string(points, edges, faces)?;
    std::fs::write(path, s).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Vertex coordinates of an OBJ text.
pub fn parse_obj_vertices(text: &str) -> Result<Vec<[f64; 3]>> {
    text.lines()
        .filter(|l| l.starts_with("v "))
        .map(|l| {
            let xs: Vec<f64> = l[2..]
                .split_whitespace()
                .map(|t| t.parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| invalid(format!("bad vertex line {l:?}: {e}")))?;
            <[f64; 3]>::try_from(xs).map_err(|_| invalid(format!("vertex line needs three numbers: {l:?}")))
        })
        .collect()
}

/// Undirected graph in DOT syntax.
pub fn to_dot(name: &str, n_vertices: usize, edges: &[(usize, usize)]) -> String {
    let mut s = format!("graph {name} {{\n");
    for v in 0..n_vertices {
        let _ = writeln!(s, "  {v};");
    }
    for (a, b) in edges {
        let _ = writeln!(s, "  {a} -- {b};");
    }
    s.push_str("}\n");
    s
}

/// Stereographic projection of unit 4-vectors from `pole` onto the orthogonal 3-space.
pub fn stereographic(points: &[[f64; 4]], pole: [f64; 4]) -> Result<Vec<[f64; 3]>> {
    let norm = |v: [f64; 4]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let dot = |a: [f64; 4], b: [f64; 4]| (0..4).map(|i| a[i] * b[i]).sum::<f64>();
    let pn = norm(pole);
    if !(pn > 0.0) {
        return Err(invalid("pole must be non-zero"));
    }
    let e0 = pole.map(|x| x / pn);
    // Orthonormal basis of the complement by Gram–Schmidt on the standard basis.
    let mut basis: Vec<[f64; 4]> = Vec::new();
    for k in 0..4 {
        let mut v = [0.0; 4];
        v[k] = 1.0;
        for b in std::iter::once(e0).chain(basis.iter().copied()) {
            let d = dot(v, b);
            v = std::array::from_fn(|i| v[i] - d * b[i]);
        }
        if norm(v) > 1e-6 && basis.len() < 3 {
            let l = norm(v);
            basis.push(v.map(|x| x / l));
        }
    }
    points
        .iter()
        .map(|&p| {
            let s = 1.0 - dot(p, e0);
            if s.abs() < 1e-12 {
                return Err(invalid("a point coincides with the projection pole"));
            }
            Ok([dot(p, basis[0]) / s, dot(p, basis[1]) / s, dot(p, basis[2]) / s])
        })
        .collect()
}
