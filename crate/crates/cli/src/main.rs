//! `e8chain`: one binary, one subcommand per construction, each emitting a
//! run manifest. Exit status 0 means every check passed, 1 a failed check or
//! construction, 2 a usage error.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use e8chain::RunManifest;

#[derive(Parser, Debug)]
#[command(name = "e8chain", version, about = "E8 lattice to helicoidal rods: constructions and checks")]
struct Cli {
    /// Output format: the full manifest as JSON, or the primary table as CSV.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Override the tolerance of floating-point checks.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Vectors of one E8 shell.
    Roots {
        #[arg(long)]
        norm2: i64,
    },
    /// Lattice points around the deep hole (1,0,…,0).
    Deephole {
        #[arg(long, default_value_t = 4)]
        shells: usize,
    },
    /// Quaternionic decomposition of the 240 roots into ten 24-sets.
    Decompose {
        /// Also compare the union with an independent shell enumeration.
        #[arg(long)]
        verify: bool,
    },
    /// Hopf images of the ten 24-sets.
    Hopf,
    /// Hexagonal torus map {6,3}_{b,c}.
    Torusmap {
        #[arg(long)]
        b: i64,
        #[arg(long)]
        c: i64,
        /// Compare the skeleton with the incidence graph of PG(2,Q).
        #[arg(long = "check-pg")]
        check_pg: Option<u32>,
        /// Run handle cut, refinement and dualisation, then lift to 240 vertices.
        #[arg(long)]
        pipeline240: bool,
        /// Write the skeleton in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Loaded polyhedron of level N.
    Polyhedron {
        #[arg(long)]
        n: u8,
        /// List all Q-matchings (up to 1000).
        #[arg(long)]
        matchings: bool,
        /// Swap every hexagon's triple to the other handedness.
        #[arg(long)]
        flip: bool,
        /// Report the dual triangulation's degree profile.
        #[arg(long)]
        dual: bool,
        /// Unit-edge OBJ of the convex embedding (levels 0 and 1).
        #[arg(long)]
        obj: Option<PathBuf>,
    },
    /// Four-dimensional polytopes: voltage covers or the geometric {240}.
    Polytope {
        /// Cover of level N with fibre Z_Q.
        #[arg(long, num_args = 2, value_names = ["N", "Q"])]
        lift: Option<Vec<u64>>,
        /// Build 2I ∪ σ·2I.
        #[arg(long)]
        geom240: bool,
        /// Probe the double rotation [R_wx(A°), R_yz(B°)] on the geometric {240}.
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
        screw: Option<Vec<f64>>,
        /// Compare the level-0 cover with the geometric {240} (girth, spectrum) and the latter with its mirror image.
        #[arg(long)]
        compare: bool,
        /// OBJ of the stereographic projection (geometric {240} only).
        #[arg(long)]
        obj: Option<PathBuf>,
        /// DOT graph of the result.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// W(F4) orbit of a Wythoff point.
    F4 {
        /// Dynkin label, e.g. 0001.
        #[arg(long)]
        label: String,
        /// Count 2-faces and cells by convex hull (orbits of at most 96 points).
        #[arg(long)]
        elements: bool,
    },
    /// Screw axis L/d from Gosset parameters.
    Screw {
        #[arg(long = "In")]
        i_n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        g1: u64,
        #[arg(long)]
        g2: u64,
    },
    /// Generating relations between the 30/11, 40/11 and 40/9 axes.
    Screwcheck,
    /// Helical rod of a screw axis.
    Rod {
        #[arg(long = "L")]
        l: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 1.0)]
        r: f64,
        #[arg(long, default_value_t = 30)]
        steps: usize,
        #[arg(long, default_value_t = 1)]
        strands: usize,
        /// Rise per step; defaults to 2.4·r/L.
        #[arg(long)]
        c: Option<f64>,
        /// Point cloud with polylines.
        #[arg(long)]
        obj: Option<PathBuf>,
        /// Points as CSV (strand, step, x, y, z).
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Spheres-and-equator cover model.
    Cover {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
    },
    /// Root of coth t = t and the catenoid critical ratios.
    T0,
    /// Catenoids spanning two coaxial rings.
    Catenoid {
        #[arg(long)]
        r: f64,
        #[arg(long)]
        h: f64,
    },
    /// Member α (radians) of the catenoid–helicoid associated family.
    Minsurf {
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        #[arg(long, default_value_t = 128)]
        grid: usize,
        #[arg(long)]
        obj: Option<PathBuf>,
    },
    /// Weierstrass representation with (f, g) = (e^{−iα}e^{−z}, e^{z}).
    Weier {
        #[arg(long, value_enum, default_value_t = commands::Preset::Catenoid)]
        preset: commands::Preset,
        /// Radians; defaults to 0 for the catenoid and π/2 for the helicoid.
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value_t = 128)]
        grid: usize,
        #[arg(long)]
        obj: Option<PathBuf>,
    },
    /// Gauss-map band test on the catenoid |u| ≤ U.
    Gaussband {
        #[arg(long)]
        umax: f64,
        #[arg(long, default_value_t = 128)]
        grid: usize,
    },
}

/// Result of one subcommand: its manifest and the table printed in CSV mode.
pub struct Outcome {
    pub manifest: RunManifest,
    pub table: Option<Table>,
}

pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

fn checks_table(m: &RunManifest) -> Table {
    Table {
        header: ["name", "expected", "actual", "pass"].map(String::from).to_vec(),
        rows: m
            .checks
            .iter()
            .map(|c| vec![c.name.clone(), c.expected.to_string(), c.actual.to_string(), c.pass.to_string()])
            .collect(),
    }
}

fn render(out: &Outcome, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => {
            let mut s = out.manifest.to_json();
            s.push('\n');
            Ok(s.into_bytes())
        }
        Format::Csv => {
            let fallback;
            let t = match &out.table {
                Some(t) => t,
                None => {
                    fallback = checks_table(&out.manifest);
                    &fallback
                }
            };
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&t.header)?;
            for r in &t.rows {
                w.write_record(r)?;
            }
            Ok(w.into_inner()?)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let outcome = commands::dispatch(cli.cmd, cli.tol)?;
    let bytes = render(&outcome, cli.format)?;
    match &cli.out {
        Some(p) => std::fs::write(p, &bytes)?,
        None => std::io::stdout().write_all(&bytes)?,
    }
    let pass = outcome.manifest.all_pass();
    if !pass {
        for c in outcome.manifest.checks.iter().filter(|c| !c.pass) {
            eprintln!("check failed: {} (expected {}, got {})", c.name, c.expected, c.actual);
        }
    }
    Ok(pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<e8chain::Error>() {
                Some(e8chain::Error::InvalidInput(_)) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
