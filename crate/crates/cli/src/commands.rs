use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;
use e8chain::e8::{self, QuaternionPair};
use e8chain::helicoid::{self, GossetParams, ScrewAxis};
use e8chain::io::{export_obj, stereographic, to_dot};
use e8chain::minsurf::{self, DEFAULT_U, DEFAULT_V};
use e8chain::polyhedra::{self, FlipVerdict};
use e8chain::polytope4d::{self, Polytope4D};
use e8chain::torus::{self, Handedness};
use e8chain::{Error, RunManifest};

use crate::{Cmd, Outcome, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Catenoid,
    Helicoid,
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Error::InvalidInput(msg.into()).into()
}

fn table(header: &[&str], rows: Vec<Vec<String>>) -> Option<Table> {
    Some(Table { header: header.iter().map(|s| s.to_string()).collect(), rows })
}

fn done(manifest: RunManifest, table: Option<Table>) -> Result<Outcome> {
    Ok(Outcome { manifest, table })
}

pub fn dispatch(cmd: Cmd, tol: Option<f64>) -> Result<Outcome> {
    let tol_or = |t: f64| tol.unwrap_or(t);
    match cmd {
        Cmd::Roots { norm2 } => roots(norm2),
        Cmd::Deephole { shells } => deephole(shells),
        Cmd::Decompose { verify } => decompose(verify),
        Cmd::Hopf => hopf(),
        Cmd::Torusmap { b, c, check_pg, pipeline240, dot } => torusmap(b, c, check_pg, pipeline240, dot.as_deref()),
        Cmd::Polyhedron { n, matchings, flip, dual, obj } => polyhedron(n, matchings, flip, dual, obj.as_deref()),
        Cmd::Polytope { lift, geom240, screw, compare, obj, dot } => {
            polytope(lift, geom240, screw, compare, obj.as_deref(), dot.as_deref(), tol_or(1e-9))
        }
        Cmd::F4 { label, elements } => f4(&label, elements),
        Cmd::Screw { i_n, k, m, g1, g2 } => screw(i_n, k, m, g1, g2),
        Cmd::Screwcheck => screwcheck(),
        Cmd::Rod { l, d, r, steps, strands, c, obj, csv } => {
            rod(l, d, r, steps, strands, c, obj.as_deref(), csv.as_deref(), tol_or(1e-9))
        }
        Cmd::Cover { k, p, m } => cover(k, p, m),
        Cmd::T0 => t0(tol),
        Cmd::Catenoid { r, h } => catenoid(r, h, tol_or(1e-10)),
        Cmd::Minsurf { alpha, grid, obj } => minsurf_cmd(alpha, grid, obj.as_deref(), tol),
        Cmd::Weier { preset, alpha, grid, obj } => weier(preset, alpha, grid, obj.as_deref(), tol),
        Cmd::Gaussband { umax, grid } => gaussband(umax, grid),
    }
}

/// Number of E8 vectors of norm² `2n`: `240·σ₃(n)`.
fn theta_coefficient(n: i64) -> i64 {
    240 * (1..=n).filter(|d| n % d == 0).map(|d| d * d * d).sum::<i64>()
}

fn roots(norm2: i64) -> Result<Outcome> {
    let shell = e8::enumerate_shell(norm2)?;
    let mut m = RunManifest::new("roots");
    m.param("norm2", norm2);
    let rows: Vec<Vec<String>> = shell.iter().map(|r| r.v.coords().iter().map(|c| c.to_string()).collect()).collect();
    m.result("count", shell.len()).result("vectors", &rows);
    if norm2 == 4 {
        m.result("ten_first_shells_reading", 2400);
    }
    m.check_eq("count", theta_coefficient(norm2 / 2) as usize, shell.len());
    m.check_eq("all_in_lattice", true, shell.iter().all(|r| r.v.in_e8() && r.v.norm2_x4() == 4 * norm2));
    let set: BTreeSet<_> = shell.iter().map(|r| r.v).collect();
    m.check_eq("closed_under_negation", true, shell.iter().all(|r| set.contains(&-r.v)));
    done(m, table(&["x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"], rows))
}

fn deephole(shells: usize) -> Result<Outcome> {
    let rep = e8::deep_hole_shells(shells)?;
    let mut m = RunManifest::new("deephole");
    m.param("shells", shells).result("report", &rep);
    let expected = [16usize, 128, 448, 1024];
    m.check_eq("counts", expected[..shells].to_vec(), rep.counts.clone());
    if shells == 4 {
        m.check_eq("shell2_plus_shell4", 1152, rep.counts[1] + rep.counts[3]);
    }
    let rows = rep.radii2.iter().zip(&rep.counts).map(|(r, c)| vec![r.to_string(), c.to_string()]).collect();
    done(m, table(&["radius2", "count"], rows))
}

fn pair_strings(p: &QuaternionPair) -> (String, String) {
    (p.q1.to_string(), p.q2.to_string())
}

fn decompose(verify: bool) -> Result<Outcome> {
    let subsets = e8::decompose_240()?;
    let mut m = RunManifest::new("decompose");
    m.param("verify", verify);
    m.check_eq("subsets", 10, subsets.len());
    m.check_eq("sizes", vec![24usize; 10], subsets.iter().map(|s| s.len()).collect::<Vec<_>>());
    let vecs: Vec<BTreeSet<e8chain::Vec8>> = subsets
        .iter()
        .map(|s| s.iter().map(|p| p.to_vec8()).collect::<e8chain::Result<_>>())
        .collect::<e8chain::Result<_>>()?;
    let disjoint = (0..10).all(|a| (a + 1..10).all(|b| vecs[a].is_disjoint(&vecs[b])));
    m.check_eq("pairwise_disjoint", true, disjoint);
    if verify {
        let union: BTreeSet<_> = vecs.iter().flatten().copied().collect();
        let shell: BTreeSet<_> = e8::enumerate_shell(2)?.into_iter().map(|r| r.v).collect();
        m.check_eq("union_equals_shell", true, union == shell);
    }
    let mut rows = Vec::new();
    for (i, s) in subsets.iter().enumerate() {
        for p in s {
            let (a, b) = pair_strings(p);
            rows.push(vec![format!("P{}", i + 1), a, b]);
        }
    }
    m.result("subset_sizes", subsets.iter().map(|s| s.len()).collect::<Vec<_>>());
    done(m, table(&["subset", "q1", "q2"], rows))
}

fn hopf() -> Result<Outcome> {
    let subsets = e8::decompose_240()?;
    let images = e8::hopf_images(&subsets)?;
    let mut m = RunManifest::new("hopf");
    m.check_eq("single_point_per_subset", true, images.iter().all(|i| i.is_some()));
    let pts: Vec<[e8chain::Rational; 5]> = images.iter().flatten().copied().collect();
    m.check_eq("cross_polytope", true, e8::is_cross_polytope(&pts));
    let mut products = BTreeSet::new();
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            products.insert(e8::dot5(&pts[a], &pts[b]).to_string());
        }
    }
    let products: Vec<String> = products.into_iter().collect();
    m.check_eq("inner_products", vec!["-4".to_string(), "0".to_string()], products.clone());
    let rows: Vec<Vec<String>> = pts
        .iter()
        .enumerate()
        .map(|(i, p)| std::iter::once(format!("P{}", i + 1)).chain(p.iter().map(|c| c.to_string())).collect())
        .collect();
    m.result("images", &rows).result("inner_products", products);
    done(m, table(&["subset", "h1", "h2", "h3", "h4", "h5"], rows))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn torusmap(b: i64, c: i64, check_pg: Option<u32>, pipeline240: bool, dot: Option<&Path>) -> Result<Outcome> {
    let map = torus::build_torus_map(b, c)?;
    let mut m = RunManifest::new("torusmap");
    m.param("b", b).param("c", c).param("check_pg", check_pg).param("pipeline240", pipeline240);
    let f = (b * b + b * c + c * c) as usize;
    let got = torus::counts(&map);
    m.result("counts", [got.0, got.1, got.2]);
    m.check_eq("counts", [2 * f, 3 * f, f], [got.0, got.1, got.2]);
    m.check_eq("genus", Some(1), map.genus());
    m.check_eq("trivalent", true, map.degrees().iter().all(|&d| d == 3));
    if let Some(q) = check_pg {
        let iso = torus::incidence_check(&map, q)?;
        m.result("pg_isomorphic", iso);
        let pg = torus::pg_incidence_graph(q)?;
        m.result("pg_vertices", pg.node_count()).result("pg_edges", pg.edge_count());
        if pg.node_count() != map.n_vertices() {
            m.check_eq("pg_isomorphic", false, iso);
        } else if (b, c, q) == (2, 1, 2) {
            m.check_eq("pg_isomorphic", true, iso);
        } else {
            let valence = 2 * pg.edge_count() / pg.node_count();
            m.result("pg_note", format!("PG(2,{q}) incidence graph is {valence}-valent, the map skeleton is 3-valent"));
        }
    }
    if pipeline240 {
        if (b, c) != (2, 1) {
            return Err(usage("--pipeline240 needs b=2, c=1"));
        }
        let cut = torus::handle_cut(&map)?;
        m.result("removed_edges", cut.removed).result("valid_triples", cut.valid_triples);
        let cc = torus::counts(&cut.map);
        m.check_eq("handle_cut_counts", [14, 18, 6], [cc.0, cc.1, cc.2]);
        let tri = torus::hexagon_refine(&cut.map)?;
        let tc = torus::counts(&tri);
        m.check_eq("refined_counts", [14, 36, 24], [tc.0, tc.1, tc.2]);
        m.check_eq("refined_degrees", BTreeMap::from([(4usize, 6usize), (6, 8)]), tri.degree_profile());
        let left = torus::hexagon_refine_handed(&cut.map, Handedness::Left)?;
        m.check_eq("left_refinement_degrees", tri.degree_profile(), left.degree_profile());
        m.result("refinements_mirror_isomorphic", tri.is_isomorphic_map(&left));
        let dual = torus::dualize(&tri);
        let dc = torus::counts(&dual);
        m.check_eq("dual_counts", [24, 36, 14], [dc.0, dc.1, dc.2]);
        let level0 = polyhedra::build_level(0)?;
        m.check_eq("dual_is_truncated_octahedron", true, dual.is_isomorphic_map(&level0.map));
        let (cover, _) = polytope4d::lift_cover(&level0, 10)?;
        m.check_eq("lift_vertices", 240, cover.n_vertices);
        m.check_eq("lift_edges", 480, cover.edges.len());
    }
    if let Some(p) = dot {
        write_text(p, &to_dot("torus", map.n_vertices(), &map.edges()))?;
    }
    let rows = map.edges().iter().map(|(a, b)| vec![a.to_string(), b.to_string()]).collect();
    done(m, table(&["u", "v"], rows))
}

fn polyhedron(n: u8, matchings: bool, flip: bool, dual: bool, obj: Option<&Path>) -> Result<Outcome> {
    let p = polyhedra::build_level(n)?;
    let s = 1usize << n;
    let mut m = RunManifest::new("polyhedron");
    m.param("n", n).param("matchings", matchings).param("flip", flip).param("dual", dual);
    let counts = torus::counts(&p.map);
    m.check_eq("counts", [24 * s, 36 * s, 2 + 12 * s], [counts.0, counts.1, counts.2]);
    let e = polyhedra::validate_euler(&p);
    m.result("euler", &e);
    m.check_eq("curvature_sum", 12, e.curvature_sum);
    m.check_eq("face_total", e.face_total_expected, e.face_total);
    m.check_eq("q_matching_size", 12 * s, p.q_matching.len());
    m.check_eq("q_matching_perfect", true, polyhedra::is_perfect_matching(&p.map, &p.q_matching));
    m.result("triple_hexagons", &p.triple_faces).result("chirality", &p.chirality);
    if matchings {
        let all = polyhedra::find_q_matching(&p, 1000);
        m.check_eq("matching_exists", true, !all.matchings.is_empty());
        m.result("matchings_found", all.matchings.len()).result("matchings_exhaustive", all.exhaustive);
        m.result("matchings", &all.matchings);
    }
    if flip {
        let f = polyhedra::flip_chirality(&p);
        m.result("flip", &f);
        match n {
            0 => {
                m.check_eq("flip_verdict", FlipVerdict::Degenerate, f.verdict);
            }
            2 => {
                m.check_eq("flip_verdict", FlipVerdict::TypeUnchanged, f.verdict);
            }
            _ => {
                m.result("flip_note", "level 1: the flipped edge set is again a perfect matching");
            }
        }
        let back = polyhedra::flip_edges(&p.map, &p.triple_faces, &f.edges);
        m.check_eq("double_flip_restores", p.matching_keys(), back.into_iter().collect());
    }
    if dual {
        let want = [
            BTreeMap::from([(4usize, 6usize), (6, 8)]),
            BTreeMap::from([(4, 12), (6, 8), (8, 6)]),
            BTreeMap::from([(5, 24), (6, 14), (7, 12)]),
        ];
        m.check_eq("dual_degree_profile", want[n as usize].clone(), p.map.dual().degree_profile());
    }
    if n < 2 {
        let (_, lift) = polyhedra::next_in_sequence(n)?;
        m.result("next_in_sequence", &lift);
    }
    if let Some(path) = obj {
        let pts = polyhedra::embedding(n).ok_or_else(|| usage("OBJ export exists for levels 0 and 1 only"))?;
        export_obj(&pts, &[], &polyhedra::hull_faces(&pts), path)?;
    }
    let rows = p.q_matching.iter().map(|(a, b)| vec![a.to_string(), b.to_string()]).collect();
    done(m, table(&["tail", "head"], rows))
}

fn graph_checks(m: &mut RunManifest, p: &Polytope4D, vertices: usize) {
    m.check_eq("vertices", vertices, p.n_vertices);
    m.check_eq("edges", 2 * vertices, p.edges.len());
    m.check_eq("four_regular", true, p.is_regular(4));
    m.check_eq("connected", true, p.is_connected());
}

#[allow(clippy::too_many_arguments)]
fn polytope(
    lift: Option<Vec<u64>>,
    geom240: bool,
    screw: Option<Vec<f64>>,
    compare: bool,
    obj: Option<&Path>,
    dot: Option<&Path>,
    tol: f64,
) -> Result<Outcome> {
    if lift.is_none() && !geom240 && screw.is_none() && !compare {
        return Err(usage("polytope needs --lift N Q, --geom240, --screw A B or --compare"));
    }
    let mut m = RunManifest::new("polytope");
    m.param("lift", &lift).param("geom240", geom240).param("screw", &screw).param("compare", compare);
    let mut last: Option<Polytope4D> = None;
    if let Some(l) = &lift {
        let (n, q) = (l[0], l[1] as usize);
        if n > 2 {
            return Err(usage(format!("level must be 0, 1 or 2, got {n}")));
        }
        let base = polyhedra::build_level(n as u8)?;
        let (p, a) = polytope4d::lift_cover(&base, q)?;
        graph_checks(&mut m, &p, (q * 24) << n);
        m.result("voltages", a.voltages.iter().map(|(e, d)| [e.0, e.1, *d]).collect::<Vec<_>>());
        m.result("voltage_orbits", a.orbits).result("assignments_tried", a.tried);
        m.result("stats", p.stats());
        last = Some(p);
    }
    let needs_geom = geom240 || screw.is_some() || compare;
    let geom = if needs_geom { Some(polytope4d::build_240_geometric()?) } else { None };
    if let Some(g) = &geom {
        if geom240 {
            graph_checks(&mut m, &g.polytope, 240);
            m.check_eq("binary_icosahedral_order", 120, polytope4d::binary_icosahedral().len());
            let verts = g.polytope.vertices.as_ref().expect("geometric vertices");
            let worst = verts.iter().map(|v| (v.iter().map(|x| x * x).sum::<f64>() - 1.0).abs()).fold(0.0, f64::max);
            m.check("unit_norms", 0.0, worst, worst <= tol);
            m.result("sigma", g.sigma).result("sigma_kind", g.sigma_kind).result("min_chord", g.min_chord);
            m.result("candidates_tried", g.candidates_tried).result("stats", g.polytope.stats());
            last = Some(g.polytope.clone());
        }
        if let Some(s) = &screw {
            let verts = g.polytope.vertices.as_ref().expect("geometric vertices");
            m.result("screw", polytope4d::screw_orbit_partition(verts, s[0], s[1]));
        }
        if compare {
            let (cover, _) = polytope4d::lift_cover(&polyhedra::build_level(0)?, 10)?;
            m.result("comparison", polytope4d::compare_cover_with_geometric(&cover, &g.polytope));
            m.result("mirror", polytope4d::mirror_report(&g.polytope)?);
        }
    }
    let p = last.unwrap_or_else(|| geom.expect("geometric polytope built").polytope);
    if let Some(path) = dot {
        write_text(path, &to_dot("polytope", p.n_vertices, &p.edges))?;
    }
    if let Some(path) = obj {
        let verts = p.vertices.as_ref().ok_or_else(|| usage("OBJ export needs coordinates (use --geom240)"))?;
        let pole = [1.0, 2.0, 3.0, 5.0];
        export_obj(&stereographic(verts, pole)?, &p.edges, &[], path)?;
    }
    let rows = p.edges.iter().map(|(a, b)| vec![a.to_string(), b.to_string()]).collect();
    done(m, table(&["u", "v"], rows))
}

fn f4(label: &str, elements: bool) -> Result<Outcome> {
    let digits: Vec<u8> = label
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(usage(format!("label must consist of 0 and 1, got {label:?}"))),
        })
        .collect::<Result<_>>()?;
    let arr: [u8; 4] = digits.try_into().map_err(|_| usage(format!("label must have four digits, got {label:?}")))?;
    let o = polytope4d::f4_orbit(arr, elements)?;
    let mut m = RunManifest::new("f4");
    m.param("label", label).param("elements", elements);
    m.result("orbit", &o);
    // label -> (vertices, edges, (2-faces, cells) when counted by hull)
    type Row = (usize, usize, Option<(usize, usize)>);
    let expected: BTreeMap<&str, Row> = BTreeMap::from([
        ("0001", (24, 96, Some((96, 24)))),
        ("0010", (96, 288, Some((240, 48)))),
        ("1011", (576, 1440, None)),
        ("0111", (576, 1152, None)),
        ("1111", (1152, 2304, None)),
    ]);
    m.check_eq("orbit_times_stabilizer", 1152, o.n_vertices * o.stabilizer_order);
    if let Some(&(v, e, fc)) = expected.get(label) {
        m.check_eq("vertices", v, o.n_vertices);
        m.check_eq("edges", e, o.n_edges);
        if let (true, Some((f, c))) = (elements, fc) {
            m.check_eq("faces", Some(f), o.faces);
            m.check_eq("cells", Some(c), o.cells);
        }
    }
    let rows = o.vertices.iter().map(|p| p.iter().map(|c| c.to_string()).collect()).collect();
    done(m, table(&["x1", "x2", "x3", "x4"], rows))
}

fn screw(i_n: u64, k: u64, mm: u64, g1: u64, g2: u64) -> Result<Outcome> {
    let g = GossetParams::new(i_n, k, mm, g1, g2)?;
    let r = helicoid::screw_from_gosset(g);
    let mut m = RunManifest::new("screw");
    m.param("I_n", i_n).param("k_js", k).param("m_js", mm).param("gamma1", g1).param("gamma2", g2);
    m.result("axis", r.axis.to_string()).result("I_s", r.i_s).result("step_angle_deg", r.step_angle_deg);
    m.result("warnings", &r.warnings);
    match helicoid::points_per_equator(i_n, g1, g2, k) {
        Ok(p) => m.result("points_per_equator", p),
        Err(e) => m.result("points_per_equator", e.to_string()),
    };
    let alt = e8chain::exact::rat(8 * i_n as i64, (g1 * g2 * k * mm) as i64);
    let ratio = e8chain::exact::rat(r.axis.l as i64, r.axis.d as i64);
    m.check_eq("two_forms_agree", alt.to_string(), ratio.to_string());
    m.check_eq("i_s_identity", k + k * mm, r.i_s);
    done(m, None)
}

fn screwcheck() -> Result<Outcome> {
    let rel = helicoid::check_generating_relations(&helicoid::reference_relations());
    let mut m = RunManifest::new("screwcheck");
    m.result("relations", &rel);
    let want = ["1/10", "1/10", "-1/10", "1/10"];
    for (t, w) in rel.terms.iter().zip(want) {
        m.check_eq(&format!("net_turn({})^{}", t.axis, t.power), w.to_string(), t.net_turn.clone());
    }
    m.check_eq("relations_consistent", true, rel.consistent);
    let axes: Vec<String> =
        helicoid::reference_gosset().iter().map(|&g| helicoid::screw_from_gosset(g).axis.to_string()).collect();
    for (got, want) in axes.iter().zip(["30/11", "40/9", "40/11"]) {
        m.check_eq(&format!("gosset_{want}"), want.to_string(), got.clone());
    }
    let rows = rel
        .terms
        .iter()
        .map(|t| vec![t.axis.clone(), t.power.to_string(), t.net_turn.clone(), t.chirality.to_string()])
        .collect();
    done(m, table(&["axis", "power", "net_turn", "chirality"], rows))
}

#[allow(clippy::too_many_arguments)]
fn rod(
    l: u64,
    d: u64,
    r: f64,
    steps: usize,
    strands: usize,
    c: Option<f64>,
    obj: Option<&Path>,
    csv_path: Option<&Path>,
    tol: f64,
) -> Result<Outcome> {
    let axis = ScrewAxis::new(l, d)?;
    let rod = helicoid::generate_rod(axis, r, c, strands, steps)?;
    let mut m = RunManifest::new("rod");
    m.param("L", l).param("d", d).param("r", r).param("steps", steps).param("strands", strands).param("c", c);
    m.result("axis", axis.to_string()).result("rise", rod.c).result("chord", rod.chord());
    m.result("step_angle_deg", axis.step_angle_deg());
    let chord = rod.chord();
    let mut worst_chord: f64 = 0.0;
    let mut worst_radius: f64 = 0.0;
    for s in &rod.strands {
        for p in &s.points {
            worst_radius = worst_radius.max((p[0].hypot(p[1]) - r).abs());
        }
        for w in s.points.windows(2) {
            let dd = (0..3).map(|i| (w[1][i] - w[0][i]).powi(2)).sum::<f64>().sqrt();
            worst_chord = worst_chord.max((dd - chord).abs());
        }
    }
    m.check("on_cylinder", 0.0, worst_radius, worst_radius <= tol);
    m.check("constant_chord", 0.0, worst_chord, worst_chord <= tol);
    let th = helicoid::tetrahelix_comparison(axis);
    m.result("tetrahelix", &th);
    if (axis.l, axis.d) == (30, 11) {
        m.check("tetrahelix_deviation_below_0.2deg", 0.2, th.deviation_deg, th.deviation_deg < 0.2);
    }
    let mut pts = Vec::new();
    let mut edges = Vec::new();
    let mut rows = Vec::new();
    for (si, s) in rod.strands.iter().enumerate() {
        let base = pts.len();
        for (k, p) in s.points.iter().enumerate() {
            pts.push(*p);
            if k > 0 {
                edges.push((base + k - 1, base + k));
            }
            rows.push(vec![si.to_string(), k.to_string(), p[0].to_string(), p[1].to_string(), p[2].to_string()]);
        }
    }
    if let Some(path) = obj {
        export_obj(&pts, &edges, &[], path)?;
    }
    if let Some(path) = csv_path {
        let mut w = csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
        w.write_record(["strand", "step", "x", "y", "z"])?;
        for r in &rows {
            w.write_record(r)?;
        }
        w.flush()?;
    }
    done(m, table(&["strand", "step", "x", "y", "z"], rows))
}

fn cover(k: u64, p: u64, mm: u64) -> Result<Outcome> {
    let c = helicoid::cover_model(k, p, mm)?;
    let mut m = RunManifest::new("cover");
    m.param("k", k).param("p", p).param("m", mm);
    m.result("model", &c);
    m.check_eq("marked_index", mm + 1, c.marked);
    m.check_eq("spheres", k as usize, c.centres.len());
    m.check_eq("equator_points", p as usize, c.equator.len());
    done(m, None)
}

fn t0(tol: Option<f64>) -> Result<Outcome> {
    let t = minsurf::solve_coth_fixed_point(tol.unwrap_or(1e-12))?;
    let mut m = RunManifest::new("t0");
    let crit = minsurf::critical_ratio();
    let sweep = minsurf::critical_ratio_by_sweep();
    m.result("t0", t).result("two_t0", 2.0 * t).result("cosh_t0", t.cosh()).result("tanh_t0", t.tanh());
    m.result("critical_ratio_ring", crit).result("critical_ratio_sweep", sweep);
    m.result("critical_pitch_neck1", minsurf::critical_pitch(1.0)?);
    m.check_close("t0", 1.199_678_640_257_733_8, t, 1e-12);
    let resid = (1.0 / t.tanh() - t).abs();
    m.check("coth_residual", 0.0, resid, resid < tol.unwrap_or(1e-12));
    m.check("two_t0_in_[2.399,2.400]", [2.399, 2.4], 2.0 * t, (2.399..=2.4).contains(&(2.0 * t)));
    m.check_close("critical_ratio", 1.325_486_838_698_363_2, crit, 1e-6);
    m.check_close("sweep_transition", crit, sweep, tol.unwrap_or(1e-6));
    done(m, None)
}

fn catenoid(r: f64, h: f64, tol: f64) -> Result<Outcome> {
    let sols = minsurf::catenoid_solutions(r, h)?;
    let mut m = RunManifest::new("catenoid");
    m.param("r", r).param("h", h);
    m.result("solutions", &sols).result("ratio", h / r).result("critical_ratio", minsurf::critical_ratio());
    let crit = minsurf::critical_ratio();
    let predicted = if (h / r - crit).abs() < 1e-12 {
        1
    } else if h / r < crit {
        2
    } else {
        0
    };
    m.check_eq("solution_count", predicted, sols.len());
    let worst = sols.iter().map(|s| (s.neck_radius * (h / (2.0 * s.neck_radius)).cosh() - r).abs()).fold(0.0, f64::max);
    m.check("residual", 0.0, worst, worst <= tol * r);
    let rows =
        sols.iter().map(|s| vec![s.neck_radius.to_string(), format!("{:?}", s.kind), s.stable.to_string()]).collect();
    done(m, table(&["neck_radius", "kind", "stable"], rows))
}

fn mesh_obj(mesh: &minsurf::SurfaceMesh, path: &Path) -> Result<()> {
    let faces: Vec<Vec<usize>> = mesh.quads().iter().map(|q| q.to_vec()).collect();
    Ok(export_obj(&mesh.points, &[], &faces, path)?)
}

fn mesh_table(mesh: &minsurf::SurfaceMesh) -> Option<Table> {
    let mut rows = Vec::new();
    for i in 0..mesh.nu {
        for j in 0..mesh.nv {
            let p = mesh.at(i, j);
            rows.push(vec![
                mesh.u(i).to_string(),
                mesh.v(j).to_string(),
                p[0].to_string(),
                p[1].to_string(),
                p[2].to_string(),
            ]);
        }
    }
    table(&["u", "v", "x", "y", "z"], rows)
}

fn minsurf_cmd(alpha: f64, grid: usize, obj: Option<&Path>, tol: Option<f64>) -> Result<Outcome> {
    let mesh = minsurf::associated_family(alpha, DEFAULT_U, DEFAULT_V, grid)?;
    let mut m = RunManifest::new("minsurf");
    m.param("alpha", alpha).param("grid", grid);
    let h = mesh.max_abs_mean_curvature()?;
    let spread = minsurf::metric_spread(&[0.0, alpha], grid)?;
    m.result("max_abs_mean_curvature", h).result("metric_spread_vs_catenoid", spread);
    m.check("mean_curvature", 0.0, h, h < tol.unwrap_or(1e-3));
    m.check("metric_invariance", 0.0, spread, spread < tol.unwrap_or(1e-8));
    if let Some(p) = obj {
        mesh_obj(&mesh, p)?;
    }
    done(m, mesh_table(&mesh))
}

fn weier(preset: Preset, alpha: Option<f64>, grid: usize, obj: Option<&Path>, tol: Option<f64>) -> Result<Outcome> {
    let alpha = alpha.unwrap_or(match preset {
        Preset::Catenoid => 0.0,
        Preset::Helicoid => PI / 2.0,
    });
    let w = minsurf::weierstrass_catenoid(alpha, grid, DEFAULT_U, DEFAULT_V)?;
    let family = minsurf::associated_family(alpha, DEFAULT_U, DEFAULT_V, grid)?;
    let reg = minsurf::register_rigid(&w.points, &family.points)?;
    let h = w.max_abs_mean_curvature()?;
    let mut m = RunManifest::new("weier");
    m.param("preset", format!("{preset:?}").to_lowercase()).param("alpha", alpha).param("grid", grid);
    m.result("registration", &reg).result("max_abs_mean_curvature", h);
    m.check("matches_family_after_registration", 0.0, reg.max_distance, reg.max_distance < tol.unwrap_or(1e-6));
    m.check("mean_curvature", 0.0, h, h < 1e-3);
    if let Some(p) = obj {
        mesh_obj(&w, p)?;
    }
    done(m, mesh_table(&w))
}

fn gaussband(umax: f64, grid: usize) -> Result<Outcome> {
    if umax.is_nan() || umax <= 0.0 {
        return Err(usage("umax must be positive"));
    }
    let t = minsurf::t0();
    let mesh = minsurf::catenoid_band_mesh(umax, grid)?;
    let b = minsurf::gauss_band_check(&mesh, t);
    let mut m = RunManifest::new("gaussband");
    m.param("umax", umax).param("grid", grid);
    m.result("band", &b).result("umax_over_t0", umax / t);
    // On the catenoid n₃ = tanh u, so the band holds exactly when umax ≤ t0.
    m.check_eq("verdict_matches_tanh_oracle", umax <= t, b.pass);
    if umax > t {
        let crossing = b.crossing_u.unwrap_or(f64::NAN);
        m.check("crossing_at_t0", t, crossing, (crossing - t).abs() <= mesh.hu());
    }
    done(m, None)
}
