//! Regular torus maps `{6,3}_{b,c}` and the pipeline
//! torus map → handle cut → hexagon refinement → dual polyhedron.

use std::collections::{BTreeMap, BTreeSet};

use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::map::CombinatorialMap;

/// Coset representative of `(m, n)` modulo the lattice spanned by
/// `(b, c)` and `(-c, b+c)` in the basis `(1, ω)`, `ω = e^{iπ/3}`.
fn reduce(b: i64, c: i64, m: i64, n: i64) -> (i64, i64) {
    let norm = b * b + b * c + c * c;
    let s = (m * (b + c) + n * c).div_euclid(norm);
    let t = (n * b - m * c).div_euclid(norm);
    (m - s * b + t * c, n - s * c - t * (b + c))
}

/// The hexagonal torus map `{6,3}_{b,c}`.
///
/// Hexagon centres are the points `λ = m + nω` of the Eisenstein lattice
/// modulo the translation lattice. Each coset carries two vertices, the
/// triangle centroids `A(λ) = λ + (1+ω)/3` (id `2i`) and
/// `B(λ) = λ + 2(1+ω)/3` (id `2i+1`), where `i` indexes the sorted coset
/// representatives. Edge `3i + t` joins `A(λ)` to `B(λ)`, `B(λ−1)`, `B(λ−ω)`
/// for `t = 0, 1, 2`; these leave `A` at 30°, 150° and 270°.
pub fn build_torus_map(b: i64, c: i64) -> Result<CombinatorialMap> {
    if b < 0 || c < 0 || b + c == 0 {
        return Err(invalid(format!("torus map needs b, c ≥ 0 and b + c > 0, got ({b}, {c})")));
    }
    let norm = b * b + b * c + c * c;
    let reps: BTreeSet<(i64, i64)> =
        (-norm..=norm).flat_map(|m| (-norm..=norm).map(move |n| reduce(b, c, m, n))).collect();
    if reps.len() as i64 != norm {
        return Err(Error::Construction(format!("found {} cosets, expected {norm}", reps.len())));
    }
    let reps: Vec<(i64, i64)> = reps.into_iter().collect();
    let index: BTreeMap<(i64, i64), usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let offsets = [(0, 0), (-1, 0), (0, -1)];
    let nf = reps.len();
    let n_edges = 3 * nf;
    let mut vert = vec![0; 2 * n_edges];
    let mut sigma = vec![0; 2 * n_edges];
    // into[j][t] = edge of type t ending at B(j)
    let mut into = vec![[0usize; 3]; nf];
    for (i, &(m, n)) in reps.iter().enumerate() {
        for (t, &(dm, dn)) in offsets.iter().enumerate() {
            let e = 3 * i + t;
            let j = index[&reduce(b, c, m + dm, n + dn)];
            vert[2 * e] = 2 * i;
            vert[2 * e + 1] = 2 * j + 1;
            into[j][t] = e;
            sigma[2 * e] = 2 * (3 * i + (t + 1) % 3);
        }
    }
    // At B the edge directions are reversed: t=2 at 90°, t=0 at 210°, t=1 at 330°.
    for inc in &into {
        let [e0, e1, e2] = *inc;
        sigma[2 * e2 + 1] = 2 * e0 + 1;
        sigma[2 * e0 + 1] = 2 * e1 + 1;
        sigma[2 * e1 + 1] = 2 * e2 + 1;
    }
    CombinatorialMap::from_rotation(2 * nf, vert, sigma)
}

/// Point–line incidence graph of `PG(2, q)` for prime `q`.
///
/// Points `0..N` and lines `N..2N`, `N = q² + q + 1`.
pub fn pg_incidence_graph(q: u32) -> Result<UnGraph<(), ()>> {
    if q < 2 || !(2..q).all(|d| q % d != 0) {
        return Err(invalid(format!("PG(2,q) is built here only for prime q, got {q}")));
    }
    let q = q as i64;
    // Normalised homogeneous coordinates: first non-zero entry equal to 1.
    let mut pts: Vec<[i64; 3]> = Vec::new();
    for a in 0..q {
        for b in 0..q {
            pts.push([1, a, b]);
        }
    }
    for b in 0..q {
        pts.push([0, 1, b]);
    }
    pts.push([0, 0, 1]);
    let n = pts.len();
    let mut g = UnGraph::<(), ()>::with_capacity(2 * n, n * (q as usize + 1));
    for _ in 0..2 * n {
        g.add_node(());
    }
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]).rem_euclid(q) == 0 {
                g.add_edge((i as u32).into(), ((n + j) as u32).into(), ());
            }
        }
    }
    Ok(g)
}

/// True iff the 1-skeleton of `map` is isomorphic to the incidence graph of `PG(2,q)`.
pub fn incidence_check(map: &CombinatorialMap, q: u32) -> Result<bool> {
    let pg = pg_incidence_graph(q)?;
    let sk = map.skeleton();
    if sk.node_count() != pg.node_count() || sk.edge_count() != pg.edge_count() {
        return Ok(false);
    }
    Ok(is_isomorphic(&sk, &pg))
}

/// Outcome of [`handle_cut`].
#[derive(Clone, Debug)]
pub struct HandleCut {
    pub map: CombinatorialMap,
    /// Removed edges of the chosen triple.
    pub removed: [usize; 3],
    /// Number of valid triples found by the exhaustive search.
    pub valid_triples: usize,
}

/// Cuts a handle of a hexagonal torus map by deleting three edges.
///
/// Every edge triple is tried in lexicographic order; a triple is valid if the
/// remaining map is connected, has Euler characteristic 2 and only hexagonal
/// faces. The first valid triple is applied.
pub fn handle_cut(map: &CombinatorialMap) -> Result<HandleCut> {
    if map.genus() != Some(1) {
        return Err(invalid("handle cut expects a connected genus-1 map"));
    }
    let e = map.n_edges();
    let mut first = None;
    let mut count = 0;
    for a in 0..e {
        for b in a + 1..e {
            for c in b + 1..e {
                let cut = map.remove_edges(&[a, b, c]);
                if cut.euler_characteristic() == 2 && cut.is_connected() && cut.faces().iter().all(|f| f.len() == 6) {
                    count += 1;
                    if first.is_none() {
                        first = Some((cut, [a, b, c]));
                    }
                }
            }
        }
    }
    let (map, removed) = first.ok_or_else(|| Error::Construction("no edge triple cuts a handle".into()))?;
    Ok(HandleCut { map, removed, valid_triples: count })
}

/// Triangulations of a convex polygon with vertices `0..k`, as ccw position triples.
fn polygon_triangulations(poly: &[usize]) -> Vec<Vec<[usize; 3]>> {
    if poly.len() < 3 {
        return vec![Vec::new()];
    }
    let (a, z) = (poly[0], poly[poly.len() - 1]);
    let mut out = Vec::new();
    for k in 1..poly.len() - 1 {
        let left = polygon_triangulations(&poly[..=k]);
        let right = polygon_triangulations(&poly[k..]);
        for l in &left {
            for r in &right {
                let mut t = vec![[a, poly[k], z]];
                t.extend_from_slice(l);
                t.extend_from_slice(r);
                out.push(t);
            }
        }
    }
    out
}

/// Which of the two mirror-image refinements to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Handedness {
    Right,
    Left,
}

struct RefineSearch<'a> {
    faces: &'a [Vec<usize>],
    options: Vec<Vec<[usize; 3]>>,
    last_face: Vec<usize>,
    edges: BTreeSet<(usize, usize)>,
    degree: Vec<usize>,
    choice: Vec<usize>,
}

impl RefineSearch<'_> {
    fn diagonals(&self, f: &[usize], tris: &[[usize; 3]]) -> Vec<(usize, usize)> {
        let k = f.len();
        let mut out = Vec::new();
        for t in tris {
            for (i, j) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                let (lo, hi) = (i.min(j), i.max(j));
                if hi - lo != 1 && !(lo == 0 && hi == k - 1) {
                    let e = (f[lo].min(f[hi]), f[lo].max(f[hi]));
                    if !out.contains(&e) {
                        out.push(e);
                    }
                }
            }
        }
        out
    }

    fn run(&mut self, fi: usize) -> bool {
        if fi == self.faces.len() {
            return self.independent_low_degrees();
        }
        let f = &self.faces[fi];
        for ci in 0..self.options.len() {
            let diag = self.diagonals(f, &self.options[ci]);
            if diag.iter().any(|&(a, b)| a == b || self.edges.contains(&(a, b))) {
                continue;
            }
            for &(a, b) in &diag {
                self.edges.insert((a, b));
                self.degree[a] += 1;
                self.degree[b] += 1;
            }
            let ok = f.iter().all(|&v| {
                let d = self.degree[v];
                d <= 6 && (self.last_face[v] != fi || d == 4 || d == 6)
            });
            self.choice.push(ci);
            if ok && self.run(fi + 1) {
                return true;
            }
            self.choice.pop();
            for &(a, b) in &diag {
                self.edges.remove(&(a, b));
                self.degree[a] -= 1;
                self.degree[b] -= 1;
            }
        }
        false
    }

    fn independent_low_degrees(&self) -> bool {
        self.edges.iter().all(|&(a, b)| !(self.degree[a] == 4 && self.degree[b] == 4))
    }
}

/// Splits every hexagon of a spherical hexagon partition into four triangles.
///
/// The search runs over all 14 triangulations of each hexagon in canonical
/// order and keeps the first simple triangulation whose vertex degrees lie in
/// `{4, 6}` with no two degree-4 vertices adjacent. For the six-hexagon
/// partition obtained by [`handle_cut`] this is the 14-vertex
/// triangulation `[4⁶, 6⁸]`.
pub fn hexagon_refine(partition: &CombinatorialMap) -> Result<CombinatorialMap> {
    if partition.genus() != Some(0) {
        return Err(invalid("hexagon refinement expects a connected genus-0 map"));
    }
    let faces = partition.face_vertices();
    if faces.iter().any(|f| f.len() != 6) {
        return Err(invalid("hexagon refinement expects only hexagonal faces"));
    }
    let n = partition.n_vertices();
    let mut last_face = vec![0; n];
    for (fi, f) in faces.iter().enumerate() {
        for &v in f {
            last_face[v] = fi;
        }
    }
    let mut search = RefineSearch {
        faces: &faces,
        options: polygon_triangulations(&[0, 1, 2, 3, 4, 5]),
        last_face,
        edges: partition.edges().into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect(),
        degree: partition.degrees(),
        choice: Vec::new(),
    };
    if !search.run(0) {
        return Err(Error::Construction("no admissible hexagon triangulation".into()));
    }
    let mut tris = Vec::new();
    for (f, &ci) in faces.iter().zip(&search.choice) {
        for t in &search.options[ci] {
            tris.push(t.iter().map(|&p| f[p]).collect::<Vec<_>>());
        }
    }
    CombinatorialMap::from_oriented_faces(n, &tris)
}

/// Refinement of the requested handedness; `Left` is the mirror construction.
pub fn hexagon_refine_handed(partition: &CombinatorialMap, hand: Handedness) -> Result<CombinatorialMap> {
    match hand {
        Handedness::Right => hexagon_refine(partition),
        Handedness::Left => Ok(hexagon_refine(&partition.mirror())?.mirror()),
    }
}

/// Dual map.
pub fn dualize(map: &CombinatorialMap) -> CombinatorialMap {
    map.dual()
}

/// Vector `m + n·ω` of the hexagonal lattice `A₂`, `ω = e^{iπ/3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct A2Vector {
    pub m: i64,
    pub n: i64,
}

impl A2Vector {
    pub fn norm2(&self) -> i64 {
        self.m * self.m + self.m * self.n + self.n * self.n
    }

    /// Multiplication by `ω` (rotation by 60°).
    pub fn rotate60(&self) -> Self {
        Self { m: -self.n, n: self.m + self.n }
    }

    pub fn neg(&self) -> Self {
        Self { m: -self.m, n: -self.n }
    }

    pub fn cartesian(&self) -> [f64; 2] {
        [self.m as f64 + 0.5 * self.n as f64, 3f64.sqrt() / 2.0 * self.n as f64]
    }

    /// Polar angle in degrees, in `[0, 360)`.
    pub fn angle_deg(&self) -> f64 {
        let [x, y] = self.cartesian();
        y.atan2(x).to_degrees().rem_euclid(360.0)
    }
}

/// The twelve `G₂` vectors: six of norm² 1 and six of norm² 3, sorted by angle.
pub fn g2_roots() -> Vec<A2Vector> {
    let mut out = Vec::new();
    let mut short = A2Vector { m: 1, n: 0 };
    let mut long = A2Vector { m: 1, n: 1 };
    for _ in 0..6 {
        out.push(short);
        out.push(long);
        short = short.rotate60();
        long = long.rotate60();
    }
    out.sort_by(|a, b| a.angle_deg().total_cmp(&b.angle_deg()));
    out
}

/// Vertex, edge and face counts of a map.
pub fn counts(map: &CombinatorialMap) -> (usize, usize, usize) {
    (map.n_vertices(), map.n_edges(), map.n_faces())
}
