//! Loaded polyhedra `{2ⁿ·24}`: simple 3-valent polyhedra carrying a perfect
//! matching of distinguished "Q-edges".
//!
//! Levels 0 and 1 are the truncated octahedron and the truncated
//! cuboctahedron, taken from the convex hulls of their standard coordinates.
//! Level 2 is a 96-vertex polyhedron with 24 pentagons, 14 hexagons and 12
//! heptagons, shipped as a face list and accepted only after validation.
//!
//! A hexagon carries a Q-edge triple when the faces around it alternate
//! between two sizes. Its right-handed triple is the one bordering the larger
//! neighbours, the left-handed triple is the other three edges.

mod level2;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::map::{CombinatorialMap, MapBuilder};
use crate::torus::Handedness;

pub type Edge = (usize, usize);

fn key(a: usize, b: usize) -> Edge {
    (a.min(b), a.max(b))
}

/// Polyhedron with its Q-edge matching and per-hexagon handedness.
#[derive(Clone, Debug)]
pub struct LoadedPolyhedron {
    pub n: u8,
    pub map: CombinatorialMap,
    /// Oriented Q-edges `(tail, head)`; orientation is informational.
    pub q_matching: Vec<Edge>,
    /// Indices (into `map.faces()`) of hexagons carrying a triple.
    pub triple_faces: Vec<usize>,
    /// Handedness of the triple in each triple-carrying hexagon.
    pub chirality: Vec<(usize, Handedness)>,
}

impl LoadedPolyhedron {
    pub fn n_vertices(&self) -> usize {
        self.map.n_vertices()
    }

    /// Undirected matching edges, sorted.
    pub fn matching_keys(&self) -> BTreeSet<Edge> {
        self.q_matching.iter().map(|&(a, b)| key(a, b)).collect()
    }
}

/// Vertex coordinates with unit edge length for levels 0 and 1.
pub fn embedding(n: u8) -> Option<Vec<[f64; 3]>> {
    let (base, scale): (Vec<f64>, f64) = match n {
        0 => (vec![0.0, 1.0, 2.0], 1.0 / 2f64.sqrt()),
        1 => {
            let r = 2f64.sqrt();
            (vec![1.0, 1.0 + r, 1.0 + 2.0 * r], 0.5)
        }
        _ => return None,
    };
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut pts: Vec<[f64; 3]> = Vec::new();
    for p in perms {
        for signs in 0..8u32 {
            let v: [f64; 3] = std::array::from_fn(|i| {
                let x = base[p[i]];
                if signs >> i & 1 == 1 {
                    -x
                } else {
                    x
                }
            });
            let v = v.map(|x| if x == 0.0 { 0.0 } else { x * scale });
            if !pts.iter().any(|q| q.iter().zip(&v).all(|(a, b)| (a - b).abs() < 1e-9)) {
                pts.push(v);
            }
        }
    }
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])).then(a[2].total_cmp(&b[2])));
    Some(pts)
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Facets of the convex hull of a small point set in convex position,
/// as counter-clockwise vertex cycles seen from outside.
pub fn hull_faces(pts: &[[f64; 3]]) -> Vec<Vec<usize>> {
    let eps = 1e-9;
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut nrm = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
                let len = dot(nrm, nrm).sqrt();
                if len < eps {
                    continue;
                }
                nrm = nrm.map(|x| x / len);
                let off = dot(nrm, pts[i]);
                let (mut above, mut below) = (false, false);
                let mut on = Vec::new();
                for (l, p) in pts.iter().enumerate() {
                    let s = dot(nrm, *p) - off;
                    if s > eps {
                        above = true;
                    } else if s < -eps {
                        below = true;
                    } else {
                        on.push(l);
                    }
                }
                if above && below {
                    continue;
                }
                if above {
                    nrm = nrm.map(|x| -x);
                }
                if !seen.insert(on.clone()) {
                    continue;
                }
                let c =
                    on.iter().fold([0.0; 3], |acc, &l| [acc[0] + pts[l][0], acc[1] + pts[l][1], acc[2] + pts[l][2]]);
                let c = c.map(|x| x / on.len() as f64);
                let u = sub(pts[on[0]], c);
                let w = cross(nrm, u);
                let mut ring: Vec<(f64, usize)> = on
                    .iter()
                    .map(|&l| {
                        let d = sub(pts[l], c);
                        (dot(d, w).atan2(dot(d, u)), l)
                    })
                    .collect();
                ring.sort_by(|a, b| a.0.total_cmp(&b.0));
                out.push(ring.into_iter().map(|(_, l)| l).collect());
            }
        }
    }
    out
}

/// The underlying map of level `n`.
pub fn level_map(n: u8) -> Result<CombinatorialMap> {
    match n {
        0 | 1 => {
            let pts = embedding(n).expect("levels 0 and 1 have coordinates");
            CombinatorialMap::from_oriented_faces(pts.len(), &hull_faces(&pts))
        }
        2 => {
            let faces: Vec<Vec<usize>> =
                level2::LEVEL2_FACES.iter().map(|f| f.iter().map(|&v| v as usize).collect()).collect();
            CombinatorialMap::from_oriented_faces(96, &faces)
        }
        _ => Err(invalid(format!("level must be 0, 1 or 2, got {n}"))),
    }
}

/// Sizes of the faces across each edge of face `fi`, in boundary order.
fn neighbour_sizes(map: &CombinatorialMap, fi: usize) -> Vec<usize> {
    let faces = map.faces();
    let face_of = map.face_of_dart();
    faces[fi].iter().map(|&d| faces[face_of[d ^ 1]].len()).collect()
}

/// Hexagons whose neighbouring faces alternate between two distinct sizes.
pub fn triple_hexagons(map: &CombinatorialMap) -> Vec<usize> {
    map.faces()
        .iter()
        .enumerate()
        .filter(|(fi, f)| {
            if f.len() != 6 {
                return false;
            }
            let s = neighbour_sizes(map, *fi);
            s[0] != s[1] && (0..6).all(|i| s[i] == s[(i + 2) % 6])
        })
        .map(|(fi, _)| fi)
        .collect()
}

/// Right- and left-handed edge triples of hexagon `fi`.
pub fn hexagon_triples(map: &CombinatorialMap, fi: usize) -> [[Edge; 3]; 2] {
    let f = &map.faces()[fi];
    let s = neighbour_sizes(map, fi);
    let edge = |i: usize| key(map.tail(f[i]), map.head(f[i]));
    let even = [edge(0), edge(2), edge(4)];
    let odd = [edge(1), edge(3), edge(5)];
    if s[1] > s[0] {
        [odd, even]
    } else {
        [even, odd]
    }
}

/// Result of a matching enumeration.
#[derive(Clone, Debug, Serialize)]
pub struct MatchingSearch {
    pub matchings: Vec<Vec<Edge>>,
    /// False when enumeration stopped at the limit.
    pub exhaustive: bool,
}

fn adjacency(map: &CombinatorialMap) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); map.n_vertices()];
    for (a, b) in map.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    adj
}

struct Completion<'a> {
    adj: &'a [Vec<usize>],
    covered: Vec<bool>,
    current: Vec<Edge>,
    out: &'a mut Vec<Vec<Edge>>,
    limit: usize,
}

impl Completion<'_> {
    fn run(&mut self) -> bool {
        if self.out.len() >= self.limit {
            return false;
        }
        let Some(v) = self.covered.iter().position(|c| !c) else {
            let mut m = self.current.clone();
            m.sort_unstable();
            self.out.push(m);
            return true;
        };
        for &w in self.adj[v].clone().iter() {
            if self.covered[w] {
                continue;
            }
            self.covered[v] = true;
            self.covered[w] = true;
            self.current.push(key(v, w));
            self.run();
            self.current.pop();
            self.covered[v] = false;
            self.covered[w] = false;
            if self.out.len() >= self.limit {
                return false;
            }
        }
        true
    }
}

/// Perfect matchings with an alternating triple in every triple-carrying hexagon.
///
/// Triple choices are visited with right-handed triples first; completions in
/// lexicographic order. Stops after `limit` matchings.
pub fn find_q_matchings(map: &CombinatorialMap, triple_faces: &[usize], limit: usize) -> MatchingSearch {
    let adj = adjacency(map);
    let triples: Vec<[[Edge; 3]; 2]> = triple_faces.iter().map(|&f| hexagon_triples(map, f)).collect();
    let k = triples.len();
    let mut out = Vec::new();
    for choice in 0..(1u64 << k) {
        if out.len() >= limit {
            return MatchingSearch { matchings: out, exhaustive: false };
        }
        let mut forced: BTreeSet<Edge> = BTreeSet::new();
        for (h, t) in triples.iter().enumerate() {
            forced.extend(t[(choice >> h & 1) as usize]);
        }
        let mut covered = vec![false; map.n_vertices()];
        let mut clash = false;
        for &(a, b) in &forced {
            clash |= covered[a] || covered[b];
            covered[a] = true;
            covered[b] = true;
        }
        if clash {
            continue;
        }
        let mut c = Completion { adj: &adj, covered, current: forced.into_iter().collect(), out: &mut out, limit };
        c.run();
    }
    let exhaustive = out.len() < limit;
    MatchingSearch { matchings: out, exhaustive }
}

/// Matching search on a loaded polyhedron's own triple hexagons.
pub fn find_q_matching(p: &LoadedPolyhedron, limit: usize) -> MatchingSearch {
    find_q_matchings(&p.map, &p.triple_faces, limit)
}

/// True iff `edges` is a perfect matching of the map's vertices.
pub fn is_perfect_matching(map: &CombinatorialMap, edges: &[Edge]) -> bool {
    let all: BTreeSet<Edge> = map.edges().into_iter().map(|(a, b)| key(a, b)).collect();
    let mut covered = vec![0u32; map.n_vertices()];
    for &(a, b) in edges {
        if !all.contains(&key(a, b)) {
            return false;
        }
        covered[a] += 1;
        covered[b] += 1;
    }
    covered.iter().all(|&c| c == 1)
}

/// Q-matching condition: a perfect matching with `V/2` edges and an alternating
/// triple in every triple-carrying hexagon.
pub fn is_q_matching(map: &CombinatorialMap, triple_faces: &[usize], edges: &[Edge]) -> bool {
    let set: BTreeSet<Edge> = edges.iter().map(|&(a, b)| key(a, b)).collect();
    set.len() == map.n_vertices() / 2
        && is_perfect_matching(map, edges)
        && triple_faces.iter().all(|&f| {
            let [r, l] = hexagon_triples(map, f);
            let on: BTreeSet<Edge> = hexagon_edges(map, f).into_iter().filter(|e| set.contains(e)).collect();
            on == r.into_iter().collect() || on == l.into_iter().collect()
        })
}

fn hexagon_edges(map: &CombinatorialMap, fi: usize) -> Vec<Edge> {
    map.faces()[fi].iter().map(|&d| key(map.tail(d), map.head(d))).collect()
}

fn handedness_of(map: &CombinatorialMap, fi: usize, set: &BTreeSet<Edge>) -> Option<Handedness> {
    let [r, l] = hexagon_triples(map, fi);
    if r.iter().all(|e| set.contains(e)) {
        Some(Handedness::Right)
    } else if l.iter().all(|e| set.contains(e)) {
        Some(Handedness::Left)
    } else {
        None
    }
}

/// Face-count identities of a level.
#[derive(Clone, Debug, Serialize)]
pub struct EulerReport {
    pub n: u8,
    /// `m → f_m`.
    pub face_counts: BTreeMap<usize, usize>,
    /// `Σ (6 − m)·f_m`, which reduces to `2f₄ + f₅ − f₇ − 2f₈` here.
    pub curvature_sum: i64,
    pub curvature_residual: i64,
    pub face_total: usize,
    pub face_total_expected: usize,
    pub face_total_residual: i64,
}

impl EulerReport {
    pub fn holds(&self) -> bool {
        self.curvature_residual == 0 && self.face_total_residual == 0
    }
}

pub fn validate_euler(p: &LoadedPolyhedron) -> EulerReport {
    let face_counts = p.map.face_profile();
    let curvature_sum: i64 = face_counts.iter().map(|(&m, &f)| (6 - m as i64) * f as i64).sum();
    let face_total = face_counts.values().sum();
    let face_total_expected = 2 + 12 * (1usize << p.n);
    EulerReport {
        n: p.n,
        face_counts,
        curvature_sum,
        curvature_residual: curvature_sum - 12,
        face_total,
        face_total_expected,
        face_total_residual: face_total as i64 - face_total_expected as i64,
    }
}

/// Builds and validates level `n`.
pub fn build_level(n: u8) -> Result<LoadedPolyhedron> {
    let map = level_map(n)?;
    let triple_faces = triple_hexagons(&map);
    let triples: Vec<Edge> = triple_faces.iter().flat_map(|&f| hexagon_triples(&map, f)[0]).collect();
    let search = find_q_matchings(&map, &triple_faces, 1);
    let matching = search
        .matchings
        .into_iter()
        .next()
        .ok_or_else(|| Error::DataIntegrity(format!("level {n} has no Q-matching")))?;
    let set: BTreeSet<Edge> = matching.iter().copied().collect();
    if !triples.iter().all(|e| set.contains(e)) {
        return Err(Error::DataIntegrity(format!("level {n}: right-handed triples do not extend to a matching")));
    }
    let chirality = triple_faces.iter().map(|&f| (f, handedness_of(&map, f, &set).expect("triple present"))).collect();
    let p = LoadedPolyhedron { n, map, q_matching: matching, triple_faces, chirality };
    check_level(&p)?;
    Ok(p)
}

fn check_level(p: &LoadedPolyhedron) -> Result<()> {
    let fail = |what: &str| Err(Error::DataIntegrity(format!("level {}: {what}", p.n)));
    let scale = 1usize << p.n;
    let m = &p.map;
    if m.n_vertices() != 24 * scale || m.n_edges() != 36 * scale {
        return fail("vertex or edge count");
    }
    if m.degrees().iter().any(|&d| d != 3) {
        return fail("not 3-valent");
    }
    if m.genus() != Some(0) || !m.is_simple() {
        return fail("not a simple spherical map");
    }
    if !validate_euler(p).holds() {
        return fail("face-count identities");
    }
    if p.triple_faces.len() != 8 {
        return fail("expected eight triple-carrying hexagons");
    }
    if !is_q_matching(m, &p.triple_faces, &p.q_matching) || p.q_matching.len() != 12 * scale {
        return fail("Q-matching");
    }
    Ok(())
}

/// Verdict of a chirality flip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FlipVerdict {
    /// The flipped edge set is not a valid Q-matching.
    Degenerate,
    /// The flipped edge set is again a valid Q-matching.
    TypeUnchanged,
}

#[derive(Clone, Debug, Serialize)]
pub struct FlipReport {
    pub edges: Vec<Edge>,
    pub is_perfect_matching: bool,
    pub verdict: FlipVerdict,
    /// Whether a symmetry of the polyhedron carries the old matching onto the new one.
    pub congruent_to_original: bool,
}

/// Replaces, in each triple-carrying hexagon, the edges of `edges` lying on
/// it by the remaining edges of that hexagon.
pub fn flip_edges(map: &CombinatorialMap, triple_faces: &[usize], edges: &[Edge]) -> Vec<Edge> {
    let set: BTreeSet<Edge> = edges.iter().map(|&(a, b)| key(a, b)).collect();
    let mut removed = BTreeSet::new();
    let mut added = BTreeSet::new();
    for &f in triple_faces {
        for e in hexagon_edges(map, f) {
            if set.contains(&e) {
                removed.insert(e);
            } else {
                added.insert(e);
            }
        }
    }
    let mut out: Vec<Edge> = set.difference(&removed).copied().chain(added).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Swaps every hexagon's triple to the opposite handedness and classifies the result.
pub fn flip_chirality(p: &LoadedPolyhedron) -> FlipReport {
    let edges = flip_edges(&p.map, &p.triple_faces, &p.q_matching);
    let ok = is_q_matching(&p.map, &p.triple_faces, &edges);
    let congruent = ok && is_congruent_matching(&p.map, &p.matching_keys(), &edges);
    FlipReport {
        is_perfect_matching: is_perfect_matching(&p.map, &edges),
        verdict: if ok { FlipVerdict::TypeUnchanged } else { FlipVerdict::Degenerate },
        congruent_to_original: congruent,
        edges,
    }
}

fn is_congruent_matching(map: &CombinatorialMap, a: &BTreeSet<Edge>, b: &[Edge]) -> bool {
    let target: BTreeSet<Edge> = b.iter().map(|&(x, y)| key(x, y)).collect();
    let mirror = map.mirror();
    let mut maps: Vec<Vec<usize>> = Vec::new();
    for other in [map, &mirror] {
        for d in 0..map.n_darts() {
            if let Some(iso) = map.rooted_iso(other, 0, d) {
                maps.push(map.vertex_map(&iso, other));
            }
        }
    }
    maps.iter().any(|vm| a.iter().map(|&(x, y)| key(vm[x], vm[y])).collect::<BTreeSet<_>>() == target)
}

/// Replaces every Q-edge by a square, doubling the vertex count.
///
/// Vertex `u` with Q-dart `m` and remaining darts `a = σ(m)`, `b = σ(a)`
/// splits into `2u` (keeping `a`) and `2u+1` (keeping `b`).
pub fn expand_q_edges(p: &LoadedPolyhedron) -> Result<CombinatorialMap> {
    let m = &p.map;
    let set = p.matching_keys();
    let nv = m.n_vertices();
    let mut q_dart = vec![usize::MAX; nv];
    for d in 0..m.n_darts() {
        if set.contains(&key(m.tail(d), m.head(d))) {
            q_dart[m.tail(d)] = d;
        }
    }
    if q_dart.contains(&usize::MAX) {
        return Err(invalid("Q-matching does not cover every vertex"));
    }
    let mut b = MapBuilder::new(2 * nv);
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); 2 * nv];
    // slots per new vertex: [to partner, own dart, to sibling] for 2u,
    // [to partner, to sibling, own dart] for 2u+1.
    let mut slot = vec![[usize::MAX; 3]; 2 * nv];
    let copy_of = |d: usize| -> usize {
        let u = m.tail(d);
        let a = m.sigma(q_dart[u]);
        if d == a {
            2 * u
        } else {
            2 * u + 1
        }
    };
    for e in 0..m.n_edges() {
        let (x, y) = (2 * e, 2 * e + 1);
        if set.contains(&key(m.tail(x), m.tail(y))) {
            continue;
        }
        let (cx, cy) = (copy_of(x), copy_of(y));
        let (dx, dy) = b.add_edge(cx, cy);
        slot[cx][if cx % 2 == 0 { 1 } else { 2 }] = dx;
        slot[cy][if cy % 2 == 0 { 1 } else { 2 }] = dy;
    }
    for u in 0..nv {
        let (da, db) = b.add_edge(2 * u, 2 * u + 1);
        slot[2 * u][2] = da;
        slot[2 * u + 1][1] = db;
    }
    for &(u, v) in &set {
        let (d1, d2) = b.add_edge(2 * u, 2 * v + 1);
        slot[2 * u][0] = d1;
        slot[2 * v + 1][0] = d2;
        let (d3, d4) = b.add_edge(2 * u + 1, 2 * v);
        slot[2 * u + 1][0] = d3;
        slot[2 * v][0] = d4;
    }
    for (r, s) in rot.iter_mut().zip(&slot) {
        r.extend_from_slice(s);
    }
    b.build(&rot)
}

/// Report attached to a level transition.
#[derive(Clone, Debug, Serialize)]
pub struct LiftReport {
    pub from_level: u8,
    pub to_level: u8,
    pub vertex_ratio: f64,
    pub euler_holds: bool,
    pub q_matching_holds: bool,
    pub q_edges: usize,
    /// Whether expanding the Q-edges of the lower level reproduces the upper level.
    pub q_expansion_matches: bool,
}

/// Level `n + 1` with the degeneracy-lifting report.
pub fn next_in_sequence(n: u8) -> Result<(LoadedPolyhedron, LiftReport)> {
    if n >= 2 {
        return Err(invalid(format!("no level after {n}")));
    }
    let lower = build_level(n)?;
    let upper = build_level(n + 1)?;
    let expanded = expand_q_edges(&lower)?;
    let report = LiftReport {
        from_level: n,
        to_level: n + 1,
        vertex_ratio: upper.n_vertices() as f64 / lower.n_vertices() as f64,
        euler_holds: validate_euler(&upper).holds(),
        q_matching_holds: is_q_matching(&upper.map, &upper.triple_faces, &upper.q_matching),
        q_edges: upper.q_matching.len(),
        q_expansion_matches: expanded.is_isomorphic_map(&upper.map),
    };
    Ok((upper, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn level(n: u8) -> LoadedPolyhedron {
        build_level(n).unwrap()
    }

    #[test]
    fn level_counts() {
        for (n, v, e, f) in [(0u8, 24, 36, 14), (1, 48, 72, 26), (2, 96, 144, 50)] {
            let p = level(n);
            assert_eq!((p.map.n_vertices(), p.map.n_edges(), p.map.n_faces()), (v, e, f));
        }
        assert_eq!(level(0).map.face_profile(), BTreeMap::from([(4, 6), (6, 8)]));
        assert_eq!(level(1).map.face_profile(), BTreeMap::from([(4, 12), (6, 8), (8, 6)]));
        assert_eq!(level(2).map.face_profile(), BTreeMap::from([(5, 24), (6, 14), (7, 12)]));
    }

    #[test]
    fn euler_identities() {
        for n in 0..3 {
            let r = validate_euler(&level(n));
            assert_eq!(r.curvature_sum, 12);
            assert!(r.holds());
        }
    }

    #[test]
    fn matching_sizes() {
        for (n, size) in [(0u8, 12), (1, 24), (2, 48)] {
            let p = level(n);
            assert_eq!(p.q_matching.len(), size);
            assert!(is_perfect_matching(&p.map, &p.q_matching));
            assert!(p.chirality.iter().all(|&(_, h)| h == Handedness::Right));
        }
    }

    #[test]
    fn level0_matching_separates_hexagons() {
        let p = level(0);
        let faces = p.map.faces();
        let face_of = p.map.face_of_dart();
        for d in 0..p.map.n_darts() {
            let e = key(p.map.tail(d), p.map.head(d));
            if p.matching_keys().contains(&e) {
                assert_eq!(faces[face_of[d]].len(), 6);
            }
        }
        let all = find_q_matching(&p, 1000);
        assert!(all.exhaustive);
        assert_eq!(all.matchings.len(), 1);
    }

    #[test]
    fn flips() {
        let f0 = flip_chirality(&level(0));
        assert_eq!(f0.verdict, FlipVerdict::Degenerate);
        assert_eq!(f0.edges.len(), 24);
        assert!(!f0.is_perfect_matching);
        let f2 = flip_chirality(&level(2));
        assert_eq!(f2.verdict, FlipVerdict::TypeUnchanged);
        assert_eq!(f2.edges.len(), 48);
    }

    #[test]
    fn level1_flip_is_a_matching() {
        let f1 = flip_chirality(&level(1));
        assert!(f1.is_perfect_matching);
        assert_eq!(f1.verdict, FlipVerdict::TypeUnchanged);
        assert!(!f1.congruent_to_original);
    }

    #[test]
    fn matching_counts() {
        // Every choice of handedness extends in exactly one way above level 0.
        for (n, count) in [(0u8, 1), (1, 256), (2, 256)] {
            let s = find_q_matching(&level(n), 10_000);
            assert!(s.exhaustive);
            assert_eq!(s.matchings.len(), count);
        }
    }

    #[test]
    fn double_flip_restores() {
        for n in 0..3 {
            let p = level(n);
            let once = flip_edges(&p.map, &p.triple_faces, &p.q_matching);
            let twice = flip_edges(&p.map, &p.triple_faces, &once);
            assert_eq!(twice.into_iter().collect::<BTreeSet<_>>(), p.matching_keys());
        }
    }

    #[test]
    fn expansion_of_level0_is_level1() {
        let (upper, rep) = next_in_sequence(0).unwrap();
        assert_eq!(upper.n_vertices(), 48);
        assert_eq!(rep.vertex_ratio, 2.0);
        assert!(rep.q_expansion_matches);
        let (top, rep) = next_in_sequence(1).unwrap();
        assert_eq!(top.n_vertices(), 96);
        assert_eq!(rep.q_edges, 48);
        assert!(next_in_sequence(2).is_err());
    }

    #[test]
    fn dual_profiles() {
        let want = [
            BTreeMap::from([(4, 6), (6, 8)]),
            BTreeMap::from([(4, 12), (6, 8), (8, 6)]),
            BTreeMap::from([(5, 24), (6, 14), (7, 12)]),
        ];
        for n in 0..3 {
            assert_eq!(level(n).map.dual().degree_profile(), want[n as usize]);
        }
    }

    #[test]
    fn level2_has_alternating_belt() {
        // A closed 24-cycle of faces alternating pentagon / heptagon.
        let m = level_map(2).unwrap();
        let faces = m.faces();
        let face_of = m.face_of_dart();
        let size = |f: usize| faces[f].len();
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); faces.len()];
        for d in 0..m.n_darts() {
            let (a, b) = (face_of[d], face_of[d ^ 1]);
            if size(a) + size(b) == 12 && size(a) != 6 {
                adj[a].insert(b);
            }
        }
        let start = (0..faces.len()).find(|&f| size(f) == 7).unwrap();
        fn dfs(adj: &[BTreeSet<usize>], path: &mut Vec<usize>, on: &mut Vec<bool>) -> bool {
            let last = *path.last().unwrap();
            if path.len() == 24 {
                return adj[last].contains(&path[0]);
            }
            for &w in &adj[last] {
                if !on[w] {
                    on[w] = true;
                    path.push(w);
                    if dfs(adj, path, on) {
                        return true;
                    }
                    path.pop();
                    on[w] = false;
                }
            }
            false
        }
        let mut on = vec![false; faces.len()];
        on[start] = true;
        let mut path = vec![start];
        assert!(dfs(&adj, &mut path, &mut on));
    }

    #[test]
    fn level2_hexagons_are_isolated() {
        let m = level_map(2).unwrap();
        let faces = m.faces();
        let face_of = m.face_of_dart();
        for d in 0..m.n_darts() {
            assert!(!(faces[face_of[d]].len() == 6 && faces[face_of[d ^ 1]].len() == 6));
        }
        assert_eq!(triple_hexagons(&m).len(), 8);
    }

    #[test]
    fn embeddings_have_unit_edges() {
        for n in 0..2u8 {
            let pts = embedding(n).unwrap();
            let m = level_map(n).unwrap();
            for (a, b) in m.edges() {
                let d = sub(pts[a], pts[b]);
                assert!((dot(d, d).sqrt() - 1.0).abs() < 1e-12);
            }
        }
        assert!(embedding(2).is_none());
    }
}
