// Small fixed-size matrix loops read best with explicit indices.
#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::Polytope4D;
use crate::error::{Error, Result};
use crate::exact::QuatF;

const TOL: f64 = 1e-9;

/// The `σ` found by [`build_240_geometric`], frozen (a normalised 600-cell cell centre).
pub const SIGMA_240: [f64; 4] = [-0.925614793410958, -0.35355339059327373, -0.1350453783688632, 0.0];

fn key(q: QuatF) -> [i64; 4] {
    q.to_array().map(|x| (x * 1e7).round() as i64)
}

/// The 120 unit icosians generated by `½(1+i+j+k)` and `½(φ + φ⁻¹i + j)`.
pub fn binary_icosahedral() -> Vec<QuatF> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let gens = [QuatF::new(0.5, 0.5, 0.5, 0.5), QuatF::new(phi / 2.0, 0.5 / phi, 0.5, 0.0)];
    let mut seen: HashSet<[i64; 4]> = HashSet::new();
    let mut out = vec![QuatF::one()];
    seen.insert(key(QuatF::one()));
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for g in gens {
            let y = x * g;
            if seen.insert(key(y)) {
                out.push(y);
            }
        }
        i += 1;
    }
    out.sort_by(|a, b| a.to_array().partial_cmp(&b.to_array()).unwrap());
    out
}

/// Which 600-cell element a candidate `σ` is the centre of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateKind {
    EdgeMidpoint,
    FaceCentre,
    CellCentre,
}

/// Normalised centres of the edges, triangles and tetrahedra of the 600-cell on `verts`.
fn candidates(verts: &[QuatF]) -> Vec<(CandidateKind, QuatF)> {
    let n = verts.len();
    let mut d_min = f64::INFINITY;
    for a in 0..n {
        for b in a + 1..n {
            d_min = d_min.min(verts[a].distance(verts[b]));
        }
    }
    let adj: Vec<Vec<bool>> =
        (0..n).map(|a| (0..n).map(|b| a != b && (verts[a].distance(verts[b]) - d_min).abs() < TOL).collect()).collect();
    let centre = |ids: &[usize]| ids.iter().fold(QuatF::default(), |s, &i| s + verts[i]).normalized();
    let mut out = Vec::new();
    let mut faces = Vec::new();
    let mut cells = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !adj[a][b] {
                continue;
            }
            out.push((CandidateKind::EdgeMidpoint, centre(&[a, b])));
            for c in b + 1..n {
                if !(adj[a][c] && adj[b][c]) {
                    continue;
                }
                faces.push((CandidateKind::FaceCentre, centre(&[a, b, c])));
                for d in c + 1..n {
                    if adj[a][d] && adj[b][d] && adj[c][d] {
                        cells.push((CandidateKind::CellCentre, centre(&[a, b, c, d])));
                    }
                }
            }
        }
    }
    out.extend(faces);
    out.extend(cells);
    out
}

/// Minimal chord and the graph of vertex pairs attaining it.
fn min_chord_graph(pts: &[QuatF]) -> (f64, Vec<(usize, usize)>) {
    let n = pts.len();
    let mut d_min = f64::INFINITY;
    for a in 0..n {
        for b in a + 1..n {
            d_min = d_min.min(pts[a].distance(pts[b]));
        }
    }
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if (pts[a].distance(pts[b]) - d_min).abs() < TOL {
                edges.push((a, b));
            }
        }
    }
    (d_min, edges)
}

/// The 240-point set `2I ∪ σ·2I` with its minimal-chord graph.
#[derive(Clone, Debug, Serialize)]
pub struct Geometric240 {
    pub polytope: Polytope4D,
    pub sigma: [f64; 4],
    pub sigma_kind: CandidateKind,
    pub min_chord: f64,
    /// Candidates examined, including the accepted one.
    pub candidates_tried: usize,
}

/// `2I ∪ σ·2I` for a given `σ`.
pub fn coset_union(sigma: QuatF) -> Vec<QuatF> {
    let group = binary_icosahedral();
    let mut pts = group.clone();
    pts.extend(group.iter().map(|&g| sigma * g));
    pts
}

/// Searches edge midpoints, then face centres, then cell centres of the
/// 600-cell for a `σ` making the minimal-chord graph of `2I ∪ σ·2I` 4-regular.
pub fn build_240_geometric() -> Result<Geometric240> {
    let group = binary_icosahedral();
    let mut best: BTreeMap<usize, usize> = BTreeMap::new();
    for (tried, (kind, sigma)) in candidates(&group).into_iter().enumerate() {
        let pts = coset_union(sigma);
        let distinct: HashSet<[i64; 4]> = pts.iter().map(|&p| key(p)).collect();
        if distinct.len() != 240 {
            continue;
        }
        let (min_chord, edges) = min_chord_graph(&pts);
        let p = Polytope4D {
            n_vertices: 240,
            edges,
            vertices: Some(pts.iter().map(|q| q.to_array()).collect()),
            provenance: format!("2I ∪ σ·2I, σ a normalised 600-cell {kind:?}"),
        };
        if p.is_regular(4) {
            return Ok(Geometric240 {
                polytope: p,
                sigma: sigma.to_array(),
                sigma_kind: kind,
                min_chord,
                candidates_tried: tried + 1,
            });
        }
        if best.is_empty() || p.degree_profile().keys().max() == Some(&4) {
            best = p.degree_profile();
        }
    }
    Err(Error::Construction(format!("no 4-regular σ found; last degree profile {best:?}")))
}

/// Result of applying a double rotation to a vertex set.
#[derive(Clone, Debug, Serialize)]
pub struct ScrewReport {
    pub alpha_deg: f64,
    pub beta_deg: f64,
    pub is_symmetry: bool,
    /// Vertices whose image is not a vertex.
    pub unmatched: usize,
    /// Orbit size → number of orbits, when the rotation is a symmetry.
    pub orbit_sizes: BTreeMap<usize, usize>,
}

/// Applies `[R_wx(α), R_yz(β)]` and, if it permutes `verts`, reports its orbits.
pub fn screw_orbit_partition(verts: &[[f64; 4]], alpha_deg: f64, beta_deg: f64) -> ScrewReport {
    let (sa, ca) = alpha_deg.to_radians().sin_cos();
    let (sb, cb) = beta_deg.to_radians().sin_cos();
    let rot =
        |v: &[f64; 4]| [ca * v[0] - sa * v[1], sa * v[0] + ca * v[1], cb * v[2] - sb * v[3], sb * v[2] + cb * v[3]];
    let close = |a: &[f64; 4], b: &[f64; 4]| a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-7);
    let image: Vec<Option<usize>> = verts
        .iter()
        .map(|v| {
            let r = rot(v);
            verts.iter().position(|w| close(&r, w))
        })
        .collect();
    let unmatched = image.iter().filter(|i| i.is_none()).count();
    let mut orbit_sizes = BTreeMap::new();
    if unmatched == 0 {
        let mut seen = vec![false; verts.len()];
        for s in 0..verts.len() {
            let mut len = 0;
            let mut v = s;
            while !seen[v] {
                seen[v] = true;
                len += 1;
                v = image[v].expect("all matched");
            }
            if len > 0 {
                *orbit_sizes.entry(len).or_insert(0) += 1;
            }
        }
    }
    ScrewReport { alpha_deg, beta_deg, is_symmetry: unmatched == 0, unmatched, orbit_sizes }
}

/// Orthogonal maps between a vertex set and its mirror image `q ↦ q̄`.
#[derive(Clone, Debug, Serialize)]
pub struct MirrorReport {
    /// Orthogonal maps of the set onto itself.
    pub symmetry_order: usize,
    /// Those among them with determinant +1.
    pub rotation_order: usize,
    /// The mirror image is the same point set.
    pub mirror_is_same_set: bool,
    /// Some rotation carries the set onto its mirror image (the set is achiral).
    pub mirror_is_rotation_image: bool,
}

fn lookup(points: &[[f64; 4]]) -> impl Fn(&[f64; 4]) -> bool + '_ {
    let keys: HashSet<[i64; 4]> = points.iter().map(|p| p.map(|x| (x * 1e6).round() as i64)).collect();
    move |q: &[f64; 4]| {
        keys.contains(&q.map(|x| (x * 1e6).round() as i64))
            || points.iter().any(|p| p.iter().zip(q).all(|(a, b)| (a - b).abs() < 1e-7))
    }
}

/// Orthogonal maps `T` with `T(from) = to`, each paired with `det T`.
///
/// `T` is pinned down by the image of one vertex and three of its
/// minimal-chord neighbours; every Gram-preserving choice is tried.
fn orthogonal_maps(from: &[[f64; 4]], to: &[[f64; 4]], edges: &[(usize, usize)]) -> Vec<f64> {
    use nalgebra::Matrix4;
    let n = from.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let col = |m: &mut Matrix4<f64>, c: usize, v: &[f64; 4]| {
        for r in 0..4 {
            m[(r, c)] = v[r];
        }
    };
    // Frame in `from`: vertex 0 and three neighbours spanning R⁴ with it.
    let nb = &adj[0];
    let mut frame = None;
    'search: for a in 0..nb.len() {
        for b in a + 1..nb.len() {
            for c in b + 1..nb.len() {
                let mut m = Matrix4::zeros();
                for (k, v) in [0, nb[a], nb[b], nb[c]].iter().enumerate() {
                    col(&mut m, k, &from[*v]);
                }
                if m.determinant().abs() > 1e-6 {
                    frame = Some(([0, nb[a], nb[b], nb[c]], m));
                    break 'search;
                }
            }
        }
    }
    let Some((idx, src)) = frame else { return Vec::new() };
    let Some(src_inv) = src.try_inverse() else { return Vec::new() };
    let dot = |a: &[f64; 4], b: &[f64; 4]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let gram = |v: [&[f64; 4]; 4]| {
        let mut g = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                g[i][j] = dot(v[i], v[j]);
            }
        }
        g
    };
    let g_src = gram(idx.map(|i| &from[i]));
    let contains = lookup(to);
    // Neighbours in `to` by the same chord length.
    let chord2 = (0..4).map(|k| (from[0][k] - from[idx[1]][k]).powi(2)).sum::<f64>();
    let mut found = Vec::new();
    for p in 0..to.len() {
        let near: Vec<usize> = (0..to.len())
            .filter(|&q| q != p && ((0..4).map(|k| (to[p][k] - to[q][k]).powi(2)).sum::<f64>() - chord2).abs() < 1e-9)
            .collect();
        for &a in &near {
            for &b in &near {
                for &c in &near {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    let img = [p, a, b, c];
                    let g = gram(img.map(|i| &to[i]));
                    if (0..4).any(|i| (0..4).any(|j| (g[i][j] - g_src[i][j]).abs() > 1e-9)) {
                        continue;
                    }
                    let mut dst = Matrix4::zeros();
                    for (k, v) in img.iter().enumerate() {
                        col(&mut dst, k, &to[*v]);
                    }
                    let t = dst * src_inv;
                    let maps_all = from.iter().all(|v| {
                        let w = t * nalgebra::Vector4::from(*v);
                        contains(&[w[0], w[1], w[2], w[3]])
                    });
                    if maps_all {
                        found.push(t.determinant());
                    }
                }
            }
        }
    }
    found
}

/// Compares the minimal-chord vertex set with its quaternion-conjugate mirror.
pub fn mirror_report(p: &Polytope4D) -> Result<MirrorReport> {
    let verts = p.vertices.as_ref().ok_or_else(|| Error::InvalidInput("mirror comparison needs coordinates".into()))?;
    let mirror: Vec<[f64; 4]> = verts.iter().map(|v| [v[0], -v[1], -v[2], -v[3]]).collect();
    let own = orthogonal_maps(verts, verts, &p.edges);
    let contains = lookup(verts);
    let to_mirror = orthogonal_maps(verts, &mirror, &p.edges);
    Ok(MirrorReport {
        symmetry_order: own.len(),
        rotation_order: own.iter().filter(|d| **d > 0.0).count(),
        mirror_is_same_set: mirror.iter().all(contains),
        mirror_is_rotation_image: to_mirror.iter().any(|d| *d > 0.0),
    })
}
