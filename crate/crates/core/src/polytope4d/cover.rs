use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::Polytope4D;
use crate::error::{invalid, Error, Result};
use crate::polyhedra::{Edge, LoadedPolyhedron};

/// Fiber offsets of a `Z_q` cover over a loaded polyhedron.
#[derive(Clone, Debug, Serialize)]
pub struct VoltageAssignment {
    pub n: u8,
    pub q: usize,
    /// Q-edges `(u, v)`, oriented by their map darts.
    pub q_edges: Vec<Edge>,
    /// Offset `δ` on each remaining edge `(a, b)` with `a < b`, read from `a` to `b`.
    pub voltages: BTreeMap<Edge, usize>,
    /// Number of edge orbits the search ran over.
    pub orbits: usize,
    /// Assignments examined before this one was accepted.
    pub tried: usize,
}

/// Builds the cover for a given assignment without validating it.
///
/// Vertex `(u, s)` gets id `u·q + s`.
pub fn lift_with(base: &LoadedPolyhedron, a: &VoltageAssignment) -> Polytope4D {
    let q = a.q;
    let id = |u: usize, s: usize| u * q + s % q;
    let mut edges = Vec::with_capacity(2 * q * base.n_vertices());
    for &(u, v) in &a.q_edges {
        for s in 0..q {
            edges.push((id(u, s), id(v, s)));
            edges.push((id(u, s), id(v, s + q - 1)));
        }
    }
    for (&(u, w), &d) in &a.voltages {
        for s in 0..q {
            edges.push((id(u, s), id(w, s + d)));
        }
    }
    Polytope4D {
        n_vertices: q * base.n_vertices(),
        edges,
        vertices: None,
        provenance: format!("Z_{q} voltage cover of level {}", base.n),
    }
}

fn is_valid(p: &Polytope4D) -> bool {
    let simple = {
        let mut seen = BTreeSet::new();
        p.edges.iter().all(|&(a, b)| a != b && seen.insert((a.min(b), a.max(b))))
    };
    simple && p.is_regular(4) && p.is_connected()
}

/// Orientation-preserving map automorphisms that preserve the Q-matching,
/// as vertex permutations.
fn matching_symmetries(base: &LoadedPolyhedron) -> Vec<Vec<usize>> {
    let keys = base.matching_keys();
    base.map
        .automorphisms()
        .iter()
        .map(|d| base.map.vertex_map(d, &base.map))
        .filter(|vm| keys.iter().all(|&(a, b)| keys.contains(&(vm[a].min(vm[b]), vm[a].max(vm[b])))))
        .collect()
}

/// Searches voltages constant on edge orbits of the matching-preserving
/// symmetry group, in lexicographic order of orbit values, and returns the
/// first one giving a simple connected 4-regular cover.
pub fn find_voltages(base: &LoadedPolyhedron, q: usize, max_tries: usize) -> Result<VoltageAssignment> {
    if q != 10 && q != 12 {
        return Err(invalid(format!("q must be 10 or 12, got {q}")));
    }
    let keys = base.matching_keys();
    let q_edges: Vec<Edge> = (0..base.map.n_edges())
        .map(|e| (base.map.tail(2 * e), base.map.head(2 * e)))
        .filter(|&(a, b)| keys.contains(&(a.min(b), a.max(b))))
        .collect();
    let plain: Vec<Edge> =
        base.map.edges().into_iter().map(|(a, b)| (a.min(b), a.max(b))).filter(|e| !keys.contains(e)).collect();
    let syms = matching_symmetries(base);

    // Orbit representatives and, for each edge, (orbit, same orientation?) per symmetry image.
    let mut orbit_of: BTreeMap<Edge, usize> = BTreeMap::new();
    let mut reps: Vec<Edge> = Vec::new();
    for &e in &plain {
        if orbit_of.contains_key(&e) {
            continue;
        }
        let o = reps.len();
        reps.push(e);
        for vm in &syms {
            let (a, b) = (vm[e.0], vm[e.1]);
            orbit_of.entry((a.min(b), a.max(b))).or_insert(o);
        }
    }

    let mut tried = 0;
    let mut values = vec![0usize; reps.len()];
    loop {
        if tried >= max_tries {
            break;
        }
        tried += 1;
        if let Some(voltages) = transport(&reps, &values, &syms, q) {
            let a = VoltageAssignment { n: base.n, q, q_edges: q_edges.clone(), voltages, orbits: reps.len(), tried };
            if is_valid(&lift_with(base, &a)) {
                return Ok(a);
            }
        }
        // Next tuple in lexicographic order (last orbit varies fastest).
        let mut i = values.len();
        loop {
            if i == 0 {
                return Err(Error::Construction(format!("no valid voltage assignment for level {} and q={q}", base.n)));
            }
            i -= 1;
            values[i] += 1;
            if values[i] < q {
                break;
            }
            values[i] = 0;
        }
    }
    Err(Error::Construction(format!("voltage search stopped after {max_tries} assignments")))
}

/// Spreads representative values over their orbits; `None` if a symmetry
/// forces two different values onto the same oriented edge.
fn transport(reps: &[Edge], values: &[usize], syms: &[Vec<usize>], q: usize) -> Option<BTreeMap<Edge, usize>> {
    let mut out: BTreeMap<Edge, usize> = BTreeMap::new();
    for (&(a, b), &d) in reps.iter().zip(values) {
        for vm in syms {
            let (x, y) = (vm[a], vm[b]);
            let (k, v) = if x < y { ((x, y), d) } else { ((y, x), (q - d) % q) };
            match out.get(&k) {
                Some(&old) if old != v => return None,
                _ => {
                    out.insert(k, v);
                }
            }
        }
    }
    Some(out)
}

/// Lifts a loaded polyhedron to its `Z_q` cover using the first valid voltages.
pub fn lift_cover(base: &LoadedPolyhedron, q: usize) -> Result<(Polytope4D, VoltageAssignment)> {
    let a = find_voltages(base, q, 10_000)?;
    Ok((lift_with(base, &a), a))
}
