//! Four-dimensional polytopes: voltage covers of the loaded polyhedra, the
//! geometric `{240}` built from icosians, F4 Wythoff orbits and product-complex
//! cell counts.

mod cover;
mod f4;
mod icosian;
mod product;

use std::collections::{BTreeMap, VecDeque};

use nalgebra::DMatrix;
use serde::Serialize;

pub use cover::{find_voltages, lift_cover, lift_with, VoltageAssignment};
pub use f4::{f4_orbit, hull_counts, F4Orbit, F4_LABELS};
pub use icosian::{
    binary_icosahedral, build_240_geometric, mirror_report, screw_orbit_partition, CandidateKind, Geometric240,
    MirrorReport, ScrewReport, SIGMA_240,
};
pub use product::product_cell_counts;

/// Vertex/edge graph of a 4D polytope, optionally with coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct Polytope4D {
    pub n_vertices: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<[f64; 4]>>,
    pub provenance: String,
}

/// Summary statistics of a polytope graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphStats {
    pub vertices: usize,
    pub edges: usize,
    pub degree_profile: BTreeMap<usize, usize>,
    pub connected: bool,
    pub bipartite: bool,
    pub girth: Option<usize>,
}

impl Polytope4D {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n_vertices];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn degree_profile(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for l in self.adjacency() {
            *out.entry(l.len()).or_insert(0) += 1;
        }
        out
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adjacency().iter().all(|l| l.len() == k)
    }

    fn colouring(&self) -> (bool, bool) {
        let adj = self.adjacency();
        let mut colour = vec![u8::MAX; self.n_vertices];
        let mut bipartite = true;
        let mut components = 0;
        for s in 0..self.n_vertices {
            if colour[s] != u8::MAX {
                continue;
            }
            components += 1;
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        queue.push_back(w);
                    } else if colour[w] == colour[v] {
                        bipartite = false;
                    }
                }
            }
        }
        (components <= 1, bipartite)
    }

    pub fn is_connected(&self) -> bool {
        self.colouring().0
    }

    pub fn is_bipartite(&self) -> bool {
        self.colouring().1
    }

    /// Length of a shortest cycle, by breadth-first search from every vertex.
    pub fn girth(&self) -> Option<usize> {
        let adj = self.adjacency();
        let mut best = usize::MAX;
        for s in 0..self.n_vertices {
            let mut dist = vec![usize::MAX; self.n_vertices];
            let mut parent = vec![usize::MAX; self.n_vertices];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                if 2 * dist[v] + 1 >= best {
                    break;
                }
                let mut skipped_parent = false;
                for &w in &adj[v] {
                    if w == parent[v] && !skipped_parent {
                        skipped_parent = true;
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else {
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    pub fn stats(&self) -> GraphStats {
        let (connected, bipartite) = self.colouring();
        GraphStats {
            vertices: self.n_vertices,
            edges: self.edges.len(),
            degree_profile: self.degree_profile(),
            connected,
            bipartite,
            girth: self.girth(),
        }
    }

    /// Distinct adjacency eigenvalues (rounded to 1e-6) with multiplicities,
    /// in decreasing order.
    pub fn spectrum(&self) -> Vec<(f64, usize)> {
        let n = self.n_vertices;
        let mut a = DMatrix::<f64>::zeros(n, n);
        for &(x, y) in &self.edges {
            a[(x, y)] += 1.0;
            a[(y, x)] += 1.0;
        }
        let mut ev: Vec<f64> = a.symmetric_eigen().eigenvalues.iter().copied().collect();
        ev.sort_by(|x, y| y.total_cmp(x));
        let mut out: Vec<(f64, usize)> = Vec::new();
        for e in ev {
            match out.last_mut() {
                Some((v, m)) if (*v - e).abs() < 1e-6 => *m += 1,
                _ => out.push((e, 1)),
            }
        }
        for (v, _) in &mut out {
            *v = (*v * 1e6).round() / 1e6;
        }
        out
    }
}

/// Cover of level 0 versus the geometric `{240}`.
#[derive(Clone, Debug, Serialize)]
pub struct CoverComparison {
    pub cover: GraphStats,
    pub geometric: GraphStats,
    pub same_stats: bool,
    pub same_spectrum: bool,
}

pub fn compare_cover_with_geometric(cover: &Polytope4D, geometric: &Polytope4D) -> CoverComparison {
    let (a, b) = (cover.stats(), geometric.stats());
    let (sa, sb) = (cover.spectrum(), geometric.spectrum());
    let same_spectrum = sa.len() == sb.len() && sa.iter().zip(&sb).all(|(x, y)| x.1 == y.1 && (x.0 - y.0).abs() < 1e-5);
    CoverComparison { same_stats: a == b, cover: a, geometric: b, same_spectrum }
}
