//! Orientable combinatorial maps given by rotation systems.
//!
//! Edge `e` owns the darts `2e` and `2e+1`, so the edge involution is
//! `alpha(d) = d ^ 1`. `sigma(d)` is the next dart counter-clockwise around
//! the tail of `d`, and faces are the cycles of `phi(d) = sigma(alpha(d))`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use petgraph::graph::{NodeIndex, UnGraph};

use crate::error::{invalid, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialMap {
    n_vertices: usize,
    vert: Vec<usize>,
    sigma: Vec<usize>,
}

impl CombinatorialMap {
    /// Builds a map from dart tails and the vertex rotation.
    pub fn from_rotation(n_vertices: usize, vert: Vec<usize>, sigma: Vec<usize>) -> Result<Self> {
        let n = sigma.len();
        if n % 2 != 0 || vert.len() != n {
            return Err(invalid("dart arrays must have equal, even length"));
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || std::mem::replace(&mut seen[s], true) {
                return Err(invalid("sigma is not a permutation"));
            }
        }
        for d in 0..n {
            if vert[d] >= n_vertices || vert[sigma[d]] != vert[d] {
                return Err(invalid(format!("sigma moves dart {d} off its vertex")));
            }
        }
        let m = Self { n_vertices, vert, sigma };
        let mut cycles = vec![0usize; n_vertices];
        let mut visited = vec![false; n];
        for d in 0..n {
            if !visited[d] {
                cycles[m.vert[d]] += 1;
                let mut x = d;
                while !visited[x] {
                    visited[x] = true;
                    x = m.sigma[x];
                }
            }
        }
        if cycles.iter().any(|&c| c > 1) {
            return Err(invalid("a vertex carries more than one rotation cycle"));
        }
        Ok(m)
    }

    /// Builds a map from faces listed as counter-clockwise vertex cycles.
    ///
    /// Every undirected edge must occur exactly twice, once in each direction.
    /// Edges are numbered by first occurrence.
    pub fn from_oriented_faces(n_vertices: usize, faces: &[Vec<usize>]) -> Result<Self> {
        let mut dart_of: HashMap<(usize, usize), usize> = HashMap::new();
        let mut n_edges = 0usize;
        let mut pending: Vec<((usize, usize), (usize, usize))> = Vec::new();
        for f in faces {
            let k = f.len();
            if k < 1 {
                return Err(invalid("empty face"));
            }
            for i in 0..k {
                let (a, b) = (f[i], f[(i + 1) % k]);
                if a >= n_vertices || b >= n_vertices {
                    return Err(invalid("face vertex out of range"));
                }
                if dart_of.contains_key(&(a, b)) {
                    return Err(invalid(format!("directed edge {a}->{b} occurs twice")));
                }
                let d = if let Some(&r) = dart_of.get(&(b, a)) {
                    r ^ 1
                } else {
                    n_edges += 1;
                    2 * (n_edges - 1)
                };
                dart_of.insert((a, b), d);
                pending.push(((a, b), (b, f[(i + 2) % k])));
            }
        }
        let n = 2 * n_edges;
        let mut vert = vec![usize::MAX; n];
        for &(a, b) in dart_of.keys() {
            vert[dart_of[&(a, b)]] = a;
        }
        if vert.contains(&usize::MAX) {
            return Err(invalid("some edge occurs in only one direction"));
        }
        let mut next = vec![0usize; n];
        for ((a, b), nb) in pending {
            next[dart_of[&(a, b)]] = dart_of[&nb];
        }
        // sigma(x) = next_in_face(alpha(x))
        let sigma: Vec<usize> = (0..n).map(|x| next[x ^ 1]).collect();
        Self::from_rotation(n_vertices, vert, sigma)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn n_edges(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn sigma(&self, d: usize) -> usize {
        self.sigma[d]
    }

    pub fn alpha(&self, d: usize) -> usize {
        d ^ 1
    }

    pub fn phi(&self, d: usize) -> usize {
        self.sigma[d ^ 1]
    }

    pub fn tail(&self, d: usize) -> usize {
        self.vert[d]
    }

    pub fn head(&self, d: usize) -> usize {
        self.vert[d ^ 1]
    }

    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        (self.vert[2 * e], self.vert[2 * e + 1])
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n_edges()).map(|e| self.edge_endpoints(e)).collect()
    }

    /// Darts leaving `v` in counter-clockwise order.
    pub fn darts_at(&self, v: usize) -> Vec<usize> {
        let Some(start) = (0..self.n_darts()).find(|&d| self.vert[d] == v) else {
            return Vec::new();
        };
        let mut out = vec![start];
        let mut x = self.sigma[start];
        while x != start {
            out.push(x);
            x = self.sigma[x];
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n_vertices];
        for &v in &self.vert {
            deg[v] += 1;
        }
        deg
    }

    /// Number of vertices of each degree.
    pub fn degree_profile(&self) -> BTreeMap<usize, usize> {
        let mut p = BTreeMap::new();
        for d in self.degrees() {
            *p.entry(d).or_insert(0) += 1;
        }
        p
    }

    /// Face dart cycles, each starting at its smallest dart, ordered by that dart.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let n = self.n_darts();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for d in 0..n {
            if seen[d] {
                continue;
            }
            let mut f = Vec::new();
            let mut x = d;
            while !seen[x] {
                seen[x] = true;
                f.push(x);
                x = self.phi(x);
            }
            out.push(f);
        }
        out
    }

    /// Face boundaries as vertex cycles (counter-clockwise).
    pub fn face_vertices(&self) -> Vec<Vec<usize>> {
        self.faces().iter().map(|f| f.iter().map(|&d| self.vert[d]).collect()).collect()
    }

    /// Face index of every dart.
    pub fn face_of_dart(&self) -> Vec<usize> {
        let mut out = vec![0; self.n_darts()];
        for (i, f) in self.faces().iter().enumerate() {
            for &d in f {
                out[d] = i;
            }
        }
        out
    }

    pub fn n_faces(&self) -> usize {
        self.faces().len()
    }

    /// Number of faces of each size.
    pub fn face_profile(&self) -> BTreeMap<usize, usize> {
        let mut p = BTreeMap::new();
        for f in self.faces() {
            *p.entry(f.len()).or_insert(0) += 1;
        }
        p
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.n_vertices as i64 - self.n_edges() as i64 + self.n_faces() as i64
    }

    /// Genus of a connected map.
    pub fn genus(&self) -> Option<i64> {
        let chi = self.euler_characteristic();
        (self.is_connected() && chi % 2 == 0 && chi <= 2).then_some((2 - chi) / 2)
    }

    pub fn is_connected(&self) -> bool {
        if self.n_vertices == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n_vertices];
        for (a, b) in self.edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.n_vertices];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n_vertices
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut set = std::collections::HashSet::new();
        self.edges().into_iter().all(|(a, b)| a != b && set.insert((a.min(b), a.max(b))))
    }

    /// Map with the listed edges deleted; vertices keep their indices.
    pub fn remove_edges(&self, removed: &[usize]) -> Self {
        let mut gone = vec![false; self.n_edges()];
        for &e in removed {
            gone[e] = true;
        }
        let mut new_index = vec![usize::MAX; self.n_edges()];
        let mut k = 0;
        for e in 0..self.n_edges() {
            if !gone[e] {
                new_index[e] = k;
                k += 1;
            }
        }
        let nd = |d: usize| 2 * new_index[d / 2] + (d & 1);
        let mut vert = vec![0; 2 * k];
        let mut sigma = vec![0; 2 * k];
        for d in 0..self.n_darts() {
            if gone[d / 2] {
                continue;
            }
            let mut s = self.sigma[d];
            while gone[s / 2] {
                s = self.sigma[s];
            }
            vert[nd(d)] = self.vert[d];
            sigma[nd(d)] = nd(s);
        }
        Self { n_vertices: self.n_vertices, vert, sigma }
    }

    /// Dual map: faces become vertices, the face cycles become rotations.
    pub fn dual(&self) -> Self {
        let face_of = self.face_of_dart();
        let n_faces = face_of.iter().copied().max().map_or(0, |m| m + 1);
        let sigma = (0..self.n_darts()).map(|d| self.phi(d)).collect();
        Self { n_vertices: n_faces, vert: face_of, sigma }
    }

    /// Mirror image: every rotation reversed.
    pub fn mirror(&self) -> Self {
        let mut sigma = vec![0; self.n_darts()];
        for d in 0..self.n_darts() {
            sigma[self.sigma[d]] = d;
        }
        Self { n_vertices: self.n_vertices, vert: self.vert.clone(), sigma }
    }

    /// Underlying graph (parallel edges kept).
    pub fn skeleton(&self) -> UnGraph<(), ()> {
        let mut g = UnGraph::<(), ()>::with_capacity(self.n_vertices, self.n_edges());
        for _ in 0..self.n_vertices {
            g.add_node(());
        }
        for (a, b) in self.edges() {
            g.add_edge(NodeIndex::new(a), NodeIndex::new(b), ());
        }
        g
    }

    /// Orientation-preserving dart bijection `self → other` sending `d0` to `e0`.
    pub(crate) fn rooted_iso(&self, other: &Self, d0: usize, e0: usize) -> Option<Vec<usize>> {
        let mut img = vec![usize::MAX; self.n_darts()];
        let mut used = vec![false; other.n_darts()];
        img[d0] = e0;
        used[e0] = true;
        let mut queue = VecDeque::from([d0]);
        while let Some(d) = queue.pop_front() {
            let e = img[d];
            for (a, b) in [(self.sigma[d], other.sigma[e]), (d ^ 1, e ^ 1)] {
                if img[a] == usize::MAX {
                    if used[b] {
                        return None;
                    }
                    img[a] = b;
                    used[b] = true;
                    queue.push_back(a);
                } else if img[a] != b {
                    return None;
                }
            }
        }
        img.iter().all(|&x| x != usize::MAX).then_some(img)
    }

    /// Orientation-preserving isomorphism onto `other`, if any (connected maps).
    pub fn rotation_isomorphism(&self, other: &Self) -> Option<Vec<usize>> {
        if self.n_darts() != other.n_darts() || self.n_vertices != other.n_vertices || self.n_darts() == 0 {
            return None;
        }
        (0..other.n_darts()).find_map(|e| self.rooted_iso(other, 0, e))
    }

    /// Isomorphic as unoriented maps (possibly via a reflection).
    pub fn is_isomorphic_map(&self, other: &Self) -> bool {
        self.rotation_isomorphism(other).is_some() || self.rotation_isomorphism(&other.mirror()).is_some()
    }

    /// All orientation-preserving automorphisms as dart permutations.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        if self.n_darts() == 0 {
            return Vec::new();
        }
        (0..self.n_darts()).filter_map(|e| self.rooted_iso(self, 0, e)).collect()
    }

    /// Vertex permutation induced by a dart map.
    pub fn vertex_map(&self, dart_map: &[usize], other: &Self) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.n_vertices];
        for d in 0..self.n_darts() {
            out[self.vert[d]] = other.vert[dart_map[d]];
        }
        out
    }
}

/// Incremental builder: add edges, then list each vertex's darts counter-clockwise.
#[derive(Debug, Default)]
pub struct MapBuilder {
    n_vertices: usize,
    vert: Vec<usize>,
}

impl MapBuilder {
    pub fn new(n_vertices: usize) -> Self {
        Self { n_vertices, vert: Vec::new() }
    }

    /// Adds edge `(a, b)`; returns `(dart at a, dart at b)`.
    pub fn add_edge(&mut self, a: usize, b: usize) -> (usize, usize) {
        let d = self.vert.len();
        self.vert.push(a);
        self.vert.push(b);
        (d, d + 1)
    }

    /// Finishes with `rotations[v]` = darts at `v`, counter-clockwise.
    pub fn build(self, rotations: &[Vec<usize>]) -> Result<CombinatorialMap> {
        let mut sigma = vec![usize::MAX; self.vert.len()];
        for rot in rotations {
            for i in 0..rot.len() {
                sigma[rot[i]] = rot[(i + 1) % rot.len()];
            }
        }
        if sigma.contains(&usize::MAX) {
            return Err(invalid("a dart is missing from the rotations"));
        }
        CombinatorialMap::from_rotation(self.n_vertices, self.vert, sigma)
    }
}
