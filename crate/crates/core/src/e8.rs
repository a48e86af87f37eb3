//! Shells of the E8 root lattice and the quaternionic picture of its 240 roots.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::exact::{hurwitz_units, t2_set, QuatQ, Rational, Vec8};

/// Largest squared norm accepted by [`enumerate_shell`].
pub const MAX_SHELL_NORM2: i64 = 16;

/// Lattice vector together with its (even) squared norm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    pub v: Vec8,
    pub norm2: i64,
}

/// All lattice points `x ∈ E8` with `|x − center|² = dist2_x4 / 4`, sorted.
///
/// `center` may be any point of `Z⁸ ∪ (Z+½)⁸`; the search walks doubled
/// coordinates of both parities and prunes on the remaining squared budget.
pub fn points_at_distance(center: Vec8, dist2_x4: i64) -> Vec<Vec8> {
    let mut out = Vec::new();
    if dist2_x4 < 0 {
        return out;
    }
    let c = center.doubled();
    for parity in 0..2 {
        let mut cur = [0i32; 8];
        walk(&c, parity, 0, dist2_x4, &mut cur, &mut out);
    }
    out.sort();
    out
}

fn walk(c: &[i32; 8], parity: i32, i: usize, budget: i64, cur: &mut [i32; 8], out: &mut Vec<Vec8>) {
    if i == 8 {
        if budget == 0 && cur.iter().map(|&d| d as i64).sum::<i64>().rem_euclid(4) == 0 {
            out.push(Vec8::from_doubled(*cur).expect("uniform parity"));
        }
        return;
    }
    let r = (budget as f64).sqrt().floor() as i32 + 1;
    for x in (c[i] - r)..=(c[i] + r) {
        if x.rem_euclid(2) != parity {
            continue;
        }
        let d = (x - c[i]) as i64;
        if d * d > budget {
            continue;
        }
        cur[i] = x;
        walk(c, parity, i + 1, budget - d * d, cur, out);
    }
}

/// Lattice vectors of squared norm `norm2`; empty when no such vector exists.
pub fn lattice_points_at_norm(norm2: i64) -> Vec<Vec8> {
    if norm2 < 0 {
        return Vec::new();
    }
    points_at_distance(Vec8::ZERO, 4 * norm2)
}

/// The E8 shell of squared norm `norm2`, in canonical order.
///
/// Odd, non-positive or oversized norms are rejected.
pub fn enumerate_shell(norm2: i64) -> Result<Vec<RootVector>> {
    if norm2 <= 0 || norm2 % 2 != 0 || norm2 > MAX_SHELL_NORM2 {
        return Err(invalid(format!("shell norm² must be an even integer in 2..={MAX_SHELL_NORM2}, got {norm2}")));
    }
    Ok(lattice_points_at_norm(norm2).into_iter().map(|v| RootVector { v, norm2 }).collect())
}

/// Counts of lattice points around a fixed center, by squared distance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShellReport {
    pub center: [String; 8],
    pub radii2: Vec<i64>,
    pub counts: Vec<usize>,
}

/// The deep hole `(1,0,0,0,0,0,0,0)`.
pub fn deep_hole() -> Vec8 {
    Vec8::from_integers([1, 0, 0, 0, 0, 0, 0, 0])
}

/// Shell counts at squared distances `1..=k` from the deep hole.
pub fn deep_hole_shells(k: usize) -> Result<ShellReport> {
    if !(1..=4).contains(&k) {
        return Err(invalid(format!("deep-hole shell count must be in 1..=4, got {k}")));
    }
    let center = deep_hole();
    let radii2: Vec<i64> = (1..=k as i64).collect();
    let counts = radii2.iter().map(|&r| points_at_distance(center, 4 * r).len()).collect();
    Ok(ShellReport { center: center.coords().map(|c| c.to_string()), radii2, counts })
}

/// Pair of quaternions read as one 8-vector `(q1, q2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuaternionPair {
    pub q1: QuatQ,
    pub q2: QuatQ,
    pub label: Option<u8>,
}

impl QuaternionPair {
    pub fn new(q1: QuatQ, q2: QuatQ) -> Self {
        Self { q1, q2, label: None }
    }

    pub fn norm2(&self) -> Rational {
        self.q1.norm2() + self.q2.norm2()
    }

    pub fn to_vec8(&self) -> Result<Vec8> {
        let mut d = [0i32; 8];
        for (slot, c) in d.iter_mut().zip(self.q1.to_array().into_iter().chain(self.q2.to_array())) {
            let twice = c * Rational::from_integer(2);
            if !twice.is_integer() {
                return Err(invalid(format!("component {c} is not in Z/2")));
            }
            *slot = *twice.numer() as i32;
        }
        Vec8::from_doubled(d)
    }
}

/// The ten 24-point subsets `P₁ … P₁₀` of the 240 roots.
///
/// `P₁ = (T₂,0)`, `P₂ = (0,T₂)`, and `P₃ … P₁₀ = (t, u·t)` for `t ∈ T₁` and
/// `u = 1, −1, i, −i, j, −j, k, −k` in that order. The union is checked
/// against an independent shell enumeration before returning.
pub fn decompose_240() -> Result<Vec<Vec<QuaternionPair>>> {
    let t1 = hurwitz_units();
    let t2 = t2_set();
    let zero = QuatQ::default();
    let mut subsets: Vec<Vec<QuaternionPair>> = Vec::with_capacity(10);
    subsets.push(t2.iter().map(|&t| QuaternionPair::new(t, zero)).collect());
    subsets.push(t2.iter().map(|&t| QuaternionPair::new(zero, t)).collect());
    let units = [QuatQ::one(), QuatQ::i(), QuatQ::j(), QuatQ::k()];
    for u in units {
        for s in [u, -u] {
            subsets.push(t1.iter().map(|&t| QuaternionPair::new(t, s * t)).collect());
        }
    }
    for (n, set) in subsets.iter_mut().enumerate() {
        for p in set.iter_mut() {
            p.label = Some(n as u8 + 1);
        }
    }

    let mut union = BTreeSet::new();
    for (n, set) in subsets.iter().enumerate() {
        if set.len() != 24 {
            return Err(Error::Construction(format!("P{} has {} elements", n + 1, set.len())));
        }
        for p in set {
            if !union.insert(p.to_vec8()?) {
                return Err(Error::Construction(format!("P{} overlaps an earlier subset", n + 1)));
            }
        }
    }
    let shell: BTreeSet<Vec8> = lattice_points_at_norm(2).into_iter().collect();
    if union != shell {
        return Err(Error::Construction("union of the ten subsets differs from the norm-2 shell".into()));
    }
    Ok(subsets)
}

/// Quaternionic Hopf map `(q1,q2) ↦ (2·q1·conj(q2), |q1|² − |q2|²)`.
///
/// Defined on the sphere `|q1|² + |q2|² = 2`; the image lies on the sphere of
/// radius 2 in five dimensions.
pub fn hopf_map(p: &QuaternionPair) -> Result<[Rational; 5]> {
    if p.norm2() != Rational::from_integer(2) {
        return Err(invalid(format!("pair has norm² {}, expected 2", p.norm2())));
    }
    let h = (p.q1 * p.q2.conj()).scale(Rational::from_integer(2));
    Ok([h.w, h.x, h.y, h.z, p.q1.norm2() - p.q2.norm2()])
}

/// Hopf image of each subset, `None` where a subset is not mapped to a single point.
pub fn hopf_images(subsets: &[Vec<QuaternionPair>]) -> Result<Vec<Option<[Rational; 5]>>> {
    subsets
        .iter()
        .map(|set| {
            let imgs: BTreeSet<[Rational; 5]> = set.iter().map(hopf_map).collect::<Result<_>>()?;
            Ok(if imgs.len() == 1 { imgs.into_iter().next() } else { None })
        })
        .collect()
}

/// Five-dimensional dot product.
pub fn dot5(a: &[Rational; 5], b: &[Rational; 5]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |s, (x, y)| s + x * y)
}

/// True iff `pts` is `{±2eᵢ}` in five dimensions.
pub fn is_cross_polytope(pts: &[[Rational; 5]]) -> bool {
    let mut expected = BTreeSet::new();
    for i in 0..5 {
        for s in [2i64, -2] {
            let mut v = [Rational::zero(); 5];
            v[i] = Rational::from_integer(s);
            expected.insert(v);
        }
    }
    let got: BTreeSet<[Rational; 5]> = pts.iter().copied().collect();
    got.len() == pts.len() && got == expected && pts.iter().all(|p| dot5(p, p) == Rational::from_integer(4))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_hot5(i: usize, s: i64) -> [Rational; 5] {
        let mut v = [Rational::zero(); 5];
        v[i] = Rational::from_integer(s);
        v
    }

    /// Independent brute force over bounded coordinate boxes.
    fn brute_force_count(center: [i32; 8], dist2_x4: i64, bound: i32) -> usize {
        let mut n = 0;
        for parity in 0..2 {
            let vals: Vec<i32> = (-2 * bound - 1..=2 * bound + 1).filter(|x| x.rem_euclid(2) == parity).collect();
            let mut idx = [0usize; 8];
            loop {
                let x: [i32; 8] = std::array::from_fn(|i| vals[idx[i]]);
                let s: i32 = x.iter().sum();
                let d: i64 = x.iter().zip(center).map(|(&a, b)| ((a - b) as i64).pow(2)).sum();
                if s.rem_euclid(4) == 0 && d == dist2_x4 {
                    n += 1;
                }
                let mut k = 0;
                loop {
                    if k == 8 {
                        break;
                    }
                    idx[k] += 1;
                    if idx[k] < vals.len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == 8 {
                    break;
                }
            }
        }
        n
    }

    #[test]
    fn first_shells() {
        assert_eq!(enumerate_shell(2).unwrap().len(), 240);
        assert_eq!(enumerate_shell(4).unwrap().len(), 2160);
        assert_eq!(enumerate_shell(6).unwrap().len(), 6720);
        assert_eq!(enumerate_shell(8).unwrap().len(), 17520);
    }

    #[test]
    fn shell_four_matches_brute_force() {
        assert_eq!(brute_force_count([0; 8], 16, 2), 2160);
        assert_eq!(brute_force_count([0; 8], 8, 1), 240);
    }

    #[test]
    fn deep_hole_counts_match_brute_force() {
        let c = [2, 0, 0, 0, 0, 0, 0, 0];
        let oracle: Vec<usize> = (1..=3).map(|r| brute_force_count(c, 4 * r, 2)).collect();
        assert_eq!(oracle, vec![16, 128, 448]);
        let rep = deep_hole_shells(4).unwrap();
        assert_eq!(rep.counts, vec![16, 128, 448, 1024]);
        assert_eq!(deep_hole_shells(1).unwrap().counts, vec![16]);
        assert_eq!(rep.counts[1] + rep.counts[3], 1152);
    }

    #[test]
    fn bad_norms_rejected() {
        for n in [-2, 0, 1, 3, 18] {
            assert!(enumerate_shell(n).is_err());
        }
        assert!(lattice_points_at_norm(1).is_empty());
        assert!(lattice_points_at_norm(3).is_empty());
        assert!(deep_hole_shells(0).is_err());
        assert!(deep_hole_shells(5).is_err());
    }

    #[test]
    fn shell_two_symmetric() {
        let s: BTreeSet<Vec8> = lattice_points_at_norm(2).into_iter().collect();
        for v in &s {
            assert!(s.contains(&-*v));
            let mut d = v.doubled();
            d.swap(0, 5);
            assert!(s.contains(&Vec8::from_doubled(d).unwrap()));
        }
        let integral = s.iter().filter(|v| v.is_integral()).count();
        assert_eq!(integral, 112);
    }

    #[test]
    fn decomposition_partitions_roots() {
        let subsets = decompose_240().unwrap();
        assert_eq!(subsets.len(), 10);
        let p1: BTreeSet<Vec8> = subsets[0].iter().map(|p| p.to_vec8().unwrap()).collect();
        let p2: BTreeSet<Vec8> = subsets[1].iter().map(|p| p.to_vec8().unwrap()).collect();
        assert!(p1.is_disjoint(&p2));
        for set in &subsets {
            assert_eq!(set.len(), 24);
            for p in set {
                assert_eq!(p.norm2(), Rational::from_integer(2));
            }
        }
    }

    #[test]
    fn hopf_images_form_cross_polytope() {
        let subsets = decompose_240().unwrap();
        let imgs: Vec<[Rational; 5]> = hopf_images(&subsets).unwrap().into_iter().map(|x| x.unwrap()).collect();
        assert_eq!(imgs[0], one_hot5(4, 2));
        assert_eq!(imgs[1], one_hot5(4, -2));
        assert_eq!(imgs[2], one_hot5(0, 2));
        assert!(is_cross_polytope(&imgs));
        for a in 0..10 {
            for b in a + 1..10 {
                let d = dot5(&imgs[a], &imgs[b]);
                assert!(d == Rational::zero() || d == Rational::from_integer(-4));
            }
        }
    }

    #[test]
    fn hopf_rejects_off_sphere() {
        let p = QuaternionPair::new(QuatQ::one(), QuatQ::default());
        assert!(hopf_map(&p).is_err());
    }
}
