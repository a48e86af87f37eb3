//! Catenoid bifurcation, the catenoid–helicoid associated family, the
//! Gauss-map band criterion, the Weierstrass representation and circular
//! helix curvature/torsion.

mod mesh;
mod weierstrass;

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{invalid, Result};

pub use mesh::{gauss_band_check, BandCheck, Metric, SurfaceMesh};
pub use weierstrass::{register_rigid, weierstrass_catenoid, weierstrass_eval, Registration};

/// Bisection to machine precision on a bracket with a sign change.
pub fn bisect(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64) -> f64 {
    let flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (f(mid) > 0.0) == (flo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// The root `t0 ∈ (1, 2)` of `coth t = t`.
pub fn solve_coth_fixed_point(tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(invalid("tolerance must be positive"));
    }
    let g = |t: f64| 1.0 / t.tanh() - t;
    let t0 = bisect(1.0, 2.0, g);
    if g(t0).abs() >= tol {
        return Err(invalid(format!("|coth t0 − t0| = {:e} exceeds {tol:e}", g(t0).abs())));
    }
    Ok(t0)
}

pub fn t0() -> f64 {
    solve_coth_fixed_point(1e-12).expect("bisection reaches machine precision")
}

/// `2t0/cosh t0`: largest ring separation over ring radius admitting a catenoid.
pub fn critical_ratio() -> f64 {
    let t = t0();
    2.0 * t / t.cosh()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NeckKind {
    NearCylinder,
    NearCone,
    Critical,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CatenoidSolution {
    pub neck_radius: f64,
    pub kind: NeckKind,
    pub stable: bool,
}

/// Neck radii `a` with `a·cosh(h/2a) = r` for coaxial rings of radius `r` at distance `h`.
pub fn catenoid_solutions(r: f64, h: f64) -> Result<Vec<CatenoidSolution>> {
    if !(r > 0.0 && h > 0.0) {
        return Err(invalid("ring radius and separation must be positive"));
    }
    let t = t0();
    let a_star = h / (2.0 * t);
    let f = |a: f64| a * (h / (2.0 * a)).cosh() - r;
    let fmin = f(a_star);
    if fmin.abs() <= 1e-12 * r {
        return Ok(vec![CatenoidSolution { neck_radius: a_star, kind: NeckKind::Critical, stable: false }]);
    }
    if fmin > 0.0 {
        return Ok(Vec::new());
    }
    let mut lo = a_star;
    while f(lo) <= 0.0 {
        lo *= 0.5;
    }
    let mut hi = a_star;
    while f(hi) <= 0.0 {
        hi *= 2.0;
    }
    Ok(vec![
        CatenoidSolution { neck_radius: bisect(a_star, hi, f), kind: NeckKind::NearCylinder, stable: true },
        CatenoidSolution { neck_radius: bisect(lo, a_star, f), kind: NeckKind::NearCone, stable: false },
    ])
}

/// Locates the ratio `h/r` where the solution count drops, by a coarse scan
/// followed by bisection on the count.
pub fn critical_ratio_by_sweep() -> f64 {
    let count = |x: f64| catenoid_solutions(1.0, x).map(|s| s.len()).unwrap_or(0);
    let mut x = 0.05;
    while count(x + 0.05) == 2 {
        x += 0.05;
    }
    let (mut lo, mut hi) = (x, x + 0.05);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if count(mid) == 2 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CriticalPitch {
    pub neck_radius: f64,
    /// `2·t0·a`.
    pub h: f64,
    /// `h` over the neck radius, `2t0`.
    pub ratio_to_neck: f64,
    /// `h` over the ring radius `a·cosh t0`.
    pub ratio_to_ring: f64,
}

pub fn critical_pitch(a_neck: f64) -> Result<CriticalPitch> {
    if !(a_neck > 0.0) {
        return Err(invalid("neck radius must be positive"));
    }
    let t = t0();
    let h = 2.0 * t * a_neck;
    Ok(CriticalPitch { neck_radius: a_neck, h, ratio_to_neck: 2.0 * t, ratio_to_ring: h / (a_neck * t.cosh()) })
}

/// Catenoid `(cosh u cos v, cosh u sin v, u)`.
pub fn catenoid(u: f64, v: f64) -> [f64; 3] {
    [u.cosh() * v.cos(), u.cosh() * v.sin(), u]
}

/// Conjugate helicoid `(sinh u sin v, −sinh u cos v, v)`.
pub fn helicoid(u: f64, v: f64) -> [f64; 3] {
    [u.sinh() * v.sin(), -u.sinh() * v.cos(), v]
}

/// `cos α·catenoid + sin α·helicoid`.
pub fn family_point(alpha: f64, u: f64, v: f64) -> [f64; 3] {
    let (s, c) = alpha.sin_cos();
    let (a, b) = (catenoid(u, v), helicoid(u, v));
    [c * a[0] + s * b[0], c * a[1] + s * b[1], c * a[2] + s * b[2]]
}

pub const DEFAULT_U: (f64, f64) = (-1.0, 1.0);
pub const DEFAULT_V: (f64, f64) = (-PI, PI);

pub fn associated_family(alpha: f64, u_range: (f64, f64), v_range: (f64, f64), n: usize) -> Result<SurfaceMesh> {
    if !(0.0..=PI / 2.0 + 1e-12).contains(&alpha) {
        return Err(invalid(format!("α must lie in [0, π/2], got {alpha}")));
    }
    SurfaceMesh::sample(n, n, u_range, v_range, |u, v| family_point(alpha, u, v))
}

/// Largest difference of `E, F, G` between any two of the given family members
/// at matched interior grid points.
pub fn metric_spread(alphas: &[f64], n: usize) -> Result<f64> {
    let meshes: Vec<SurfaceMesh> =
        alphas.iter().map(|&a| associated_family(a, DEFAULT_U, DEFAULT_V, n)).collect::<Result<_>>()?;
    let mut worst: f64 = 0.0;
    for i in 3..n.saturating_sub(3) {
        for j in 3..n.saturating_sub(3) {
            let ms: Vec<Metric> = meshes.iter().map(|m| m.metric(i, j)).collect();
            for a in &ms {
                for b in &ms {
                    worst = worst.max((a.e - b.e).abs()).max((a.f - b.f).abs()).max((a.g - b.g).abs());
                }
            }
        }
    }
    Ok(worst)
}

/// Catenoid restricted to `|u| ≤ umax`.
pub fn catenoid_band_mesh(umax: f64, n: usize) -> Result<SurfaceMesh> {
    SurfaceMesh::sample(n, n, (-umax, umax), DEFAULT_V, catenoid)
}

/// Curvature and torsion of `(r cos t, r sin t, b t)`.
pub fn helix_curvature_torsion(r: f64, b: f64) -> Result<(f64, f64)> {
    if !(r > 0.0) {
        return Err(invalid("helix radius must be positive"));
    }
    let s = r * r + b * b;
    Ok((r / s, b / s))
}
