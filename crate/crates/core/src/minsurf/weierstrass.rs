use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;
use serde::Serialize;

use super::mesh::SurfaceMesh;
use crate::error::{invalid, Result};

/// Gauss–Legendre nodes and weights on `[-1, 1]`, 8 points.
const GL8: [(f64, f64); 8] = [
    (-0.960_289_856_497_536_3, 0.101_228_536_290_376_26),
    (-0.796_666_477_413_626_7, 0.222_381_034_453_374_47),
    (-0.525_532_409_916_329, 0.313_706_645_877_887_3),
    (-0.183_434_642_495_649_8, 0.362_683_783_378_362),
    (0.183_434_642_495_649_8, 0.362_683_783_378_362),
    (0.525_532_409_916_329, 0.313_706_645_877_887_3),
    (0.796_666_477_413_626_7, 0.222_381_034_453_374_47),
    (0.960_289_856_497_536_3, 0.101_228_536_290_376_26),
];

type Integrand<'a> = dyn Fn(Complex64) -> [Complex64; 3] + 'a;

fn segment(phi: &Integrand<'_>, a: Complex64, b: Complex64) -> [Complex64; 3] {
    let mid = (a + b) * 0.5;
    let half = (b - a) * 0.5;
    let mut s = [Complex64::new(0.0, 0.0); 3];
    for (x, w) in GL8 {
        let v = phi(mid + half * x);
        for k in 0..3 {
            s[k] += v[k] * w;
        }
    }
    s.map(|c| c * half)
}

/// `X(z) = Re ∫ (f(1−g²)/2, i·f(1+g²)/2, f·g) dz` from the grid corner,
/// integrating along `v = v₀` and then along `u = const`.
pub fn weierstrass_eval(
    f: impl Fn(Complex64) -> Complex64,
    g: impl Fn(Complex64) -> Complex64,
    nu: usize,
    nv: usize,
    u_range: (f64, f64),
    v_range: (f64, f64),
) -> Result<SurfaceMesh> {
    let i = Complex64::new(0.0, 1.0);
    let phi = |z: Complex64| {
        let (fz, gz) = (f(z), g(z));
        [fz * (1.0 - gz * gz) * 0.5, i * fz * (1.0 + gz * gz) * 0.5, fz * gz]
    };
    let template = SurfaceMesh::sample(nu, nv, u_range, v_range, |_, _| [0.0; 3])?;
    let z = |a: usize, b: usize| Complex64::new(template.u(a), template.v(b));
    for a in 0..nu {
        for b in 0..nv {
            if phi(z(a, b)).iter().any(|c| !c.is_finite()) {
                return Err(invalid(format!("Weierstrass data singular at {}", z(a, b))));
            }
        }
    }
    let mut points = Vec::with_capacity(nu * nv);
    let mut along_u = [Complex64::new(0.0, 0.0); 3];
    for a in 0..nu {
        if a > 0 {
            let s = segment(&phi, z(a - 1, 0), z(a, 0));
            for k in 0..3 {
                along_u[k] += s[k];
            }
        }
        let mut acc = along_u;
        for b in 0..nv {
            if b > 0 {
                let s = segment(&phi, z(a, b - 1), z(a, b));
                for k in 0..3 {
                    acc[k] += s[k];
                }
            }
            points.push(acc.map(|c| c.re));
        }
    }
    Ok(SurfaceMesh { points, ..template })
}

/// `(f, g) = (e^{−iα}·e^{−z}, e^{z})`: the catenoid at `α = 0`, the helicoid at `α = π/2`.
pub fn weierstrass_catenoid(alpha: f64, n: usize, u_range: (f64, f64), v_range: (f64, f64)) -> Result<SurfaceMesh> {
    let rot = Complex64::from_polar(1.0, -alpha);
    weierstrass_eval(move |z| rot * (-z).exp(), |z| z.exp(), n, n, u_range, v_range)
}

/// Best proper rigid motion taking one point list onto another.
#[derive(Clone, Debug, Serialize)]
pub struct Registration {
    pub rotation: [[f64; 3]; 3],
    pub translation: [f64; 3],
    /// Largest distance between matched points after alignment.
    pub max_distance: f64,
    pub rms: f64,
}

/// Kabsch alignment of `from` onto `to` (matched by index).
pub fn register_rigid(from: &[[f64; 3]], to: &[[f64; 3]]) -> Result<Registration> {
    if from.len() != to.len() || from.is_empty() {
        return Err(invalid("registration needs two non-empty lists of equal length"));
    }
    let n = from.len() as f64;
    let c = |pts: &[[f64; 3]]| pts.iter().fold(Vector3::zeros(), |s, p| s + Vector3::from(*p)) / n;
    let (ca, cb) = (c(from), c(to));
    let mut h = Matrix3::zeros();
    for (p, q) in from.iter().zip(to) {
        h += (Vector3::from(*p) - ca) * (Vector3::from(*q) - cb).transpose();
    }
    let svd = h.svd(true, true);
    let (u, vt) = (svd.u.expect("u requested"), svd.v_t.expect("v_t requested"));
    let d = (vt.transpose() * u.transpose()).determinant().signum();
    let r = vt.transpose() * Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, d)) * u.transpose();
    let t = cb - r * ca;
    let mut max_distance: f64 = 0.0;
    let mut sq = 0.0;
    for (p, q) in from.iter().zip(to) {
        let e = (r * Vector3::from(*p) + t - Vector3::from(*q)).norm();
        max_distance = max_distance.max(e);
        sq += e * e;
    }
    Ok(Registration {
        rotation: std::array::from_fn(|i| std::array::from_fn(|j| r[(i, j)])),
        translation: [t[0], t[1], t[2]],
        max_distance,
        rms: (sq / n).sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minsurf::{associated_family, DEFAULT_U, DEFAULT_V};
    use std::f64::consts::PI;

    #[test]
    fn catenoid_matches_family() {
        for alpha in [0.0, PI / 4.0, PI / 2.0] {
            let w = weierstrass_catenoid(alpha, 128, DEFAULT_U, DEFAULT_V).unwrap();
            let a = associated_family(alpha, DEFAULT_U, DEFAULT_V, 128).unwrap();
            let reg = register_rigid(&w.points, &a.points).unwrap();
            assert!(reg.max_distance < 1e-6, "α={alpha}: {}", reg.max_distance);
            // The motion is the half-turn about the axis.
            assert!((reg.rotation[0][0] + 1.0).abs() < 1e-9 && (reg.rotation[2][2] - 1.0).abs() < 1e-9);
            assert!(w.max_abs_mean_curvature().unwrap() < 1e-3);
        }
    }

    #[test]
    fn detects_pole() {
        let r = weierstrass_eval(|z| 1.0 / z, |z| z, 5, 5, (-1.0, 1.0), (-1.0, 1.0));
        assert!(r.is_err());
    }

    #[test]
    fn registration_recovers_motion() {
        let pts: Vec<[f64; 3]> = (0..20)
            .map(|k| {
                let t = k as f64;
                [t.sin(), (2.0 * t).cos(), 0.1 * t]
            })
            .collect();
        let (s, c) = 0.7f64.sin_cos();
        let moved: Vec<[f64; 3]> =
            pts.iter().map(|p| [c * p[0] - s * p[2] + 1.0, p[1] - 2.0, s * p[0] + c * p[2]]).collect();
        let reg = register_rigid(&pts, &moved).unwrap();
        assert!(reg.max_distance < 1e-12);
        assert!(register_rigid(&pts, &moved[..3]).is_err());
    }
}
