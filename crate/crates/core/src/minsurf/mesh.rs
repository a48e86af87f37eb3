use serde::Serialize;

use crate::error::{invalid, Result};

/// Points `r(u_i, v_j)` on a uniform parameter grid, stored row-major in `i`.
#[derive(Clone, Debug, Serialize)]
pub struct SurfaceMesh {
    pub nu: usize,
    pub nv: usize,
    pub u_range: (f64, f64),
    pub v_range: (f64, f64),
    pub points: Vec<[f64; 3]>,
}

type V3 = [f64; 3];

fn add(a: V3, b: V3, s: f64) -> V3 {
    [a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]]
}

pub(crate) fn dot(a: V3, b: V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn cross(a: V3, b: V3) -> V3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

const D1_6: [(isize, f64); 6] = [(-3, -1.0), (-2, 9.0), (-1, -45.0), (1, 45.0), (2, -9.0), (3, 1.0)];
const D1_4: [(isize, f64); 4] = [(-2, 1.0), (-1, -8.0), (1, 8.0), (2, -1.0)];
const D2_4: [(isize, f64); 5] = [(-2, -1.0), (-1, 16.0), (0, -30.0), (1, 16.0), (2, -1.0)];

/// First fundamental form `(E, F, G)` at a grid point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Metric {
    pub e: f64,
    pub f: f64,
    pub g: f64,
}

impl SurfaceMesh {
    /// Samples `r` on an `nu × nv` grid including both interval ends.
    pub fn sample(
        nu: usize,
        nv: usize,
        u_range: (f64, f64),
        v_range: (f64, f64),
        r: impl Fn(f64, f64) -> V3,
    ) -> Result<Self> {
        if nu < 2 || nv < 2 || !(u_range.1 > u_range.0) || !(v_range.1 > v_range.0) {
            return Err(invalid("mesh needs at least 2×2 points and non-empty ranges"));
        }
        let mut points = Vec::with_capacity(nu * nv);
        for i in 0..nu {
            for j in 0..nv {
                points.push(r(Self::coord(u_range, nu, i), Self::coord(v_range, nv, j)));
            }
        }
        Ok(Self { nu, nv, u_range, v_range, points })
    }

    fn coord(range: (f64, f64), n: usize, i: usize) -> f64 {
        range.0 + (range.1 - range.0) * i as f64 / (n - 1) as f64
    }

    pub fn u(&self, i: usize) -> f64 {
        Self::coord(self.u_range, self.nu, i)
    }

    pub fn v(&self, j: usize) -> f64 {
        Self::coord(self.v_range, self.nv, j)
    }

    pub fn hu(&self) -> f64 {
        (self.u_range.1 - self.u_range.0) / (self.nu - 1) as f64
    }

    pub fn hv(&self) -> f64 {
        (self.v_range.1 - self.v_range.0) / (self.nv - 1) as f64
    }

    pub fn at(&self, i: usize, j: usize) -> V3 {
        self.points[i * self.nv + j]
    }

    fn at_off(&self, i: usize, j: usize, di: isize, dj: isize) -> V3 {
        self.at((i as isize + di) as usize, (j as isize + dj) as usize)
    }

    fn stencil(&self, i: usize, j: usize, along_u: bool, st: &[(isize, f64)], scale: f64) -> V3 {
        st.iter().fold([0.0; 3], |acc, &(o, c)| {
            let p = if along_u { self.at_off(i, j, o, 0) } else { self.at_off(i, j, 0, o) };
            add(acc, p, c / scale)
        })
    }

    /// Whether the sixth-order stencils fit around `(i, j)`.
    pub fn is_interior(&self, i: usize, j: usize) -> bool {
        i >= 3 && j >= 3 && i + 3 < self.nu && j + 3 < self.nv
    }

    /// `(r_u, r_v)` by sixth-order central differences; interior points only.
    pub fn tangents(&self, i: usize, j: usize) -> (V3, V3) {
        (self.stencil(i, j, true, &D1_6, 60.0 * self.hu()), self.stencil(i, j, false, &D1_6, 60.0 * self.hv()))
    }

    /// Low-order tangents valid at every grid point (one-sided on the border).
    fn rough_tangents(&self, i: usize, j: usize) -> (V3, V3) {
        let d = |n: usize, k: usize, h: f64, along_u: bool| -> V3 {
            let st: &[(isize, f64)] = if k == 0 {
                &[(0, -3.0), (1, 4.0), (2, -1.0)]
            } else if k + 1 == n {
                &[(0, 3.0), (-1, -4.0), (-2, 1.0)]
            } else {
                &[(-1, -1.0), (1, 1.0)]
            };
            self.stencil(i, j, along_u, st, 2.0 * h)
        };
        (d(self.nu, i, self.hu(), true), d(self.nv, j, self.hv(), false))
    }

    pub fn metric(&self, i: usize, j: usize) -> Metric {
        let (ru, rv) = self.tangents(i, j);
        Metric { e: dot(ru, ru), f: dot(ru, rv), g: dot(rv, rv) }
    }

    /// Unit normal at any grid point.
    pub fn normal(&self, i: usize, j: usize) -> V3 {
        let (ru, rv) = if self.is_interior(i, j) { self.tangents(i, j) } else { self.rough_tangents(i, j) };
        let n = cross(ru, rv);
        let l = dot(n, n).sqrt();
        n.map(|x| x / l)
    }

    /// Mean curvature at an interior point (sign depends on orientation).
    pub fn mean_curvature_at(&self, i: usize, j: usize) -> f64 {
        let (ru, rv) = self.tangents(i, j);
        let (hu, hv) = (self.hu(), self.hv());
        let ruu = self.stencil(i, j, true, &D2_4, 12.0 * hu * hu);
        let rvv = self.stencil(i, j, false, &D2_4, 12.0 * hv * hv);
        let mut ruv = [0.0; 3];
        for &(a, ca) in &D1_4 {
            for &(b, cb) in &D1_4 {
                ruv = add(ruv, self.at_off(i, j, a, b), ca * cb / (144.0 * hu * hv));
            }
        }
        let n = cross(ru, rv);
        let w = dot(n, n).sqrt();
        let n = n.map(|x| x / w);
        let (e, f, g) = (dot(ru, ru), dot(ru, rv), dot(rv, rv));
        let (l, m, nn) = (dot(ruu, n), dot(ruv, n), dot(rvv, n));
        (e * nn - 2.0 * f * m + g * l) / (2.0 * (e * g - f * f))
    }

    /// Largest `|H|` over the interior.
    pub fn max_abs_mean_curvature(&self) -> Result<f64> {
        if self.nu < 7 || self.nv < 7 {
            return Err(invalid("mean curvature needs at least 7×7 points"));
        }
        let mut worst: f64 = 0.0;
        for i in 3..self.nu - 3 {
            for j in 3..self.nv - 3 {
                let h = self.mean_curvature_at(i, j);
                if !h.is_finite() {
                    return Err(invalid("degenerate grid: non-finite curvature"));
                }
                worst = worst.max(h.abs());
            }
        }
        Ok(worst)
    }

    /// Faces of the grid as 0-based quads.
    pub fn quads(&self) -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for i in 0..self.nu - 1 {
            for j in 0..self.nv - 1 {
                let a = i * self.nv + j;
                out.push([a, a + self.nv, a + self.nv + 1, a + 1]);
            }
        }
        out
    }
}

/// Result of the Gauss-map band test.
#[derive(Clone, Debug, Serialize)]
pub struct BandCheck {
    pub t0: f64,
    /// Band half-width `tanh t0`.
    pub band: f64,
    pub max_abs_n3: f64,
    pub pass: bool,
    /// First `u > 0` on the column `v = v_mid` where `|n₃|` reaches the band,
    /// linearly interpolated between grid points.
    pub crossing_u: Option<f64>,
}

/// Passes iff every unit normal satisfies `|n₃| ≤ tanh t0`.
pub fn gauss_band_check(mesh: &SurfaceMesh, t0: f64) -> BandCheck {
    let band = t0.tanh();
    let mut max_abs_n3: f64 = 0.0;
    for i in 0..mesh.nu {
        for j in 0..mesh.nv {
            max_abs_n3 = max_abs_n3.max(mesh.normal(i, j)[2].abs());
        }
    }
    let j = mesh.nv / 2;
    let mut crossing_u = None;
    for i in 1..mesh.nu {
        let (u0, u1) = (mesh.u(i - 1), mesh.u(i));
        if u0 < 0.0 {
            continue;
        }
        let (a, b) = (mesh.normal(i - 1, j)[2].abs() - band, mesh.normal(i, j)[2].abs() - band);
        if a < 0.0 && b >= 0.0 {
            crossing_u = Some(u0 + (u1 - u0) * a / (a - b));
            break;
        }
    }
    BandCheck { t0, band, max_abs_n3, pass: max_abs_n3 <= band, crossing_u }
}
