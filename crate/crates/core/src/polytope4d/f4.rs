// Small fixed-size matrix loops read best with explicit indices.
#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeSet, HashSet};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::exact::{QSqrt2, Rational};

type P4 = [QSqrt2; 4];

/// Labels of the tabulated orbits.
pub const F4_LABELS: [[u8; 4]; 5] = [[0, 0, 0, 1], [0, 0, 1, 0], [1, 0, 1, 1], [0, 1, 1, 1], [1, 1, 1, 1]];

/// Simple roots `e₂−e₃`, `e₃−e₄`, `e₄`, `½(e₁−e₂−e₃−e₄)`.
fn simple_roots() -> [[Rational; 4]; 4] {
    let r = |n: i64| Rational::from_integer(n);
    let h = Rational::new(1, 2);
    [[r(0), r(1), r(-1), r(0)], [r(0), r(0), r(1), r(-1)], [r(0), r(0), r(0), r(1)], [h, -h, -h, -h]]
}

/// Inverse of a 4×4 rational matrix by Gauss–Jordan elimination.
fn inverse(m: [[Rational; 4]; 4]) -> Option<[[Rational; 4]; 4]> {
    let mut a: Vec<Vec<Rational>> = (0..4)
        .map(|i| {
            let mut row = m[i].to_vec();
            row.extend((0..4).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for c in 0..4 {
        let p = (c..4).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in &mut a[c] {
            *x *= inv;
        }
        for r in 0..4 {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c];
                for k in 0..8 {
                    let v = a[c][k];
                    a[r][k] -= f * v;
                }
            }
        }
    }
    Some(std::array::from_fn(|i| std::array::from_fn(|j| a[i][j + 4])))
}

fn dot(x: &P4, r: &[Rational; 4]) -> QSqrt2 {
    (0..4).fold(QSqrt2::default(), |s, i| s + x[i] * r[i])
}

fn reflect(x: &P4, r: &[Rational; 4]) -> P4 {
    let rr = r.iter().fold(Rational::zero(), |s, &c| s + c * c);
    let f = dot(x, r) * (Rational::from_integer(2) / rr);
    std::array::from_fn(|i| x[i] - f * r[i])
}

fn dist2(a: &P4, b: &P4) -> QSqrt2 {
    (0..4).fold(QSqrt2::default(), |s, i| {
        let d = a[i] - b[i];
        s + d * d
    })
}

fn to_f64(p: &P4) -> [f64; 4] {
    p.map(|c| c.to_f64())
}

/// Wythoff point `Σ aᵢ·|αᵢ|·ωᵢ^∨` with `⟨ωᵢ^∨, αⱼ⟩ = δᵢⱼ`, so that every ringed
/// node contributes edges of length 2.
pub fn wythoff_point(label: [u8; 4]) -> P4 {
    let roots = simple_roots();
    let inv = inverse(roots).expect("simple roots are independent");
    let mut x = [QSqrt2::default(); 4];
    for (i, &a) in label.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let len = if i < 2 { QSqrt2::sqrt2() } else { QSqrt2::from(1) };
        for (k, xk) in x.iter_mut().enumerate() {
            *xk = *xk + len * inv[k][i];
        }
    }
    x
}

fn orbit(start: P4, roots: &[[Rational; 4]]) -> Vec<P4> {
    let mut seen: HashSet<P4> = HashSet::from([start]);
    let mut out = vec![start];
    let mut i = 0;
    while i < out.len() {
        for r in roots {
            let y = reflect(&out[i], r);
            if seen.insert(y) {
                out.push(y);
            }
        }
        i += 1;
    }
    out.sort();
    out
}

/// One row of the F4 table.
#[derive(Clone, Debug, Serialize)]
pub struct F4Orbit {
    pub label: String,
    #[serde(skip)]
    pub vertices: Vec<P4>,
    pub n_vertices: usize,
    pub n_edges: usize,
    pub faces: Option<usize>,
    pub cells: Option<usize>,
    pub edge_length2: String,
    pub stabilizer_order: usize,
    pub radius2: String,
    #[serde(skip)]
    pub edges: Vec<(usize, usize)>,
}

/// Orbit of the labelled Wythoff point under W(F4), with its minimal-distance
/// edges and, for orbits of at most 96 points, hull face and cell counts.
pub fn f4_orbit(label: [u8; 4], with_elements: bool) -> Result<F4Orbit> {
    if !F4_LABELS.contains(&label) {
        return Err(invalid(format!("unsupported F4 label {label:?}")));
    }
    let roots = simple_roots();
    let x = wythoff_point(label);
    let vertices = orbit(x, &roots);

    // Stabiliser = parabolic subgroup on the unringed nodes; its order is
    // the orbit size of a generic point under those reflections.
    let sub: Vec<[Rational; 4]> = (0..4).filter(|&i| label[i] == 0).map(|i| roots[i]).collect();
    let stabilizer_order = orbit(wythoff_point([1, 1, 1, 1]), &sub).len();

    let fl: Vec<[f64; 4]> = vertices.iter().map(to_f64).collect();
    let n = vertices.len();
    let d2f = |a: usize, b: usize| (0..4).map(|i| (fl[a][i] - fl[b][i]).powi(2)).sum::<f64>();
    let mut min = f64::INFINITY;
    for a in 0..n {
        for b in a + 1..n {
            min = min.min(d2f(a, b));
        }
    }
    let near: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| d2f(a, b) < min + 1e-6).collect();
    let exact_min = near.iter().map(|&(a, b)| dist2(&vertices[a], &vertices[b])).min().expect("orbit has edges");
    let edges: Vec<(usize, usize)> =
        near.into_iter().filter(|&(a, b)| dist2(&vertices[a], &vertices[b]) == exact_min).collect();

    let (faces, cells) = if with_elements && n <= 96 {
        let (f, c) = hull_counts(&vertices)?;
        (Some(f), Some(c))
    } else {
        (None, None)
    };
    let zero = [QSqrt2::default(); 4];
    Ok(F4Orbit {
        label: label.iter().map(|d| d.to_string()).collect(),
        n_vertices: n,
        n_edges: edges.len(),
        faces,
        cells,
        edge_length2: exact_min.to_string(),
        stabilizer_order,
        radius2: dist2(&x, &zero).to_string(),
        vertices,
        edges,
    })
}

fn det3(m: [[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Normal of the hyperplane through four points (zero if degenerate).
fn normal(p: [[i64; 4]; 4]) -> [i64; 4] {
    let d: [[i64; 4]; 3] = std::array::from_fn(|r| std::array::from_fn(|c| p[r + 1][c] - p[0][c]));
    std::array::from_fn(|skip| {
        let m: [[i64; 3]; 3] = std::array::from_fn(|r| {
            let cols: Vec<i64> = (0..4).filter(|&c| c != skip).map(|c| d[r][c]).collect();
            [cols[0], cols[1], cols[2]]
        });
        let s = det3(m);
        if skip % 2 == 0 {
            s
        } else {
            -s
        }
    })
}

fn rank(vs: &[[i64; 4]]) -> usize {
    let mut m: Vec<[i128; 4]> = vs.iter().map(|v| v.map(|x| x as i128)).collect();
    let mut r = 0;
    for c in 0..4 {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                for k in 0..4 {
                    m[i][k] = m[i][k] * a - m[r][k] * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| num_integer::gcd(g, x));
                if g > 1 {
                    for x in &mut m[i] {
                        *x /= g;
                    }
                }
            }
        }
        r += 1;
    }
    r
}

/// Number of 2-faces and facets of the convex hull of a rational point set.
pub fn hull_counts(vertices: &[P4]) -> Result<(usize, usize)> {
    if vertices.iter().any(|v| v.iter().any(|c| !c.is_rational())) {
        return Err(invalid("hull counts need rational coordinates"));
    }
    let lcm = vertices.iter().flatten().fold(1i64, |l, c| num_integer::lcm(l, *c.a.denom()));
    let pts: Vec<[i64; 4]> = vertices.iter().map(|v| v.map(|c| (c.a * lcm).to_integer())).collect();
    let n = pts.len();
    let mut facets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let nv = normal([pts[i], pts[j], pts[k], pts[l]]);
                    if nv == [0; 4] {
                        continue;
                    }
                    let off: i64 = (0..4).map(|c| nv[c] * pts[i][c]).sum();
                    let (mut pos, mut neg) = (false, false);
                    let mut on = Vec::new();
                    for (m, p) in pts.iter().enumerate() {
                        let s: i64 = (0..4).map(|c| nv[c] * p[c]).sum::<i64>() - off;
                        pos |= s > 0;
                        neg |= s < 0;
                        if pos && neg {
                            break;
                        }
                        if s == 0 {
                            on.push(m);
                        }
                    }
                    if !(pos && neg) {
                        facets.insert(on);
                    }
                }
            }
        }
    }
    let facets: Vec<Vec<usize>> = facets.into_iter().collect();
    let mut ridges: BTreeSet<Vec<usize>> = BTreeSet::new();
    for a in 0..facets.len() {
        for b in a + 1..facets.len() {
            let common: Vec<usize> = facets[a].iter().filter(|x| facets[b].contains(x)).copied().collect();
            if common.len() < 3 {
                continue;
            }
            let diffs: Vec<[i64; 4]> =
                common[1..].iter().map(|&x| std::array::from_fn(|c| pts[x][c] - pts[common[0]][c])).collect();
            if rank(&diffs) == 2 {
                ridges.insert(common);
            }
        }
    }
    Ok((ridges.len(), facets.len()))
}
