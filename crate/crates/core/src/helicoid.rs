//! Screw axes `L/d` from Gosset parameters, the generating relations between
//! them, space-group compatibility, the sphere-and-equator cover model and
//! helical rod geometry.

use std::f64::consts::PI;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::exact::Rational;

/// Exponents of E8.
pub const E8_EXPONENTS: [u64; 8] = [1, 7, 11, 13, 17, 19, 23, 29];

/// Parameters of a Gosset rod.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GossetParams {
    pub i_n: u64,
    pub k_js: u64,
    pub m_js: u64,
    pub gamma1: u64,
    pub gamma2: u64,
}

impl GossetParams {
    pub fn new(i_n: u64, k_js: u64, m_js: u64, gamma1: u64, gamma2: u64) -> Result<Self> {
        if i_n == 0 || k_js == 0 || m_js == 0 {
            return Err(invalid("I_n, k_js and m_js must be positive"));
        }
        for g in [gamma1, gamma2] {
            if g != 1 && g != 2 {
                return Err(invalid(format!("sheet count must be 1 or 2, got {g}")));
            }
        }
        Ok(Self { i_n, k_js, m_js, gamma1, gamma2 })
    }

    /// `I_s = k_js·(1 + m_js)`.
    pub fn i_s(&self) -> u64 {
        self.k_js * (1 + self.m_js)
    }
}

/// Screw axis `L/d`: `d` full turns over `L` steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ScrewAxis {
    pub l: u64,
    pub d: u64,
}

impl ScrewAxis {
    pub fn new(l: u64, d: u64) -> Result<Self> {
        if l == 0 || d == 0 {
            return Err(invalid("L and d must be positive"));
        }
        let g = l.gcd(&d);
        Ok(Self { l: l / g, d: d / g })
    }

    /// Turns per step, `d/L`.
    pub fn turns_per_step(&self) -> Rational {
        Rational::new(self.d as i64, self.l as i64)
    }

    pub fn step_angle_deg(&self) -> f64 {
        360.0 * self.d as f64 / self.l as f64
    }
}

impl std::fmt::Display for ScrewAxis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.l, self.d)
    }
}

/// A computed axis together with non-fatal remarks.
#[derive(Clone, Debug, Serialize)]
pub struct ScrewResult {
    pub params: GossetParams,
    pub i_s: u64,
    pub axis: ScrewAxis,
    pub step_angle_deg: f64,
    pub warnings: Vec<String>,
}

/// `L/d = (8/(γ₁γ₂))·(I_n/I_s)·((m+1)/m)`, reduced.
pub fn screw_from_gosset(g: GossetParams) -> ScrewResult {
    let i_s = g.i_s();
    let ratio = Rational::new(8, (g.gamma1 * g.gamma2) as i64)
        * Rational::new(g.i_n as i64, i_s as i64)
        * Rational::new(g.m_js as i64 + 1, g.m_js as i64);
    let axis = ScrewAxis { l: *ratio.numer() as u64, d: *ratio.denom() as u64 };
    let mut warnings = Vec::new();
    if !E8_EXPONENTS.contains(&g.m_js) {
        warnings.push(format!("m_js = {} is not an exponent of E8", g.m_js));
    }
    ScrewResult { params: g, i_s, axis, step_angle_deg: axis.step_angle_deg(), warnings }
}

/// `p = 8·I_n / (γ₁γ₂k_js)`; rejects a non-integral quotient.
pub fn points_per_equator(i_n: u64, gamma1: u64, gamma2: u64, k_js: u64) -> Result<u64> {
    let den = gamma1 * gamma2 * k_js;
    if den == 0 {
        return Err(invalid("γ₁, γ₂ and k_js must be positive"));
    }
    let num = 8 * i_n;
    if num % den != 0 {
        return Err(invalid(format!("8·I_n/(γ₁γ₂k_js) = {num}/{den} leaves remainder {}", num % den)));
    }
    Ok(num / den)
}

/// `x mod 1` reduced into `(−½, ½]`.
pub fn centred_mod1(x: Rational) -> Rational {
    let half = Rational::new(1, 2);
    let mut r = x - x.floor();
    if r > half {
        r -= Rational::one();
    }
    r
}

/// Net turn of one axis raised to a power.
#[derive(Clone, Debug, Serialize)]
pub struct RelationTerm {
    pub axis: String,
    pub power: u64,
    /// `power·d/L` reduced into `(−½, ½]`.
    pub net_turn: String,
    /// Sign relative to the first term: `-1` marks opposite chirality.
    pub chirality: i8,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub terms: Vec<RelationTerm>,
    /// All net turns agree up to sign.
    pub consistent: bool,
    pub common_turn: String,
}

/// Net turns `power·d/L (mod 1)` of each `(axis, power)` pair.
pub fn check_generating_relations(items: &[(ScrewAxis, u64)]) -> RelationReport {
    let turns: Vec<Rational> =
        items.iter().map(|(a, p)| centred_mod1(a.turns_per_step() * Rational::from_integer(*p as i64))).collect();
    let reference = turns.first().copied().unwrap_or_default();
    let terms = items
        .iter()
        .zip(&turns)
        .map(|((a, p), t)| RelationTerm {
            axis: a.to_string(),
            power: *p,
            net_turn: t.to_string(),
            chirality: if t.signum() == reference.signum() || t.is_zero() { 1 } else { -1 },
        })
        .collect();
    let consistent = turns.iter().all(|t| t.abs() == reference.abs());
    RelationReport { terms, consistent, common_turn: reference.abs().to_string() }
}

/// The reference relations `(30/11)³ = (40/11)⁴ = (40/9)⁴ = (10/1)¹`.
pub fn reference_relations() -> Vec<(ScrewAxis, u64)> {
    vec![
        (ScrewAxis { l: 30, d: 11 }, 3),
        (ScrewAxis { l: 40, d: 11 }, 4),
        (ScrewAxis { l: 40, d: 9 }, 4),
        (ScrewAxis { l: 10, d: 1 }, 1),
    ]
}

/// Reference Gosset tuples for the three named axes.
pub fn reference_gosset() -> [GossetParams; 3] {
    [
        GossetParams { i_n: 120, k_js: 8, m_js: 11, gamma1: 2, gamma2: 2 },
        GossetParams { i_n: 240, k_js: 24, m_js: 9, gamma1: 2, gamma2: 1 },
        GossetParams { i_n: 240, k_js: 12, m_js: 11, gamma1: 2, gamma2: 2 },
    ]
}

/// Lattice whose translations constrain a screw.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AxialLattice {
    /// Cubic (D3): axes of order 1, 2, 3, 4.
    D3,
    /// Hexagonal (A2×A1): axes of order 1, 2, 3, 6.
    A2A1,
}

impl AxialLattice {
    pub fn orders(&self) -> &'static [u64] {
        match self {
            Self::D3 => &[1, 2, 3, 4],
            Self::A2A1 => &[1, 2, 3, 6],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpaceGroupClass {
    /// Screw `n_m` in the lattice.
    Crystallographic {
        n: u64,
        m: u64,
    },
    Noncrystallographic {
        reason: String,
    },
}

/// Crystallographic iff `L/d = n` is an allowed order and `λ·h = t/n` with `t`
/// a multiple of the axial period.
pub fn spacegroup_classify(
    axis: ScrewAxis,
    lambda: i64,
    h: Rational,
    period: Rational,
    lattice: AxialLattice,
) -> Result<SpaceGroupClass> {
    if !h.is_positive() || !period.is_positive() {
        return Err(invalid("h and the axial period must be positive"));
    }
    if axis.d != 1 {
        return Ok(SpaceGroupClass::Noncrystallographic { reason: format!("L/d = {axis} is not an integer") });
    }
    let n = axis.l;
    if !lattice.orders().contains(&n) {
        return Ok(SpaceGroupClass::Noncrystallographic { reason: format!("order {n} not allowed in {lattice:?}") });
    }
    let t = Rational::from_integer(lambda) * h * Rational::from_integer(n as i64) / period;
    if !t.is_integer() {
        return Ok(SpaceGroupClass::Noncrystallographic { reason: format!("λ·h·n/period = {t} is not an integer") });
    }
    let m = t.to_integer().rem_euclid(n as i64) as u64;
    Ok(SpaceGroupClass::Crystallographic { n, m })
}

/// `k` spheres on a line, `p` equator points each, one marked point.
#[derive(Clone, Debug, Serialize)]
pub struct CoverModel {
    pub k: u64,
    pub p: u64,
    /// One-based index of the marked equator point.
    pub marked: u64,
    /// Sphere centres on the axis.
    pub centres: Vec<[f64; 3]>,
    /// Equator points of the first sphere (unit radius).
    pub equator: Vec<[f64; 3]>,
}

pub fn cover_model(k: u64, p: u64, m: u64) -> Result<CoverModel> {
    if k == 0 || p < m + 1 {
        return Err(invalid(format!("need k ≥ 1 and p ≥ m+1, got k={k}, p={p}, m={m}")));
    }
    let centres = (0..k).map(|i| [0.0, 0.0, i as f64]).collect();
    let equator = (0..p)
        .map(|j| {
            let t = 2.0 * PI * j as f64 / p as f64;
            [t.cos(), t.sin(), 0.0]
        })
        .collect();
    Ok(CoverModel { k, p, marked: m + 1, centres, equator })
}

/// One helical strand.
#[derive(Clone, Debug, Serialize)]
pub struct Strand {
    pub phase: f64,
    pub z0: f64,
    pub points: Vec<[f64; 3]>,
}

/// Helical rod `⟨L/d | c⟩` of radius `r`.
#[derive(Clone, Debug, Serialize)]
pub struct Rod {
    pub axis: ScrewAxis,
    pub r: f64,
    pub c: f64,
    pub strands: Vec<Strand>,
}

impl Rod {
    /// Chord between consecutive points of a strand.
    pub fn chord(&self) -> f64 {
        let t = 2.0 * PI * self.axis.d as f64 / self.axis.l as f64;
        (2.0 * self.r * self.r * (1.0 - t.cos()) + self.c * self.c).sqrt()
    }
}

/// Default rise per step: one pitch `2.4·r` per `L` steps.
pub fn default_rise(axis: ScrewAxis, r: f64) -> f64 {
    2.4 * r / axis.l as f64
}

/// Strand `s` of `strands`, step `k`: angle `2πkd/L + 2πs/strands`, height `k·c`.
pub fn generate_rod(axis: ScrewAxis, r: f64, c: Option<f64>, strands: usize, steps: usize) -> Result<Rod> {
    if !(r > 0.0) || steps == 0 || strands == 0 {
        return Err(invalid("need r > 0, steps ≥ 1 and at least one strand"));
    }
    let c = c.unwrap_or_else(|| default_rise(axis, r));
    let step = 2.0 * PI * axis.d as f64 / axis.l as f64;
    let strands = (0..strands)
        .map(|s| {
            let phase = 2.0 * PI * s as f64 / strands as f64;
            let points = (0..steps)
                .map(|k| {
                    let t = step * k as f64 + phase;
                    [r * t.cos(), r * t.sin(), k as f64 * c]
                })
                .collect();
            Strand { phase, z0: 0.0, points }
        })
        .collect();
    Ok(Rod { axis, r, c, strands })
}

/// Step angle of the Boerdijk–Coxeter tetrahelix, `arccos(−2/3)`, in degrees.
pub fn tetrahelix_angle_deg() -> f64 {
    (-2.0f64 / 3.0).acos().to_degrees()
}

#[derive(Clone, Debug, Serialize)]
pub struct TetrahelixReport {
    pub axis: String,
    pub step_angle_deg: f64,
    pub tetrahelix_angle_deg: f64,
    pub deviation_deg: f64,
}

pub fn tetrahelix_comparison(axis: ScrewAxis) -> TetrahelixReport {
    let a = axis.step_angle_deg();
    let b = tetrahelix_angle_deg();
    TetrahelixReport {
        axis: axis.to_string(),
        step_angle_deg: a,
        tetrahelix_angle_deg: b,
        deviation_deg: (a - b).abs(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn axis(l: u64, d: u64) -> ScrewAxis {
        ScrewAxis::new(l, d).unwrap()
    }

    #[test]
    fn named_axes() {
        let got: Vec<ScrewAxis> = reference_gosset().iter().map(|&g| screw_from_gosset(g).axis).collect();
        assert_eq!(got, vec![axis(30, 11), axis(40, 9), axis(40, 11)]);
        assert!(screw_from_gosset(reference_gosset()[1]).warnings.len() == 1);
        assert!(screw_from_gosset(reference_gosset()[0]).warnings.is_empty());
    }

    #[test]
    fn gosset_validation() {
        assert!(GossetParams::new(120, 8, 11, 3, 2).is_err());
        assert!(GossetParams::new(0, 8, 11, 2, 2).is_err());
        assert_eq!(GossetParams::new(120, 8, 11, 2, 2).unwrap().i_s(), 96);
    }

    #[test]
    fn equator_points() {
        assert_eq!(points_per_equator(120, 2, 2, 8).unwrap(), 30);
        assert_eq!(points_per_equator(240, 2, 1, 24).unwrap(), 40);
        assert!(points_per_equator(240, 2, 2, 7).is_err());
    }

    #[test]
    fn relations() {
        let r = check_generating_relations(&reference_relations());
        assert!(r.consistent);
        assert_eq!(r.common_turn, "1/10");
        let turns: Vec<&str> = r.terms.iter().map(|t| t.net_turn.as_str()).collect();
        assert_eq!(turns, ["1/10", "1/10", "-1/10", "1/10"]);
        assert_eq!(r.terms[2].chirality, -1);
        assert_eq!(centred_mod1(rat(33, 30)), rat(1, 10));
        assert_eq!(centred_mod1(rat(36, 40)), rat(-1, 10));
    }

    #[test]
    fn spacegroups() {
        let one = rat(1, 1);
        let nc = |c| matches!(c, SpaceGroupClass::Noncrystallographic { .. });
        assert!(nc(spacegroup_classify(axis(30, 11), 1, one, one, AxialLattice::D3).unwrap()));
        assert_eq!(
            spacegroup_classify(axis(4, 1), 1, rat(1, 4), one, AxialLattice::D3).unwrap(),
            SpaceGroupClass::Crystallographic { n: 4, m: 1 }
        );
        assert!(nc(spacegroup_classify(axis(5, 1), 1, one, one, AxialLattice::D3).unwrap()));
        assert!(nc(spacegroup_classify(axis(6, 1), 1, one, one, AxialLattice::D3).unwrap()));
        assert_eq!(
            spacegroup_classify(axis(6, 1), 5, rat(1, 6), one, AxialLattice::A2A1).unwrap(),
            SpaceGroupClass::Crystallographic { n: 6, m: 5 }
        );
        assert!(nc(spacegroup_classify(axis(4, 1), 1, rat(1, 3), one, AxialLattice::D3).unwrap()));
        assert!(spacegroup_classify(axis(4, 1), 1, rat(0, 1), one, AxialLattice::D3).is_err());
    }

    #[test]
    fn cover_models() {
        assert_eq!(cover_model(8, 30, 11).unwrap().marked, 12);
        let m = cover_model(24, 40, 9).unwrap();
        assert_eq!((m.marked, m.centres.len(), m.equator.len()), (10, 24, 40));
        assert!(cover_model(1, 5, 5).is_err());
    }

    #[test]
    fn rod_30_11() {
        let rod = generate_rod(axis(30, 11), 1.0, None, 1, 31).unwrap();
        let pts = &rod.strands[0].points;
        assert_eq!(pts.len(), 31);
        // After 30 steps: 11 whole turns, back above the start.
        assert!((pts[30][0] - pts[0][0]).abs() < 1e-12 && (pts[30][1] - pts[0][1]).abs() < 1e-12);
        assert!((pts[30][2] - 30.0 * rod.c).abs() < 1e-12);
        assert!((axis(30, 11).step_angle_deg() - 132.0).abs() < 1e-12);
    }

    /// Solves the chord conditions `|v_{k+j} − v_k| = 1`, `j = 1, 2, 3`, for a
    /// helix with step angle θ, radius r and rise h by bisection on θ.
    fn tetrahelix_oracle() -> f64 {
        let residual = |t: f64| {
            let (a1, a2, a3) = (2.0 * (1.0 - t.cos()), 2.0 * (1.0 - (2.0 * t).cos()), 2.0 * (1.0 - (3.0 * t).cos()));
            // a1·r² + h² = 1, a2·r² + 4h² = 1
            let r2 = 3.0 / (4.0 * a1 - a2);
            let h2 = 1.0 - a1 * r2;
            a3 * r2 + 9.0 * h2 - 1.0
        };
        let (mut lo, mut hi) = (2.0, 2.5);
        assert!(residual(lo).signum() != residual(hi).signum());
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if residual(mid).signum() == residual(lo).signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo.to_degrees()
    }

    #[test]
    fn tetrahelix_deviation() {
        let oracle = tetrahelix_oracle();
        assert!((oracle - tetrahelix_angle_deg()).abs() < 1e-9);
        let rep = tetrahelix_comparison(axis(30, 11));
        assert!(rep.deviation_deg < 0.2);
        assert!((rep.deviation_deg - 0.189_685_104_221_401_95).abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn scaling_invariance(i in 1u64..50, k in 1u64..20, m in 1u64..30, s in 1u64..6, g1 in 1u64..3, g2 in 1u64..3) {
            let a = screw_from_gosset(GossetParams { i_n: i, k_js: k, m_js: m, gamma1: g1, gamma2: g2 }).axis;
            let b = screw_from_gosset(GossetParams { i_n: i * s, k_js: k * s, m_js: m, gamma1: g1, gamma2: g2 }).axis;
            prop_assert_eq!(a, b);
        }

        #[test]
        fn l_steps_make_d_turns(l in 1u64..60, d in 1u64..60) {
            let a = axis(l, d);
            prop_assert!((a.turns_per_step() * Rational::from_integer(a.l as i64)).is_integer());
            let total = 2.0 * PI * a.d as f64 / a.l as f64 * a.l as f64;
            prop_assert!((total - 2.0 * PI * a.d as f64).abs() < 1e-12 * a.d as f64 * 10.0);
        }

        #[test]
        fn rod_on_cylinder_with_constant_chord(l in 2u64..50, d in 1u64..50, r in 0.1f64..5.0, n in 1usize..4) {
            let rod = generate_rod(axis(l, d), r, None, n, 20).unwrap();
            let chord = rod.chord();
            for s in &rod.strands {
                for w in s.points.windows(2) {
                    prop_assert!(((w[0][0].hypot(w[0][1])) - r).abs() < 1e-12);
                    let dd: f64 = (0..3).map(|i| (w[1][i] - w[0][i]).powi(2)).sum::<f64>().sqrt();
                    prop_assert!((dd - chord).abs() < 1e-9);
                }
            }
        }
    }
}
