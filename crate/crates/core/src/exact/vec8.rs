use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::Rational;
use crate::error::{invalid, Result};

/// Point of `Z⁸ ∪ (Z+½)⁸` stored as twice its coordinates.
///
/// All eight doubled entries share parity: even for integer points, odd for
/// half-integer points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec8 {
    doubled: [i32; 8],
}

impl Vec8 {
    pub const ZERO: Vec8 = Vec8 { doubled: [0; 8] };

    pub fn from_doubled(doubled: [i32; 8]) -> Result<Self> {
        let p = doubled[0].rem_euclid(2);
        if doubled.iter().any(|d| d.rem_euclid(2) != p) {
            return Err(invalid(format!("mixed parity in doubled coordinates {doubled:?}")));
        }
        Ok(Self { doubled })
    }

    pub fn from_integers(v: [i32; 8]) -> Self {
        Self { doubled: v.map(|x| 2 * x) }
    }

    pub fn doubled(&self) -> [i32; 8] {
        self.doubled
    }

    pub fn coord(&self, i: usize) -> Rational {
        Rational::new(self.doubled[i] as i64, 2)
    }

    pub fn coords(&self) -> [Rational; 8] {
        std::array::from_fn(|i| self.coord(i))
    }

    pub fn to_f64(&self) -> [f64; 8] {
        self.doubled.map(|d| d as f64 / 2.0)
    }

    pub fn is_integral(&self) -> bool {
        self.doubled[0] % 2 == 0
    }

    /// Four times the squared norm.
    pub fn norm2_x4(&self) -> i64 {
        self.doubled.iter().map(|&d| (d as i64) * (d as i64)).sum()
    }

    pub fn norm2(&self) -> Rational {
        Rational::new(self.norm2_x4(), 4)
    }

    pub fn dot(&self, o: &Vec8) -> Rational {
        let s: i64 = self.doubled.iter().zip(o.doubled.iter()).map(|(&a, &b)| a as i64 * b as i64).sum();
        Rational::new(s, 4)
    }

    pub fn coordinate_sum(&self) -> Rational {
        Rational::new(self.doubled.iter().map(|&d| d as i64).sum(), 2)
    }

    /// Membership in E8: coordinate sum is an even integer.
    pub fn in_e8(&self) -> bool {
        self.doubled.iter().map(|&d| d as i64).sum::<i64>().rem_euclid(4) == 0
    }
}

impl Add for Vec8 {
    type Output = Vec8;

    fn add(self, o: Vec8) -> Vec8 {
        Vec8 { doubled: std::array::from_fn(|i| self.doubled[i] + o.doubled[i]) }
    }
}

impl Sub for Vec8 {
    type Output = Vec8;

    fn sub(self, o: Vec8) -> Vec8 {
        Vec8 { doubled: std::array::from_fn(|i| self.doubled[i] - o.doubled[i]) }
    }
}

impl Neg for Vec8 {
    type Output = Vec8;

    fn neg(self) -> Vec8 {
        Vec8 { doubled: self.doubled.map(|d| -d) }
    }
}

impl fmt::Display for Vec8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_vec8() -> impl Strategy<Value = Vec8> {
        (any::<bool>(), proptest::array::uniform8(-5i32..5)).prop_map(|(half, v)| {
            let d = v.map(|x| 2 * x + half as i32);
            Vec8::from_doubled(d).unwrap()
        })
    }

    #[test]
    fn rejects_mixed_parity() {
        assert!(Vec8::from_doubled([1, 0, 0, 0, 0, 0, 0, 0]).is_err());
        assert!(Vec8::from_doubled([1, 1, 1, 1, -1, -1, -1, -1]).is_ok());
    }

    #[test]
    fn norms_and_membership() {
        let v = Vec8::from_doubled([1; 8]).unwrap();
        assert_eq!(v.norm2(), Rational::from_integer(2));
        assert!(v.in_e8());
        let w = Vec8::from_integers([1, 0, 0, 0, 0, 0, 0, 0]);
        assert!(!w.in_e8());
    }

    proptest! {
        #[test]
        fn parity_survives_add_and_neg(a in arb_vec8(), b in arb_vec8()) {
            prop_assert!(Vec8::from_doubled((a + b).doubled()).is_ok());
            prop_assert!(Vec8::from_doubled((-a).doubled()).is_ok());
            prop_assert!(Vec8::from_doubled((a - b).doubled()).is_ok());
        }

        #[test]
        fn norm_matches_dot(a in arb_vec8()) {
            prop_assert_eq!(a.norm2(), a.dot(&a));
        }
    }
}
