use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Num, One, Zero};

use super::{rat, Rational};

/// Quaternion `w + x·i + y·j + z·k`.
///
/// `Mul` uses the convention `i² = j² = k² = -1`, `j·i = k`, so `i·j = -k`.
/// This is Hamilton's product with the factors swapped; anything chiral
/// computed with it comes out mirrored relative to the textbook rule.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quaternion<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

/// Exact quaternion.
pub type QuatQ = Quaternion<Rational>;
/// Floating-point quaternion.
pub type QuatF = Quaternion<f64>;

impl<T> Quaternion<T> {
    pub const fn new(w: T, x: T, y: T, z: T) -> Self {
        Self { w, x, y, z }
    }
}

impl<T: Copy> Quaternion<T> {
    pub fn to_array(self) -> [T; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn from_array(a: [T; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }
}

impl<T: Copy + Num + Neg<Output = T>> Quaternion<T> {
    pub fn scalar(s: T) -> Self {
        Self::new(s, T::zero(), T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Self::scalar(T::one())
    }

    pub fn i() -> Self {
        Self::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn j() -> Self {
        Self::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn k() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm2(self) -> T {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn dot(self, o: Self) -> T {
        self.w * o.w + self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn scale(self, s: T) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    /// Hamilton's product `a·b` with `i·j = k`.
    pub fn hamilton(a: Self, b: Self) -> Self {
        Self::new(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )
    }

    pub fn is_zero(self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

impl<T: Copy + Num + Neg<Output = T>> Mul for Quaternion<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self::hamilton(rhs, self)
    }
}

impl<T: Copy + Num> Add for Quaternion<T> {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Self::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Copy + Num> Sub for Quaternion<T> {
    type Output = Self;

    fn sub(self, o: Self) -> Self {
        Self::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Copy + Neg<Output = T>> Neg for Quaternion<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl QuatQ {
    pub fn to_f64(self) -> QuatF {
        let f = |r: Rational| *r.numer() as f64 / *r.denom() as f64;
        QuatF::new(f(self.w), f(self.x), f(self.y), f(self.z))
    }

    /// Inverse `conj(q)/norm²(q)`; `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        let n = self.norm2();
        if n.is_zero() {
            None
        } else {
            Some(self.conj().scale(n.recip()))
        }
    }
}

impl QuatF {
    pub fn norm(self) -> f64 {
        self.norm2().sqrt()
    }

    pub fn normalized(self) -> Self {
        self.scale(1.0 / self.norm())
    }

    pub fn distance(self, o: Self) -> f64 {
        (self - o).norm()
    }
}

impl<T: fmt::Display> fmt::Display for Quaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.w, self.x, self.y, self.z)
    }
}

/// The 24 Hurwitz units `T₁ = {±1, ±i, ±j, ±k, (±1±i±j±k)/2}`, sorted.
pub fn hurwitz_units() -> Vec<QuatQ> {
    let mut out = Vec::with_capacity(24);
    let one = Rational::one();
    let zero = Rational::zero();
    for axis in 0..4 {
        for s in [one, -one] {
            let mut a = [zero; 4];
            a[axis] = s;
            out.push(QuatQ::from_array(a));
        }
    }
    let h = rat(1, 2);
    for mask in 0..16u32 {
        let c = |b: u32| if mask >> b & 1 == 1 { -h } else { h };
        out.push(QuatQ::new(c(0), c(1), c(2), c(3)));
    }
    out.sort();
    out
}

/// `T₂ = (1+i)·T₁`, sorted.
pub fn t2_set() -> Vec<QuatQ> {
    let one_i = QuatQ::one() + QuatQ::i();
    let mut out: Vec<QuatQ> = hurwitz_units().into_iter().map(|t| one_i * t).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn q(w: i64, x: i64, y: i64, z: i64) -> QuatQ {
        QuatQ::new(w.into(), x.into(), y.into(), z.into())
    }

    #[test]
    fn ji_is_k() {
        assert_eq!(QuatQ::j() * QuatQ::i(), QuatQ::k());
        assert_eq!(QuatQ::i() * QuatQ::j(), -QuatQ::k());
        assert_eq!(QuatQ::k() * QuatQ::j(), QuatQ::i());
        assert_eq!(QuatQ::i() * QuatQ::k(), QuatQ::j());
        for u in [QuatQ::i(), QuatQ::j(), QuatQ::k()] {
            assert_eq!(u * u, -QuatQ::one());
        }
    }

    #[test]
    fn identity_and_norm_expansion() {
        let a = q(3, -1, 4, 2);
        assert_eq!(QuatQ::one() * a, a);
        assert_eq!(a * QuatQ::one(), a);
        assert_eq!((q(1, 1, 0, 0)) * q(1, -1, 0, 0), q(2, 0, 0, 0));
    }

    #[test]
    fn hurwitz_group_closed() {
        let t1 = hurwitz_units();
        assert_eq!(t1.len(), 24);
        let set: BTreeSet<_> = t1.iter().copied().collect();
        assert_eq!(set.len(), 24);
        for a in &t1 {
            assert_eq!(a.norm2(), Rational::one());
            for b in &t1 {
                assert!(set.contains(&(*a * *b)));
            }
        }
    }

    #[test]
    fn t2_norms_and_parity() {
        let t2 = t2_set();
        assert_eq!(t2.len(), 24);
        assert!(t2.contains(&q(1, 1, 0, 0)));
        for t in &t2 {
            assert_eq!(t.norm2(), Rational::from_integer(2));
            let ints = t.to_array().iter().filter(|c| c.is_integer()).count();
            assert!(ints == 0 || ints == 4);
        }
    }

    fn arb_quat() -> impl Strategy<Value = QuatQ> {
        let c = (-20i64..20, 1i64..6).prop_map(|(n, d)| rat(n, d));
        (c.clone(), c.clone(), c.clone(), c).prop_map(|(w, x, y, z)| QuatQ::new(w, x, y, z))
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(a in arb_quat(), b in arb_quat()) {
            prop_assert_eq!((a * b).norm2(), a.norm2() * b.norm2());
        }

        #[test]
        fn conj_reverses_products(a in arb_quat(), b in arb_quat()) {
            prop_assert_eq!((a * b).conj(), b.conj() * a.conj());
        }

        #[test]
        fn multiplication_is_associative(a in arb_quat(), b in arb_quat(), c in arb_quat()) {
            prop_assert_eq!((a * b) * c, a * (b * c));
        }

        #[test]
        fn conj_times_self_is_norm(a in arb_quat()) {
            prop_assert_eq!(a.conj() * a, QuatQ::scalar(a.norm2()));
        }
    }
}
