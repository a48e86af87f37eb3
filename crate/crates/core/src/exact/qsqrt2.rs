use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::Rational;

/// Element `a + b·√2` of the field `Q(√2)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct QSqrt2 {
    pub a: Rational,
    pub b: Rational,
}

impl QSqrt2 {
    pub const fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        Self { a, b: Rational::zero() }
    }

    pub fn sqrt2() -> Self {
        Self { a: Rational::zero(), b: Rational::from_integer(1) }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a - b·√2`.
    pub fn conj(self) -> Self {
        Self { a: self.a, b: -self.b }
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            (sa, _) => {
                // Opposite signs: compare a² with 2b².
                let lhs = self.a * self.a;
                let rhs = self.b * self.b * Rational::from_integer(2);
                match lhs.cmp(&rhs) {
                    Ordering::Equal => Ordering::Equal,
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                }
            }
        }
    }

    pub fn abs(self) -> Self {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self
        }
    }

    pub fn recip(self) -> Option<Self> {
        let n = self.a * self.a - self.b * self.b * Rational::from_integer(2);
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(Self { a: c.a / n, b: c.b / n })
    }

    pub fn to_f64(&self) -> f64 {
        let f = |r: Rational| *r.numer() as f64 / *r.denom() as f64;
        f(self.a) + f(self.b) * std::f64::consts::SQRT_2
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }
}

impl From<Rational> for QSqrt2 {
    fn from(a: Rational) -> Self {
        Self::rational(a)
    }
}

impl From<i64> for QSqrt2 {
    fn from(a: i64) -> Self {
        Self::rational(Rational::from_integer(a))
    }
}

impl Add for QSqrt2 {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Self { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for QSqrt2 {
    type Output = Self;

    fn sub(self, o: Self) -> Self {
        Self { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Mul for QSqrt2 {
    type Output = Self;

    fn mul(self, o: Self) -> Self {
        let two = Rational::from_integer(2);
        Self { a: self.a * o.a + two * self.b * o.b, b: self.a * o.b + self.b * o.a }
    }
}

impl Mul<Rational> for QSqrt2 {
    type Output = Self;

    fn mul(self, r: Rational) -> Self {
        Self { a: self.a * r, b: self.b * r }
    }
}

impl Neg for QSqrt2 {
    type Output = Self;

    fn neg(self) -> Self {
        Self { a: -self.a, b: -self.b }
    }
}

impl PartialOrd for QSqrt2 {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for QSqrt2 {
    fn cmp(&self, o: &Self) -> Ordering {
        (*self - *o).signum()
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}√2", self.b)
        } else {
            write!(f, "{}{:+}√2", self.a, self.b)
        }
    }
}
