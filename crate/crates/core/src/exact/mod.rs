//! Exact arithmetic substrate.

mod qsqrt2;
mod quaternion;
mod vec8;

pub use qsqrt2::QSqrt2;
pub use quaternion::{hurwitz_units, t2_set, QuatF, QuatQ, Quaternion};
pub use vec8::Vec8;

/// Reduced fraction with positive denominator.
pub type Rational = num_rational::Ratio<i64>;

/// Shorthand for `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Shorthand for an integer rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}
