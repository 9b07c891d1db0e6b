//! Exact rational arithmetic.
//!
//! All reference solves and formula checks are done over arbitrary-precision
//! rationals so that equality means equality, not closeness. The type is
//! always kept in lowest terms with a positive denominator.

use num::BigInt;

pub type Rational = num::BigRational;

/// Rational from a signed integer.
pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from an unsigned integer.
pub fn natural(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `num/den`. Panics if `den` is zero.
pub fn fraction(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
