//! Exact rational arithmetic and arithmetic in real quadratic fields.

mod quad;

pub use quad::QuadElem;

use num_bigint::BigInt;

/// Arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub(crate) fn rational_from_int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

pub(crate) fn rational_frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
