//! Exact arithmetic: rationals, univariate polynomials in `n`, canonical
//! rational functions and a small expression parser.

mod display;
mod parse;
mod poly;
mod polesum;
mod ratfunc;

pub use display::{Factor, FactoredForm, Notation};
pub use parse::parse_ratfunc;
pub use poly::Polynomial;
pub use polesum::PoleSum;
pub use ratfunc::RationalFunction;

use num_bigint::BigInt;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub(crate) fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub(crate) fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}
