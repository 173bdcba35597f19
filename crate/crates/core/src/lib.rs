#![cfg_attr(not(test), no_std)]

//! Exact closed forms for finite sums of harmonic numbers weighted by
//! products of distinct reciprocals.
//!
//! The sums handled are
//!
//! ```text
//! sum_{k=d}^{n} H_k     / ((k+p_1)(k+p_2)...(k+p_m))
//! sum_{k=d}^{n} H_{n-k} / ((k+p_1)(k+p_2)...(k+p_m))
//! ```
//!
//! for distinct integer shifts `p_i`, with `d = max(0, 1 - min p_i)`. Every
//! result is expressed in the basis `{1, H_{n+1}, H_{n+1}^2, H_{n+1}^(2)}`
//! with coefficients that are rational functions of `n`.
//!
//! The crate is `no_std` and needs only `alloc`. Rendering, the JSON format
//! and the command line live in the `harmsum` crate.

extern crate alloc;

pub mod arith;
pub mod engine;
mod error;
pub mod harmonic;
pub mod partial;
pub mod verify;

pub use arith::{parse_ratfunc, Notation, Polynomial, Rational, RationalFunction};
pub use engine::{closed_form, ClosedForm};
pub use error::{Error, Result};
pub use harmonic::{harmonic_number, shift_minus, shift_plus, HarmonicExpr, HarmonicTable, Monomial};
pub use partial::{expand_product, PartialFractionExpansion, ShiftSet, Weight};
pub use verify::{brute_force_sum, verify_closed_form, verify_range, Mismatch, Status, VerifyReport};
