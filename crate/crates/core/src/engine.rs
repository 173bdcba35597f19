//! Closed forms for single reciprocals and for products of distinct
//! reciprocals.
//!
//! Each single-reciprocal formula returns the sum from the lower limit `d`
//! up to `n` as a [`HarmonicExpr`]. Products are reduced to single
//! reciprocals by [`expand_product`] and recombined with the weights
//! `alpha_i`.

use num_traits::{One, Zero};

use crate::arith::{int, rat, PoleSum, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::harmonic::{harmonic_number, shift_minus, shift_plus, HarmonicExpr, Monomial};
use crate::partial::{expand_product, ShiftSet, Weight};

/// Closed form of `sum_{k=d}^{n} prod_i 1/(k+p_i) * w_k`, valid for every
/// `n >= n_min`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub expr: HarmonicExpr,
    pub lower_limit: u64,
    pub n_min: u64,
    pub source: ShiftSet,
}

fn harmonic(q: i64, order: u32) -> Rational {
    harmonic_number(q, order).expect("nonnegative index, positive order")
}

fn constant(value: Rational) -> HarmonicExpr {
    HarmonicExpr::constant(RationalFunction::constant(value))
}

fn h1() -> HarmonicExpr {
    HarmonicExpr::term(Monomial::H1, RationalFunction::one())
}

fn h2() -> HarmonicExpr {
    HarmonicExpr::term(Monomial::H2, RationalFunction::one())
}

fn half(e: &HarmonicExpr) -> HarmonicExpr {
    e.scale(&RationalFunction::constant(rat(1, 2)))
}

/// `-sum_{k=0}^{p-2} H_k / (n+k+2)`, shared by both positive-shift formulas.
fn subtract_shifted_tail(tail: &mut PoleSum, p: i64) {
    for k in 0..=p - 2 {
        tail.add(k + 2, 1, -harmonic(k, 1));
    }
}

/// `-sum_{k=lo}^{d-1} H_{n-k} / (k+shift)` with `H_{n-k}` kept symbolic as
/// `H_{n+1} - sum_{j=0}^{k} 1/(n+1-j)`. Returns the `H_{n+1}` coefficient.
fn subtract_reflected_head(tail: &mut PoleSum, lo: i64, d: u64, shift: i64) -> Rational {
    let mut h1_coeff = Rational::zero();
    for k in lo..d as i64 {
        let w = -Rational::new(One::one(), (k + shift).into());
        for j in 0..=k {
            tail.add(1 - j, 1, -w.clone());
        }
        h1_coeff += w;
    }
    h1_coeff
}

/// `sum_{k=d}^{n} H_k / (k+p)` for `p >= 1`.
pub fn sum_hk_positive(p: i64, d: u64) -> Result<HarmonicExpr> {
    if p < 1 {
        return Err(Error::InvalidArgument("positive-shift formula needs p >= 1"));
    }
    let plus = shift_plus(p, 1)?;
    let a = &h1() + &constant(harmonic(p - 1, 1));
    let square = &(&a.try_mul(&a)? + &h2()) + &constant(harmonic(p - 1, 2));
    let mut e = &plus.try_mul(&a)? - &half(&square);
    let mut tail = PoleSum::new();
    subtract_shifted_tail(&mut tail, p);
    for k in 0..d as i64 {
        tail.add_constant(-harmonic(k, 1) / int(k + p));
    }
    e.add_term(Monomial::ONE, tail.to_ratfunc());
    Ok(e)
}

/// `sum_{k=d}^{n} H_k / (k-q)` for `q >= 0`, `d >= q+1`.
pub fn sum_hk_nonpositive(q: i64, d: u64) -> Result<HarmonicExpr> {
    if q < 0 {
        return Err(Error::InvalidArgument("nonpositive-shift formula needs q >= 0"));
    }
    if (d as i64) <= q {
        return Err(Error::InvalidArgument("lower limit must exceed q"));
    }
    let (m1, m2) = if q == 0 {
        (h1(), h2())
    } else {
        (shift_minus(q, 1)?, shift_minus(q, 2)?)
    };
    let hq = harmonic(q, 1);
    let b = &m1 + &constant(hq.clone());
    let square = &(&b.try_mul(&b)? + &m2) + &constant(harmonic(q, 2));
    let linear = &constant(hq) + &HarmonicExpr::constant(RationalFunction::shifted_reciprocal(1 - q, 1));
    let mut e = &half(&square) - &h1().try_mul(&linear)?;
    let mut tail = PoleSum::new();
    for k in 0..q {
        tail.add(k + 2 - q, 1, harmonic(k, 1));
    }
    for k in q + 1..d as i64 {
        tail.add_constant(-harmonic(k, 1) / int(k - q));
    }
    e.add_term(Monomial::ONE, tail.to_ratfunc());
    Ok(e)
}

/// `sum_{k=d}^{n} H_{n-k} / (k+p)` for `p >= 1`.
pub fn sum_hnk_positive(p: i64, d: u64) -> Result<HarmonicExpr> {
    if p < 1 {
        return Err(Error::InvalidArgument("positive-shift formula needs p >= 1"));
    }
    let plus1 = shift_plus(p, 1)?;
    let plus2 = shift_plus(p, 2)?;
    let h = h1();
    let cross = h.try_mul(&(&plus1 - &constant(harmonic(p - 1, 1))))?;
    let bracket = &(&(&h.try_mul(&h)? - &plus1.try_mul(&plus1)?) + &h2()) + &plus2;
    let mut e = &cross - &half(&bracket);
    let mut tail = PoleSum::new();
    subtract_shifted_tail(&mut tail, p);
    let h1_coeff = subtract_reflected_head(&mut tail, 0, d, p);
    e.add_term(Monomial::H1, RationalFunction::constant(h1_coeff));
    e.add_term(Monomial::ONE, tail.to_ratfunc());
    Ok(e)
}

/// `sum_{k=d}^{n} H_{n-k} / (k-q)` for `q >= 0`, `d >= q+1`.
pub fn sum_hnk_nonpositive(q: i64, d: u64) -> Result<HarmonicExpr> {
    if q < 0 {
        return Err(Error::InvalidArgument("nonpositive-shift formula needs q >= 0"));
    }
    if (d as i64) <= q {
        return Err(Error::InvalidArgument("lower limit must exceed q"));
    }
    let m1 = shift_minus(q + 1, 1)?;
    let m2 = shift_minus(q + 1, 2)?;
    let mut e = &m1.try_mul(&m1)? - &m2;
    let mut tail = PoleSum::new();
    let h1_coeff = subtract_reflected_head(&mut tail, q + 1, d, -q);
    e.add_term(Monomial::H1, RationalFunction::constant(h1_coeff));
    e.add_term(Monomial::ONE, tail.to_ratfunc());
    Ok(e)
}

/// Picks the single-reciprocal formula for shift `p`.
pub fn single_reciprocal_sum(p: i64, weight: Weight, d: u64) -> Result<HarmonicExpr> {
    match (weight, p >= 1) {
        (Weight::Hk, true) => sum_hk_positive(p, d),
        (Weight::Hk, false) => sum_hk_nonpositive(-p, d),
        (Weight::HnMinusK, true) => sum_hnk_positive(p, d),
        (Weight::HnMinusK, false) => sum_hnk_nonpositive(-p, d),
    }
}

/// Closed form for a shift set.
pub fn closed_form(set: &ShiftSet) -> Result<ClosedForm> {
    let d = set.lower_limit();
    let expansion = expand_product(set.shifts())?;
    let mut expr = HarmonicExpr::zero();
    for (p, alpha) in &expansion.terms {
        let single = single_reciprocal_sum(*p, set.weight(), d)?;
        expr = &expr + &single.scale(&RationalFunction::constant(alpha.clone()));
    }
    debug_assert!(expr.coeff(Monomial::H1_H2).is_none());
    debug_assert!(expr.coeff(Monomial::H1_SQ_H2).is_none());
    debug_assert!(set.shifts().len() == 1 || expr.coeff(Monomial::H1_SQ).is_none());
    let n_min = validity_floor(&expr, d);
    Ok(ClosedForm {
        expr,
        lower_limit: d,
        n_min,
        source: set.clone(),
    })
}

/// `max(d, 1 + largest integer pole of any coefficient)`.
pub fn validity_floor(expr: &HarmonicExpr, d: u64) -> u64 {
    expr.terms()
        .filter_map(|(_, c)| c.integer_poles().last().copied())
        .filter(|&pole| pole >= 0)
        .map(|pole| pole as u64 + 1)
        .fold(d, u64::max)
}
