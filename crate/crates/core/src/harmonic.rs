//! Harmonic numbers and expressions over the basis
//! `H_{n+1}^i (H_{n+1}^(2))^j`, `i <= 2`, `j <= 1`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{PoleSum, Rational, RationalFunction};
use crate::error::{Error, Result};

/// Exact generalized harmonic number `H_q^(m) = sum_{k=1}^{q} 1/k^m`.
///
/// `H_0^(m) = 0` for every order.
pub fn harmonic_number(q: i64, order: u32) -> Result<Rational> {
    if q < 0 {
        return Err(Error::InvalidArgument("harmonic index must be nonnegative"));
    }
    if order == 0 {
        return Err(Error::InvalidArgument("harmonic order must be at least 1"));
    }
    Ok((1..=q).fold(Rational::zero(), |acc, k| {
        acc + Rational::new(BigInt::one(), BigInt::from(k).pow(order))
    }))
}

/// Prefix cache of harmonic numbers per order, filled on demand.
///
/// Give each worker its own table; results never depend on what is cached.
#[derive(Clone, Debug, Default)]
pub struct HarmonicTable {
    // prefixes[m - 1][q] = H_q^(m)
    prefixes: Vec<Vec<Rational>>,
}

impl HarmonicTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `H_q^(order)`. Panics if `order` is zero.
    pub fn get(&mut self, q: u64, order: u32) -> &Rational {
        assert!(order >= 1, "harmonic order must be at least 1");
        let slot = (order - 1) as usize;
        if self.prefixes.len() <= slot {
            self.prefixes.resize_with(slot + 1, Vec::new);
        }
        let prefix = &mut self.prefixes[slot];
        if prefix.is_empty() {
            prefix.push(Rational::zero());
        }
        let q = usize::try_from(q).expect("harmonic index fits in memory");
        while prefix.len() <= q {
            let k = BigInt::from(prefix.len());
            let next = prefix.last().unwrap() + Rational::new(BigInt::one(), k.pow(order));
            prefix.push(next);
        }
        &prefix[q]
    }
}

/// Basis monomial `H_{n+1}^h1 * (H_{n+1}^(2))^h2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    h1: u8,
    h2: u8,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { h1: 0, h2: 0 };
    pub const H1: Monomial = Monomial { h1: 1, h2: 0 };
    pub const H1_SQ: Monomial = Monomial { h1: 2, h2: 0 };
    pub const H2: Monomial = Monomial { h1: 0, h2: 1 };
    pub const H1_H2: Monomial = Monomial { h1: 1, h2: 1 };
    pub const H1_SQ_H2: Monomial = Monomial { h1: 2, h2: 1 };

    /// Every basis monomial, in display order.
    pub const ALL: [Monomial; 6] = [
        Self::H1_SQ,
        Self::H1,
        Self::H2,
        Self::H1_H2,
        Self::H1_SQ_H2,
        Self::ONE,
    ];

    /// `None` outside the basis.
    pub fn new(h1: u32, h2: u32) -> Option<Self> {
        (h1 <= 2 && h2 <= 1).then_some(Monomial {
            h1: h1 as u8,
            h2: h2 as u8,
        })
    }

    /// Power of `H_{n+1}`.
    pub fn h1_degree(self) -> u32 {
        self.h1.into()
    }

    /// Power of `H_{n+1}^(2)`.
    pub fn h2_degree(self) -> u32 {
        self.h2.into()
    }

    pub fn checked_mul(self, other: Monomial) -> Option<Monomial> {
        Self::new(
            self.h1_degree() + other.h1_degree(),
            self.h2_degree() + other.h2_degree(),
        )
    }
}

/// Linear combination of basis monomials with rational-function
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HarmonicExpr {
    coeffs: BTreeMap<Monomial, RationalFunction>,
}

impl HarmonicExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(monomial: Monomial, coeff: RationalFunction) -> Self {
        let mut e = Self::zero();
        e.add_term(monomial, coeff);
        e
    }

    pub fn constant(coeff: RationalFunction) -> Self {
        Self::term(Monomial::ONE, coeff)
    }

    /// `H_{n+1}^(order)` for order 1 or 2.
    pub fn basis_harmonic(order: u32) -> Result<Self> {
        let monomial = match order {
            1 => Monomial::H1,
            2 => Monomial::H2,
            _ => return Err(Error::InvalidArgument("basis orders are 1 and 2")),
        };
        Ok(Self::term(monomial, RationalFunction::one()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, monomial: Monomial) -> Option<&RationalFunction> {
        self.coeffs.get(&monomial)
    }

    /// Coefficient with absent keys read as zero.
    pub fn coeff_or_zero(&self, monomial: Monomial) -> RationalFunction {
        self.coeff(monomial)
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    /// Nonzero terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &RationalFunction)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn add_term(&mut self, monomial: Monomial, coeff: RationalFunction) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.remove(&monomial) {
            None => {
                self.coeffs.insert(monomial, coeff);
            }
            Some(old) => {
                let sum = &old + &coeff;
                if !sum.is_zero() {
                    self.coeffs.insert(monomial, sum);
                }
            }
        }
    }

    /// Replaces one coefficient outright (zero removes it).
    pub fn set_coeff(&mut self, monomial: Monomial, coeff: RationalFunction) {
        if coeff.is_zero() {
            self.coeffs.remove(&monomial);
        } else {
            self.coeffs.insert(monomial, coeff);
        }
    }

    pub fn scale(&self, factor: &RationalFunction) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        HarmonicExpr {
            coeffs: self
                .coeffs
                .iter()
                .map(|(m, c)| (*m, c * factor))
                .collect(),
        }
    }

    /// Coefficient-wise linear combination `sum scalar_i * expr_i`.
    pub fn combine<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (RationalFunction, &'a HarmonicExpr)>,
    {
        let mut out = Self::zero();
        for (scalar, expr) in terms {
            for (m, c) in expr.terms() {
                out.add_term(m, &scalar * c);
            }
        }
        out
    }

    /// Distributive product; fails if any monomial leaves the basis.
    pub fn try_mul(&self, other: &HarmonicExpr) -> Result<Self> {
        let mut out = Self::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                let m = ma.checked_mul(mb).ok_or(Error::BasisOverflow)?;
                out.add_term(m, ca * cb);
            }
        }
        Ok(out)
    }

    /// Exact value at `n = at`.
    pub fn eval(&self, at: u64) -> Result<Rational> {
        self.eval_with(&mut HarmonicTable::new(), at)
    }

    pub fn eval_with(&self, table: &mut HarmonicTable, at: u64) -> Result<Rational> {
        let n = i64::try_from(at).map_err(|_| Error::InvalidArgument("n out of range"))?;
        let h1 = table.get(at + 1, 1).clone();
        let h2 = table.get(at + 1, 2).clone();
        let mut total = Rational::zero();
        for (m, c) in self.terms() {
            let mut value = c.eval(n)?;
            for _ in 0..m.h1_degree() {
                value *= &h1;
            }
            for _ in 0..m.h2_degree() {
                value *= &h2;
            }
            total += value;
        }
        Ok(total)
    }
}

fn check_order(order: u32) -> Result<()> {
    match order {
        1 | 2 => Ok(()),
        _ => Err(Error::InvalidArgument("basis orders are 1 and 2")),
    }
}

/// `H_{n+p}^(m) = H_{n+1}^(m) + sum_{k=2}^{p} 1/(n+k)^m`.
pub fn shift_plus(p: i64, order: u32) -> Result<HarmonicExpr> {
    if p < 1 {
        return Err(Error::InvalidArgument("shift must be at least 1"));
    }
    check_order(order)?;
    let mut correction = PoleSum::new();
    for k in 2..=p {
        correction.add(k, order, Rational::one());
    }
    let mut e = HarmonicExpr::basis_harmonic(order)?;
    e.add_term(Monomial::ONE, correction.to_ratfunc());
    Ok(e)
}

/// `H_{n-p+1}^(m) = H_{n+1}^(m) - sum_{k=0}^{p-1} 1/(n-k+1)^m`.
pub fn shift_minus(p: i64, order: u32) -> Result<HarmonicExpr> {
    if p < 1 {
        return Err(Error::InvalidArgument("shift must be at least 1"));
    }
    check_order(order)?;
    let mut correction = PoleSum::new();
    for k in 0..p {
        correction.add(1 - k, order, -Rational::one());
    }
    let mut e = HarmonicExpr::basis_harmonic(order)?;
    e.add_term(Monomial::ONE, correction.to_ratfunc());
    Ok(e)
}

impl Add for &HarmonicExpr {
    type Output = HarmonicExpr;

    fn add(self, rhs: &HarmonicExpr) -> HarmonicExpr {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, c.clone());
        }
        out
    }
}

impl Sub for &HarmonicExpr {
    type Output = HarmonicExpr;

    fn sub(self, rhs: &HarmonicExpr) -> HarmonicExpr {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, -c);
        }
        out
    }
}

impl Neg for &HarmonicExpr {
    type Output = HarmonicExpr;

    fn neg(self) -> HarmonicExpr {
        HarmonicExpr {
            coeffs: self.coeffs.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Add for HarmonicExpr {
    type Output = HarmonicExpr;

    fn add(self, rhs: HarmonicExpr) -> HarmonicExpr {
        &self + &rhs
    }
}

impl Sub for HarmonicExpr {
    type Output = HarmonicExpr;

    fn sub(self, rhs: HarmonicExpr) -> HarmonicExpr {
        &self - &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_ratfunc, rat};
    use proptest::prelude::*;

    fn rf(s: &str) -> RationalFunction {
        parse_ratfunc(s).unwrap()
    }

    fn c(r: Rational) -> RationalFunction {
        RationalFunction::constant(r)
    }

    #[test]
    fn harmonic_number_examples() {
        assert_eq!(harmonic_number(0, 1), Ok(Rational::zero()));
        assert_eq!(harmonic_number(0, 5), Ok(Rational::zero()));
        assert_eq!(harmonic_number(3, 1), Ok(rat(11, 6)));
        assert_eq!(harmonic_number(3, 2), Ok(rat(49, 36)));
        assert!(matches!(harmonic_number(-1, 1), Err(Error::InvalidArgument(_))));
        assert!(matches!(harmonic_number(3, 0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn table_agrees_with_direct_sum() {
        let mut table = HarmonicTable::new();
        for q in (0..40).rev() {
            for m in 1..=3 {
                assert_eq!(table.get(q, m), &harmonic_number(q as i64, m).unwrap());
            }
        }
    }

    #[test]
    fn harmonic_differences() {
        let mut table = HarmonicTable::new();
        for q in 1..=100u64 {
            let diff = table.get(q, 1).clone() - table.get(q - 1, 1);
            assert_eq!(diff, rat(1, q as i64));
        }
    }

    #[test]
    fn combine_examples() {
        let e = HarmonicExpr::term(Monomial::H1, rf("n/(n+3)"));
        assert!(HarmonicExpr::combine([(RationalFunction::one(), &e), (-RationalFunction::one(), &e)]).is_zero());

        let half = HarmonicExpr::term(Monomial::H1, c(rat(1, 2)));
        assert_eq!(
            HarmonicExpr::combine([(RationalFunction::from_integer(2), &half)]),
            HarmonicExpr::term(Monomial::H1, RationalFunction::one())
        );

        let a = HarmonicExpr::constant(rf("(n+1)/(n+2)"));
        let b = HarmonicExpr::term(Monomial::H1, rf("-1/(n+2)"));
        let sum = HarmonicExpr::combine([(RationalFunction::one(), &a), (RationalFunction::one(), &b)]);
        assert_eq!(sum.coeff(Monomial::ONE), Some(&rf("(n+1)/(n+2)")));
        assert_eq!(sum.coeff(Monomial::H1), Some(&rf("-1/(n+2)")));
        assert_eq!(sum.terms().count(), 2);
    }

    #[test]
    fn product_examples() {
        let k = rf("1/(n+4)");
        let e = &HarmonicExpr::basis_harmonic(1).unwrap() + &HarmonicExpr::constant(k.clone());
        let sq = e.try_mul(&e).unwrap();
        assert_eq!(sq.coeff(Monomial::H1_SQ), Some(&RationalFunction::one()));
        assert_eq!(sq.coeff(Monomial::H1), Some(&(&k + &k)));
        assert_eq!(sq.coeff(Monomial::ONE), Some(&(&k * &k)));

        let h1 = HarmonicExpr::basis_harmonic(1).unwrap();
        let h2 = HarmonicExpr::basis_harmonic(2).unwrap();
        let h1sq = HarmonicExpr::term(Monomial::H1_SQ, RationalFunction::one());
        assert_eq!(h1sq.try_mul(&h1), Err(Error::BasisOverflow));
        assert_eq!(h2.try_mul(&h2), Err(Error::BasisOverflow));
        assert_eq!(
            h1sq.try_mul(&h2).unwrap(),
            HarmonicExpr::term(Monomial::H1_SQ_H2, RationalFunction::one())
        );
    }

    #[test]
    fn shift_plus_examples() {
        assert_eq!(shift_plus(1, 1).unwrap(), HarmonicExpr::basis_harmonic(1).unwrap());
        let e = shift_plus(3, 1).unwrap();
        assert_eq!(e.coeff(Monomial::H1), Some(&RationalFunction::one()));
        assert_eq!(e.coeff(Monomial::ONE), Some(&rf("(2*n+5)/((n+2)*(n+3))")));
        let e = shift_plus(2, 2).unwrap();
        assert_eq!(e.coeff(Monomial::H2), Some(&RationalFunction::one()));
        assert_eq!(e.coeff(Monomial::ONE), Some(&rf("1/(n+2)^2")));
        assert!(shift_plus(0, 1).is_err());
        assert!(shift_plus(2, 3).is_err());
    }

    #[test]
    fn shift_minus_examples() {
        let e = shift_minus(1, 1).unwrap();
        assert_eq!(e.coeff(Monomial::ONE), Some(&rf("-1/(n+1)")));
        let e = shift_minus(2, 1).unwrap();
        assert_eq!(e.coeff(Monomial::ONE), Some(&rf("-(2*n+1)/(n*(n+1))")));
        assert_eq!(e.eval(3), Ok(rat(3, 2)));
        let e = shift_minus(1, 2).unwrap();
        assert_eq!(e.coeff(Monomial::H2), Some(&RationalFunction::one()));
        assert_eq!(e.coeff(Monomial::ONE), Some(&rf("-1/(n+1)^2")));
        assert!(shift_minus(0, 2).is_err());
    }

    #[test]
    fn eval_examples() {
        let mut e = HarmonicExpr::term(Monomial::H1_SQ, c(rat(1, 2)));
        e.add_term(Monomial::H2, c(rat(-1, 2)));
        assert_eq!(e.eval(2), Ok(Rational::one()));
        assert_eq!(HarmonicExpr::zero().eval(17), Ok(Rational::zero()));
        assert_eq!(HarmonicExpr::constant(rf("1/(n-2)")).eval(2), Err(Error::PoleAt(2)));
    }

    #[test]
    fn shift_identities_on_the_grid() {
        let mut table = HarmonicTable::new();
        for p in 1..=8i64 {
            for m in 1..=2 {
                let plus = shift_plus(p, m).unwrap();
                let minus = shift_minus(p, m).unwrap();
                for n in 0..=30u64 {
                    assert_eq!(plus.eval(n).unwrap(), harmonic_number(n as i64 + p, m).unwrap());
                    if n as i64 >= p {
                        let want = table.get(n + 1 - p as u64, m).clone();
                        assert_eq!(minus.eval_with(&mut table, n).unwrap(), want);
                    }
                }
            }
        }
    }

    fn arb_expr(max_h1: u32) -> impl Strategy<Value = HarmonicExpr> {
        proptest::collection::vec(
            (0..=max_h1, 0..=1u32, -5i64..=5, -4i64..=4),
            0..=3,
        )
        .prop_map(|terms| {
            let mut e = HarmonicExpr::zero();
            for (i, j, a, s) in terms {
                let coeff = RationalFunction::shifted_reciprocal(s, 1).scale(&rat(a, 1));
                e.add_term(Monomial::new(i, j).unwrap(), coeff);
            }
            e
        })
    }

    proptest! {
        #[test]
        fn product_commutes(a in arb_expr(2), b in arb_expr(2)) {
            prop_assert_eq!(a.try_mul(&b), b.try_mul(&a));
        }

        #[test]
        fn product_distributes(a in arb_expr(1), b in arb_expr(1), c in arb_expr(1)) {
            let a = HarmonicExpr::combine([(RationalFunction::one(), &a)]);
            let (Ok(ab), Ok(ac)) = (a.try_mul(&b), a.try_mul(&c)) else { return Ok(()); };
            let lhs = a.try_mul(&(&b + &c));
            if let Ok(lhs) = lhs {
                prop_assert_eq!(lhs, &ab + &ac);
            }
        }

        #[test]
        fn shift_plus_matches_definition(p in 1i64..=6, m in 1u32..=2, n in 0u64..=20) {
            prop_assert_eq!(shift_plus(p, m).unwrap().eval(n).unwrap(), harmonic_number(n as i64 + p, m).unwrap());
        }
    }
}
