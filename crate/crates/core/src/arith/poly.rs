use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{int, Rational};
use crate::error::{Error, Result};

/// Polynomial in the symbol `n` with rational coefficients.
///
/// Coefficients are stored densely in ascending order of degree. The last
/// stored coefficient is never zero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The polynomial `n`.
    pub fn symbol() -> Self {
        Polynomial {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(value: Rational) -> Self {
        Self::from_coeffs(vec![value])
    }

    /// `n + shift`.
    pub fn shifted_symbol(shift: i64) -> Self {
        Self::from_coeffs(vec![int(shift), Rational::one()])
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Constant coefficient, zero for the zero polynomial.
    pub fn constant_term(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_int(&self, at: i64) -> Rational {
        self.eval(&int(at))
    }

    /// Polynomial long division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let lead = divisor.leading().expect("division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / lead;
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Self::zero(),
            Some(lead) if lead.is_one() => self.clone(),
            Some(lead) => self.scale(&lead.recip()),
        }
    }

    /// Splits `self = content * primitive` where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    ///
    /// The zero polynomial yields `(0, 0)`.
    pub fn primitive_split(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut g = scaled.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if scaled.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        let primitive = scaled.into_iter().map(|c| c / &g).collect();
        (Rational::new(g, lcm), primitive)
    }

    pub(crate) fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    /// All integer roots, ascending, each listed once.
    pub fn integer_roots(&self) -> Result<Vec<i64>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (_, coeffs) = self.primitive_split();
        let mut roots = Vec::new();
        let zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if zeros > 0 {
            roots.push(0);
        }
        let coeffs = &coeffs[zeros..];
        if coeffs.len() > 1 {
            for r in nonzero_root_candidates(coeffs) {
                if eval_integer(coeffs, r).is_zero() {
                    roots.push(r);
                }
            }
        }
        roots.sort_unstable();
        Ok(roots)
    }

    /// Removes every integer-linear factor, returning `(root, multiplicity)`
    /// pairs sorted by descending root together with the residual
    /// polynomial. The residual keeps the original content.
    pub fn split_linear_factors(&self) -> Result<(Vec<(i64, u32)>, Polynomial)> {
        let roots = self.integer_roots()?;
        let mut residual = self.clone();
        let mut factors = Vec::with_capacity(roots.len());
        for &r in roots.iter().rev() {
            let linear = Self::shifted_symbol(-r);
            let mut mult = 0;
            loop {
                let (q, rem) = residual.div_rem(&linear);
                if !rem.is_zero() {
                    break;
                }
                residual = q;
                mult += 1;
            }
            factors.push((r, mult));
        }
        Ok((factors, residual))
    }
}

fn eval_integer(coeffs: &[BigInt], at: i64) -> BigInt {
    let at = BigInt::from(at);
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * &at + c)
}

/// Candidate nonzero integer roots of a primitive integer polynomial with a
/// nonzero constant term.
///
/// Every integer root divides the constant term and is bounded in modulus by
/// the Fujiwara bound; whichever enumeration is shorter is used.
fn nonzero_root_candidates(coeffs: &[BigInt]) -> Vec<i64> {
    let c0 = coeffs[0].abs();
    let bound = fujiwara_bound(coeffs).min(c0.clone());
    let mut out = Vec::new();
    let scan_len = bound.to_u64().unwrap_or(u64::MAX);
    let sqrt_c0 = c0.sqrt();
    let divisor_len = sqrt_c0.to_u64().unwrap_or(u64::MAX);
    let mut push = |d: &BigInt| {
        if d <= &bound {
            if let Some(d) = d.to_i64() {
                out.push(d);
                out.push(-d);
            }
        }
    };
    if scan_len <= divisor_len {
        for d in 1..=scan_len {
            let d = BigInt::from(d);
            if (&c0 % &d).is_zero() {
                push(&d);
            }
        }
    } else {
        for d in 1..=divisor_len {
            let d = BigInt::from(d);
            if (&c0 % &d).is_zero() {
                let co = &c0 / &d;
                push(&d);
                if co != d {
                    push(&co);
                }
            }
        }
    }
    out
}

/// Integer upper bound on the modulus of every complex root.
fn fujiwara_bound(coeffs: &[BigInt]) -> BigInt {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg].abs();
    let mut max = BigInt::zero();
    for k in 1..=deg {
        let mut c = coeffs[deg - k].abs();
        if k == deg {
            c = (c + 1u32) / 2u32;
        }
        let ratio = c.div_ceil(&lead);
        let mut root = ratio.nth_root(k as u32);
        if root.pow(k as u32) < ratio {
            root += 1u32;
        }
        if root > max {
            max = root;
        }
    }
    max * 2u32 + 1u32
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &-rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_integers(c)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn integer_roots_examples() {
        assert_eq!(p(&[2, 3, 1]).integer_roots().unwrap(), vec![-2, -1]);
        assert_eq!(p(&[1, 0, 1]).integer_roots().unwrap(), Vec::<i64>::new());
        assert_eq!(p(&[0, 2, 2]).integer_roots().unwrap(), vec![-1, 0]);
        assert_eq!(Polynomial::zero().integer_roots(), Err(Error::ZeroPolynomial));
        assert!(p(&[7]).integer_roots().unwrap().is_empty());
    }

    #[test]
    fn rational_coefficients_are_scaled() {
        // (n - 3)(n + 1/2) = n^2 - 5/2 n - 3/2
        let q = Polynomial::from_coeffs(vec![super::super::rat(-3, 2), super::super::rat(-5, 2), int(1)]);
        assert_eq!(q.integer_roots().unwrap(), vec![3]);
    }

    #[test]
    fn split_linear_factors_with_multiplicity() {
        // 3 n^2 (n+1)^2 (n^2 + 1)
        let q = &(&p(&[0, 0, 3]) * &p(&[1, 1]).pow(2)) * &p(&[1, 0, 1]);
        let (factors, residual) = q.split_linear_factors().unwrap();
        assert_eq!(factors, vec![(0, 2), (-1, 2)]);
        assert_eq!(residual, p(&[3, 0, 3]));
    }

    #[test]
    fn gcd_is_monic() {
        let a = &p(&[1, 1]) * &p(&[2, 1]);
        let b = &p(&[2, 2]) * &p(&[5, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(p(&[3]).gcd(&p(&[0, 1])), Polynomial::one());
    }

    #[test]
    fn primitive_split_examples() {
        let (c, prim) = Polynomial::from_coeffs(vec![super::super::rat(-1, 2), super::super::rat(-3, 4)]).primitive_split();
        assert_eq!(c, super::super::rat(-1, 4));
        assert_eq!(prim, vec![BigInt::from(2), BigInt::from(3)]);
    }

    proptest! {
        #[test]
        fn planted_roots_are_found(
            roots in proptest::collection::vec(-10i64..=10, 0..=4),
            extra in proptest::collection::vec(-5i64..=5, 0..=3),
            scale in prop_oneof![-7i64..=-1, 1i64..=7],
        ) {
            let mut q = p(&[scale]);
            for &r in &roots {
                q = &q * &p(&[-r, 1]);
            }
            let tail = Polynomial::from_integers(&extra);
            if !tail.is_zero() {
                q = &q * &tail;
            }
            prop_assume!(q.degree().unwrap_or(0) <= 6);
            let found = q.integer_roots().unwrap();
            for r in -40i64..=40 {
                prop_assert_eq!(found.contains(&r), q.eval_int(r).is_zero(), "r = {}", r);
            }
            for r in &found {
                prop_assert!(q.eval_int(*r).is_zero());
            }
        }

        #[test]
        fn div_rem_reconstructs(
            a in proptest::collection::vec(-9i64..=9, 0..=6),
            b in proptest::collection::vec(-9i64..=9, 1..=4),
        ) {
            let (a, b) = (p(&a), p(&b));
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }
    }
}
