use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{int, Polynomial, Rational};
use crate::error::{Error, Result};

/// Quotient of two polynomials in `n`, held in a unique canonical form.
///
/// Numerator and denominator are coprime, and the denominator has coprime
/// integer coefficients with a positive leading coefficient. Zero is `0/1`.
/// Equal values therefore compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Canonicalizes `num / den`.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() || den.is_constant() {
            return Ok(Self::from_coprime(num, den));
        }
        let g = num.gcd(&den);
        if g.is_constant() {
            Ok(Self::from_coprime(num, den))
        } else {
            Ok(Self::from_coprime(num.div_rem(&g).0, den.div_rem(&g).0))
        }
    }

    /// Normalizes the content of an already coprime pair.
    fn from_coprime(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (content, primitive) = den.primitive_split();
        RationalFunction {
            num: num.scale(&content.recip()),
            den: Polynomial::from_bigints(&primitive),
        }
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(value: Rational) -> Self {
        Self::from_polynomial(Polynomial::constant(value))
    }

    pub fn from_integer(value: i64) -> Self {
        Self::constant(int(value))
    }

    pub fn from_polynomial(num: Polynomial) -> Self {
        RationalFunction {
            num,
            den: Polynomial::one(),
        }
    }

    /// `1 / (n + shift)^exp`.
    pub fn shifted_reciprocal(shift: i64, exp: u32) -> Self {
        RationalFunction {
            num: Polynomial::one(),
            den: Polynomial::shifted_symbol(shift).pow(exp),
        }
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(factor),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, exp: u32) -> Self {
        // coprime parts stay coprime
        RationalFunction {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    /// Exact value at the integer `at`.
    pub fn eval(&self, at: i64) -> Result<Rational> {
        let den = self.den.eval_int(at);
        if den.is_zero() {
            return Err(Error::PoleAt(at));
        }
        Ok(self.num.eval_int(at) / den)
    }

    /// Integer poles, ascending.
    pub fn integer_poles(&self) -> alloc::vec::Vec<i64> {
        self.den
            .integer_roots()
            .expect("canonical denominator is nonzero")
    }

}

/// Exact quotient by a divisor known to divide.
fn exact_div(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if b.is_constant() {
        return a.scale(&b.leading().expect("nonzero divisor").recip());
    }
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero());
    q
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // With coprime parts, only the gcd of the two denominators can
        // reappear as a common factor.
        let g = self.den.gcd(&rhs.den);
        if g.is_constant() {
            return RationalFunction::from_coprime(
                &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                &self.den * &rhs.den,
            );
        }
        let b = exact_div(&self.den, &g);
        let d = exact_div(&rhs.den, &g);
        let t = &(&self.num * &d) + &(&rhs.num * &b);
        if t.is_zero() {
            return RationalFunction::zero();
        }
        let h = t.gcd(&g);
        let (t, g) = if h.is_constant() {
            (t, g)
        } else {
            (exact_div(&t, &h), exact_div(&g, &h))
        };
        RationalFunction::from_coprime(t, &(&b * &d) * &g)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &-rhs
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        RationalFunction::from_coprime(
            &exact_div(&self.num, &g1) * &exact_div(&rhs.num, &g2),
            &exact_div(&self.den, &g2) * &exact_div(&rhs.den, &g1),
        )
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl From<Rational> for RationalFunction {
    fn from(value: Rational) -> Self {
        Self::constant(value)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(value: Polynomial) -> Self {
        Self::from_polynomial(value)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_integers(c)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let half = rf(&[2, 2], &[4, 4]);
        assert_eq!(half.numer(), &Polynomial::constant(rat(1, 2)));
        assert_eq!(half.denom(), &Polynomial::one());

        let exact = rf(&[-1, 0, 1], &[1, 1]);
        assert_eq!(exact.numer(), &p(&[-1, 1]));
        assert_eq!(exact.denom(), &p(&[1]));

        let f = rf(&[2, 3, 1], &[2, 2]);
        assert_eq!(f.numer(), &Polynomial::from_coeffs(vec![int(1), rat(1, 2)]));
        assert_eq!(f.denom(), &p(&[1]));
        assert_eq!(f, RationalFunction::from_polynomial(p(&[2, 1])).scale(&rat(1, 2)));

        assert_eq!(
            RationalFunction::new(p(&[1]), Polynomial::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn denominator_is_made_integer_primitive() {
        // (1/2) / (-n/3 - 2/3) = -3/(2(n+2))
        let f = RationalFunction::new(
            Polynomial::constant(rat(1, 2)),
            Polynomial::from_coeffs(vec![rat(-2, 3), rat(-1, 3)]),
        )
        .unwrap();
        assert_eq!(f.denom(), &p(&[2, 1]));
        assert_eq!(f.numer(), &Polynomial::constant(rat(-3, 2)));
    }

    #[test]
    fn arithmetic_examples() {
        let a = RationalFunction::shifted_reciprocal(1, 1);
        let b = RationalFunction::shifted_reciprocal(2, 1);
        assert_eq!(&a + &b, rf(&[3, 2], &[2, 3, 1]));
        assert_eq!(&a * &RationalFunction::one(), a);
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &a).denom(), &Polynomial::one());
        assert_eq!(a.checked_div(&RationalFunction::zero()), Err(Error::DivisionByZero));
        assert_eq!(a.checked_div(&b).unwrap(), rf(&[2, 1], &[1, 1]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(rf(&[1, 1], &[2, 1]).eval(2), Ok(rat(3, 4)));
        assert_eq!(rf(&[1], &[0, 1]).eval(0), Err(Error::PoleAt(0)));
        // (2n+5)/((n+2)(n+3)) at 1
        assert_eq!(rf(&[5, 2], &[6, 5, 1]).eval(1), Ok(rat(7, 12)));
    }

    fn arb_rf() -> impl Strategy<Value = RationalFunction> {
        (
            proptest::collection::vec(-6i64..=6, 0..=3),
            proptest::collection::vec(-6i64..=6, 1..=3),
        )
            .prop_filter_map("zero denominator", |(n, d)| {
                RationalFunction::new(p(&n), p(&d)).ok()
            })
    }

    proptest! {
        #[test]
        fn scaling_both_parts_is_invisible(
            num in proptest::collection::vec(-6i64..=6, 0..=3),
            den in proptest::collection::vec(-6i64..=6, 1..=3),
            a in -9i64..=9, b in 1i64..=9,
        ) {
            prop_assume!(a != 0);
            let (num, den) = (p(&num), p(&den));
            prop_assume!(!den.is_zero());
            let s = rat(a, b);
            prop_assert_eq!(
                RationalFunction::new(num.scale(&s), den.scale(&s)).unwrap(),
                RationalFunction::new(num, den).unwrap()
            );
        }

        #[test]
        fn evaluation_is_a_homomorphism(f in arb_rf(), g in arb_rf(), at in -12i64..=12) {
            let (Ok(fv), Ok(gv)) = (f.eval(at), g.eval(at)) else { return Ok(()); };
            prop_assert_eq!((&f + &g).eval(at).unwrap(), &fv + &gv);
            prop_assert_eq!((&f - &g).eval(at).unwrap(), &fv - &gv);
            prop_assert_eq!((&f * &g).eval(at).unwrap(), &fv * &gv);
            if !gv.is_zero() {
                if let Ok(q) = f.checked_div(&g).unwrap().eval(at) {
                    prop_assert_eq!(q, &fv / &gv);
                }
            }
        }

        #[test]
        fn field_axioms(f in arb_rf(), g in arb_rf(), h in arb_rf()) {
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
            if !f.is_zero() {
                prop_assert_eq!(&f * &f.recip().unwrap(), RationalFunction::one());
            }
        }
    }
}
