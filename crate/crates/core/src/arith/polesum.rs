use alloc::collections::BTreeMap;

use num_traits::Zero;

use super::{Polynomial, Rational, RationalFunction};

/// Accumulator for sums `c + sum c_{a,e} / (n+a)^e`.
///
/// Summing shifted reciprocals one at a time through [`RationalFunction`]
/// pays for a gcd on every step; this collects the terms and canonicalizes
/// once.
#[derive(Clone, Debug, Default)]
pub struct PoleSum {
    constant: Rational,
    terms: BTreeMap<(i64, u32), Rational>,
}

impl PoleSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `coeff / (n + shift)^exp`.
    pub fn add(&mut self, shift: i64, exp: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        if exp == 0 {
            self.constant += coeff;
            return;
        }
        *self.terms.entry((shift, exp)).or_insert_with(Rational::zero) += coeff;
    }

    pub fn add_constant(&mut self, value: Rational) {
        self.constant += value;
    }

    pub fn to_ratfunc(&self) -> RationalFunction {
        let mut top: BTreeMap<i64, u32> = BTreeMap::new();
        for (&(shift, exp), c) in &self.terms {
            if !c.is_zero() {
                let e = top.entry(shift).or_insert(0);
                *e = (*e).max(exp);
            }
        }
        let factor = |skip: Option<(i64, u32)>| {
            top.iter().fold(Polynomial::one(), |acc, (&shift, &exp)| {
                let exp = match skip {
                    Some((s, e)) if s == shift => exp - e,
                    _ => exp,
                };
                &acc * &Polynomial::shifted_symbol(shift).pow(exp)
            })
        };
        let den = factor(None);
        let mut num = den.scale(&self.constant);
        for (&(shift, exp), c) in &self.terms {
            if !c.is_zero() {
                num = &num + &factor(Some((shift, exp))).scale(c);
            }
        }
        RationalFunction::new(num, den).expect("product of linear factors is nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_ratfunc, rat};

    #[test]
    fn matches_stepwise_addition() {
        let mut acc = PoleSum::new();
        let mut direct = RationalFunction::zero();
        for (shift, exp, c) in [(2, 1, rat(1, 3)), (-1, 2, rat(-2, 1)), (2, 2, rat(5, 7)), (0, 1, rat(1, 1)), (2, 1, rat(-1, 3))] {
            acc.add(shift, exp, c.clone());
            direct = &direct + &RationalFunction::shifted_reciprocal(shift, exp).scale(&c);
        }
        acc.add_constant(rat(3, 2));
        direct = &direct + &RationalFunction::constant(rat(3, 2));
        assert_eq!(acc.to_ratfunc(), direct);
    }

    #[test]
    fn cancelling_terms_vanish() {
        let mut acc = PoleSum::new();
        acc.add(4, 1, rat(1, 1));
        acc.add(4, 1, rat(-1, 1));
        assert!(acc.to_ratfunc().is_zero());
        let mut acc = PoleSum::new();
        acc.add(1, 1, rat(1, 1));
        acc.add(2, 1, rat(-1, 1));
        assert_eq!(acc.to_ratfunc(), parse_ratfunc("1/((n+1)*(n+2))").unwrap());
    }
}
