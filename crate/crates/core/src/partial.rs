//! Partial fractions of a product of distinct shifted reciprocals.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{int, Rational};
use crate::error::{Error, Result};

/// Which harmonic number multiplies the reciprocal product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Weight {
    /// `H_k`
    Hk,
    /// `H_{n-k}`
    HnMinusK,
}

/// Distinct shifts `p_i` of the factors `1/(k + p_i)`, plus the weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftSet {
    shifts: Vec<i64>,
    weight: Weight,
}

impl ShiftSet {
    pub fn new(shifts: Vec<i64>, weight: Weight) -> Result<Self> {
        if shifts.is_empty() {
            return Err(Error::EmptyShiftSet);
        }
        check_distinct(&shifts)?;
        Ok(ShiftSet { shifts, weight })
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn weight(&self) -> Weight {
        self.weight
    }

    /// Smallest summation index at which every factor `k + p_i` is positive.
    pub fn lower_limit(&self) -> u64 {
        let min = *self.shifts.iter().min().expect("nonempty");
        if min <= 0 {
            (1 - min) as u64
        } else {
            0
        }
    }

    /// `prod 1/(k + p_i)` at an integer `k`; `None` at a pole.
    pub fn reciprocal_product(&self, k: i64) -> Option<Rational> {
        let mut den = Rational::one();
        for &p in &self.shifts {
            let f = k + p;
            if f == 0 {
                return None;
            }
            den *= int(f);
        }
        Some(den.recip())
    }
}

fn check_distinct(shifts: &[i64]) -> Result<()> {
    for (i, p) in shifts.iter().enumerate() {
        if shifts[..i].contains(p) {
            return Err(Error::DuplicateShift(*p));
        }
    }
    Ok(())
}

/// `prod_i 1/(k+p_i) = sum_i alpha_i/(k+p_i)`, terms in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractionExpansion {
    pub terms: Vec<(i64, Rational)>,
}

impl PartialFractionExpansion {
    pub fn alpha(&self, shift: i64) -> Option<&Rational> {
        self.terms.iter().find(|(p, _)| *p == shift).map(|(_, a)| a)
    }

    /// `sum_i alpha_i/(k+p_i)`; `None` at a pole.
    pub fn eval(&self, k: i64) -> Option<Rational> {
        let mut total = Rational::zero();
        for (p, alpha) in &self.terms {
            let f = k + p;
            if f == 0 {
                return None;
            }
            total += alpha / int(f);
        }
        Some(total)
    }
}

/// Expands a product of distinct reciprocals.
///
/// Starts from `alpha_1 = 1`. Appending the factor `1/(k+p_i)` divides every
/// earlier `alpha_j` by `p_i - p_j` and sets `alpha_i` to minus their sum.
pub fn expand_product(shifts: &[i64]) -> Result<PartialFractionExpansion> {
    if shifts.is_empty() {
        return Err(Error::EmptyShiftSet);
    }
    check_distinct(shifts)?;
    let mut alphas = vec![Rational::zero(); shifts.len()];
    alphas[0] = Rational::one();
    for i in 1..shifts.len() {
        let mut last = Rational::zero();
        for j in 0..i {
            alphas[j] /= int(shifts[i] - shifts[j]);
            last -= &alphas[j];
        }
        alphas[i] = last;
    }
    Ok(PartialFractionExpansion {
        terms: shifts.iter().copied().zip(alphas).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    #[test]
    fn expansion_examples() {
        assert_eq!(expand_product(&[5]).unwrap().terms, vec![(5, Rational::one())]);
        assert_eq!(
            expand_product(&[1, 2]).unwrap().terms,
            vec![(1, Rational::one()), (2, -Rational::one())]
        );
        let e = expand_product(&[0, 1, 2]).unwrap();
        assert_eq!(e.terms, vec![(0, rat(1, 2)), (1, rat(-1, 1)), (2, rat(1, 2))]);
        assert_eq!(e.eval(1), Some(rat(1, 6)));
    }

    #[test]
    fn duplicates_and_empty_sets_are_rejected() {
        assert_eq!(expand_product(&[1, 3, 1]), Err(Error::DuplicateShift(1)));
        assert_eq!(expand_product(&[]), Err(Error::EmptyShiftSet));
        assert_eq!(ShiftSet::new(vec![0, 0], Weight::Hk), Err(Error::DuplicateShift(0)));
        assert_eq!(ShiftSet::new(vec![], Weight::Hk), Err(Error::EmptyShiftSet));
    }

    #[test]
    fn lower_limits() {
        let d = |s: &[i64]| ShiftSet::new(s.to_vec(), Weight::Hk).unwrap().lower_limit();
        assert_eq!(d(&[1, 2]), 0);
        assert_eq!(d(&[0, 1]), 1);
        assert_eq!(d(&[-2, -1, 0, 1]), 3);
        assert_eq!(d(&[7]), 0);
    }

    fn arb_shifts() -> impl Strategy<Value = Vec<i64>> {
        proptest::sample::subsequence((-6i64..=9).collect::<Vec<_>>(), 1..=5).prop_shuffle()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn expansion_is_exact(shifts in arb_shifts()) {
            let set = ShiftSet::new(shifts.clone(), Weight::Hk).unwrap();
            let e = expand_product(&shifts).unwrap();
            for k in -20i64..=20 {
                prop_assert_eq!(e.eval(k), set.reciprocal_product(k));
            }
            if shifts.len() >= 2 {
                let sum: Rational = e.terms.iter().map(|(_, a)| a.clone()).sum();
                prop_assert!(sum.is_zero());
            }
        }

        #[test]
        fn expansion_ignores_order(shifts in arb_shifts(), seed in any::<u64>()) {
            let mut permuted = shifts.clone();
            let len = permuted.len();
            permuted.rotate_left((seed as usize) % len);
            if seed & (1 << 40) != 0 {
                permuted.reverse();
            }
            let a = expand_product(&shifts).unwrap();
            let b = expand_product(&permuted).unwrap();
            for p in &shifts {
                prop_assert_eq!(a.alpha(*p), b.alpha(*p));
            }
        }
    }
}
