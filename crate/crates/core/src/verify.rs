//! Brute-force oracle and exact range verification.

use num_traits::Zero;

use crate::arith::Rational;
use crate::engine::{closed_form, ClosedForm};
use crate::error::{Error, Result};
use crate::harmonic::HarmonicTable;
use crate::partial::{ShiftSet, Weight};

/// `sum_{k=d}^{n} prod_i 1/(k+p_i) * w_k` evaluated term by term.
pub fn brute_force_sum(set: &ShiftSet, n: u64) -> Rational {
    brute_force_sum_with(&mut HarmonicTable::new(), set, n)
}

pub fn brute_force_sum_with(table: &mut HarmonicTable, set: &ShiftSet, n: u64) -> Rational {
    let mut total = Rational::zero();
    for k in set.lower_limit()..=n {
        let w = match set.weight() {
            Weight::Hk => table.get(k, 1),
            Weight::HnMinusK => table.get(n - k, 1),
        };
        if w.is_zero() {
            continue;
        }
        let factor = set
            .reciprocal_product(k as i64)
            .expect("the lower limit keeps every factor positive");
        total += factor * w;
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u64,
    pub expected: Rational,
    pub got: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub checked: u64,
    pub first_failure: Option<Mismatch>,
}

impl VerifyReport {
    pub fn status(&self) -> Status {
        if self.first_failure.is_none() && self.checked >= 1 {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }
}

/// Compares `cf` with the oracle at every `n` in `n_from..=n_to`, stopping
/// at the first disagreement.
pub fn verify_closed_form(cf: &ClosedForm, n_from: i64, n_to: i64) -> Result<VerifyReport> {
    if n_from < 0 || (n_from as u64) < cf.n_min {
        return Err(Error::RangeBelowValidity {
            n_from,
            n_min: cf.n_min,
        });
    }
    if n_to < n_from {
        return Err(Error::InvalidArgument("empty verification range"));
    }
    let mut table = HarmonicTable::new();
    let mut checked = 0;
    for n in n_from as u64..=n_to as u64 {
        let expected = brute_force_sum_with(&mut table, &cf.source, n);
        let got = cf.expr.eval_with(&mut table, n)?;
        checked += 1;
        if expected != got {
            return Ok(VerifyReport {
                checked,
                first_failure: Some(Mismatch { n, expected, got }),
            });
        }
    }
    Ok(VerifyReport {
        checked,
        first_failure: None,
    })
}

/// Builds the closed form for `set` and verifies it on `n_from..=n_to`.
pub fn verify_range(set: &ShiftSet, n_from: i64, n_to: i64) -> Result<VerifyReport> {
    verify_closed_form(&closed_form(set)?, n_from, n_to)
}
