//! Seeded random differential testing of closed forms against the oracle.

use harmsum_core::{closed_form, verify_closed_form, Monomial, ShiftSet, VerifyReport, Weight};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Shifts are drawn without repetition from `MIN_SHIFT..=MAX_SHIFT`.
pub const MIN_SHIFT: i64 = -6;
pub const MAX_SHIFT: i64 = 9;
pub const MAX_SHIFT_COUNT: usize = 5;
/// Consecutive values of `n` checked past `n_min`.
pub const RANGE_WIDTH: u64 = 40;

pub fn random_shift_set(rng: &mut impl Rng) -> ShiftSet {
    let len = rng.random_range(1..=MAX_SHIFT_COUNT);
    let span = (MAX_SHIFT - MIN_SHIFT + 1) as usize;
    let shifts = index::sample(rng, span, len)
        .into_iter()
        .map(|i| MIN_SHIFT + i as i64)
        .collect();
    let weight = if rng.random_bool(0.5) {
        Weight::Hk
    } else {
        Weight::HnMinusK
    };
    ShiftSet::new(shifts, weight).expect("sampled shifts are distinct")
}

/// The `count` shift sets generated from `seed`, in order.
pub fn random_shift_sets(seed: u64, count: usize) -> Vec<ShiftSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_shift_set(&mut rng)).collect()
}

#[derive(Clone, Debug)]
pub struct Case {
    pub set: ShiftSet,
    pub report: Result<VerifyReport, harmsum_core::Error>,
    /// The `H_{n+1}^2` coefficient vanished (always true for one shift).
    pub square_vanishes: bool,
}

impl Case {
    pub fn passed(&self) -> bool {
        self.square_vanishes && self.report.as_ref().is_ok_and(VerifyReport::passed)
    }
}

#[derive(Clone, Debug)]
pub struct Summary {
    pub seed: u64,
    pub cases: Vec<Case>,
}

impl Summary {
    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed())
    }

    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed()).count()
    }
}

pub fn check_set(set: ShiftSet) -> Case {
    let cf = match closed_form(&set) {
        Ok(cf) => cf,
        Err(e) => {
            return Case {
                set,
                report: Err(e),
                square_vanishes: false,
            }
        }
    };
    let square_vanishes = set.shifts().len() == 1 || cf.expr.coeff(Monomial::H1_SQ).is_none();
    let from = cf.n_min as i64;
    let report = verify_closed_form(&cf, from, from + RANGE_WIDTH as i64);
    Case {
        set,
        report,
        square_vanishes,
    }
}

/// Verifies `count` random sets in parallel; results keep generation order.
pub fn run(seed: u64, count: usize) -> Summary {
    let cases = random_shift_sets(seed, count)
        .into_par_iter()
        .map(check_set)
        .collect();
    Summary { seed, cases }
}
