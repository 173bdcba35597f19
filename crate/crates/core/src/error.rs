use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator is identically zero")]
    ZeroDenominator,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("pole at n = {0}")]
    PoleAt(i64),
    #[error("syntax error at byte {position}: {message}")]
    SyntaxError {
        position: usize,
        message: &'static str,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error("product leaves the basis H_{{n+1}}^i (H_{{n+1}}^(2))^j with i <= 2, j <= 1")]
    BasisOverflow,
    #[error("shift {0} occurs more than once")]
    DuplicateShift(i64),
    #[error("shift set is empty")]
    EmptyShiftSet,
    #[error("range starts at n = {n_from}, below the validity floor n_min = {n_min}")]
    RangeBelowValidity { n_from: i64, n_min: u64 },
}
