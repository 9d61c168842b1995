use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("rank {0} exceeds the supported maximum of {max}", max = crate::signed_perm::MAX_RANK)]
    RankTooLarge(usize),
    #[error("rank {n} is outside the supported range {min}..={max} for this operation")]
    RankOutOfRange { n: usize, min: usize, max: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("simple reflection index {index} out of range for rank {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("zero entry at position {0}")]
    ZeroEntry(usize),
    #[error("absolute value {0} occurs more than once")]
    DuplicateMagnitude(i64),
    #[error("value {0} occurs more than once")]
    DuplicateValue(i64),
    #[error("vector {0} is not a positive root of the subsystem")]
    NotPositiveRoot(String),
    #[error("vector {0} is not a root of type B")]
    NotARoot(String),
    #[error("empty set supplied where a nonempty one is required")]
    EmptySet,
    #[error("set has no unique maximal element")]
    NoUniqueMaximum,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown name {0:?}")]
    UnknownName(String),
}
