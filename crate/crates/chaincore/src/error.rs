use thiserror::Error;

use crate::Label;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unknown coefficient ring `{0}`")]
    UnknownRing(String),
    #[error("degree {degree} is at or above the truncation cutoff {cutoff}")]
    TruncationBoundary { degree: i64, cutoff: i64 },
    #[error("differential of `{source_label}` leaves the basis at `{target}`")]
    NotClosed { source_label: Label, target: Label },
    #[error("degree mismatch for `{label}`: expected {expected}, found {found}")]
    Degree {
        label: Label,
        expected: i64,
        found: i64,
    },
    #[error("weight mismatch for `{label}`: expected {expected}, found {found}")]
    Weight {
        label: Label,
        expected: i64,
        found: i64,
    },
    #[error("degree {0} is not of finite type without a weight bound")]
    NotFiniteType(i64),
    #[error("element is not in the span of the given basis")]
    NotInSpan,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
