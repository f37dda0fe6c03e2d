use thiserror::Error;

#[derive(Debug, Error)]
pub enum QuotientError {
    #[error("no scale t = p/q with p, q <= {bound} makes the form integral and primitive")]
    NoValidScale { bound: i64 },
    #[error("scale is not unique: {candidates:?}")]
    AmbiguousScale { candidates: Vec<String> },
    #[error("no unique parity-feasible D_e among {candidates:?}")]
    AmbiguousDdelta { candidates: Vec<i64> },
    #[error("balance fails: {lhs} != {rhs}")]
    Balance { lhs: usize, rhs: usize },
    #[error(transparent)]
    Kummer(#[from] kummer4::KummerError),
}

pub type Result<T> = std::result::Result<T, QuotientError>;
