use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SympError {
    #[error("unsupported field size {0}, expected 2, 3 or 5")]
    UnsupportedField(u8),
    #[error("dimension {0} is not a positive even number at most 4")]
    UnsupportedDimension(usize),
    #[error("form is not alternating and nondegenerate")]
    DegenerateForm,
    #[error("map does not preserve the symplectic form")]
    NotSymplectic,
    #[error("{what}: closed formula gives {formula}, enumeration gives {enumerated}")]
    CountMismatch { what: &'static str, formula: u64, enumerated: u64 },
    #[error("vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, SympError>;
