use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: u32, found: u32 },
    #[error("q' identity fails for m = {m}, class {class}, on state {state}")]
    IdentityFailure { m: u32, class: String, state: String },
}
