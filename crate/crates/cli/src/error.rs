use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Fock(#[from] fock::FockError),
    #[error(transparent)]
    Symplectic(#[from] sympfin::SympError),
    #[error(transparent)]
    Kummer(#[from] kummer4::KummerError),
    #[error(transparent)]
    Quotient(#[from] quotientbb::QuotientError),
    #[error("cannot write {path}: {source}")]
    Output { path: String, source: std::io::Error },
}

pub type Result<T> = std::result::Result<T, CliError>;
