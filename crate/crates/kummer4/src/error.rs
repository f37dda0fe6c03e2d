use thiserror::Error;

#[derive(Debug, Error)]
pub enum KummerError {
    #[error("unknown degree-2 class {0:?}")]
    UnknownClass(String),
    #[error("cannot parse polynomial {text:?} at {rest:?}")]
    Parse { text: String, rest: String },
    #[error(transparent)]
    Lattice(#[from] intlat::LatticeError),
    #[error(transparent)]
    Symplectic(#[from] sympfin::SympError),
    #[error(transparent)]
    Fock(#[from] fock::FockError),
    #[error("identity {name} fails: {detail}")]
    Identity { name: String, detail: String },
}

pub type Result<T> = std::result::Result<T, KummerError>;
