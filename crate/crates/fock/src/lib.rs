//! Nakajima operator calculus on the cohomology of Hilbert schemes of points
//! on a complex 2-torus.

pub mod error;
pub mod hilb;
pub mod kummer;
pub mod linalg;
pub mod mult;
pub mod ops;
pub mod state;

pub use error::FockError;
pub use mult::{apply_mult_word, MultExpr, MultWord, Token};
pub use state::{CreationWord, Factor, FockState};

pub type Q = num_rational::Rational64;
