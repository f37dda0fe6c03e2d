//! The integral lattice H⁴(K₂(A), Z) of the generalized Kummer fourfold.

pub mod appendix;
pub mod build;
pub mod crosscheck;
pub mod error;
pub mod h2;
pub mod identities;
pub mod involution;
pub mod model;
pub mod verify;

pub use build::{certify, Certificate, H4Model};
pub use crosscheck::{fock_crosscheck, Crosscheck};
pub use error::KummerError;
pub use identities::{class_identities, ClassIdentities};
pub use involution::{involution_invariants, DegreeInvariants};
pub use verify::{appendix_verify, AppendixReport};
