//! Symplectic geometry over F_2, F_3, F_5: planes, the ideals (M), (N), D of
//! the group algebra, the Sym²(Λ²V) ⊕ k[V] representation and G_ξ orbits.

pub mod error;
pub mod field;
pub mod gxi;
pub mod rep;
pub mod space;
pub mod span;
pub mod tables;

pub use error::SympError;
pub use field::Fq;
pub use rep::{sp_span_closure, CombinedVector, GroupAlgebraElement, LinearAction, Module};
pub use space::{Plane, SympSpace, SymplecticMap};
pub use span::Span;
pub use tables::{
    combined_dims, combined_dims_for_pair, ideal_dims, plane_counts, x_in_d_check, CombinedDims, IdealDims, Ideals, PlaneCounts,
};
