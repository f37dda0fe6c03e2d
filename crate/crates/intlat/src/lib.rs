//! Exact integer lattices: Smith and Hermite forms, discriminants, indices,
//! glue overlattices, saturation and involution decompositions.

pub mod lattice;
pub mod matrix;
pub mod snf;

pub use lattice::{
    add_glue, elementary_divisors, equivariant_decompose, index, orthogonal_complement, quotient_invariants, saturate, EquivariantInvariants,
    IndexReport, IntLattice, InvolutionModule, LatticeError, Overlattice,
};
pub use matrix::{
    bareiss_det, clear_denominators, congruence, coordinates, identity, int, integer_left_kernel, mat, mul, qmat, rat, rational_det, rational_row_basis,
    row_basis, to_integer, transpose, Matrix, QMatrix,
};
pub use snf::{nonsingular_diagonal, snf, Snf};
