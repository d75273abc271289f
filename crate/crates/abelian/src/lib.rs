//! Exact linear algebra over the integers.
//!
//! Everything here is computed with arbitrary-precision integers: Smith
//! normal form with unimodular transforms, lattices in `Z^n` (kernels,
//! images, preimages), finitely generated abelian groups given by
//! presentations, maps between them, and homology of integer chain
//! complexes. All answers are exact; no floating point anywhere.

mod chain;
mod error;
mod group;
mod lattice;
mod map;
mod matrix;

pub use chain::ChainComplexZ;
pub use error::Error;
pub use group::{FgAbGroup, NormalForm};
pub use lattice::{
    column_basis, kernel_basis, lattice_contains, lattice_eq, lattice_sum, preimage_basis,
    LatticeSolver,
};
pub use map::{check_exact, direct_sum, induced_on_quotients, AbMap, ExactnessVerdict};
pub use matrix::{det_bareiss, smith_normal_form, IntMatrix, Snf};

pub use num_bigint::BigInt;
