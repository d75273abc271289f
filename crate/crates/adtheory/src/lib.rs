//! An exact engine for ring-valued ad theories on ball complexes.
//!
//! The coefficient model assigns ring elements to the cells of one fixed
//! dimension of a finite ball complex, subject to a signed cycle
//! condition on the cells one dimension above. On top of that the crate
//! computes bordism groups of the theories with prescribed
//! singularities, verifies the long exact sequence relating consecutive
//! singularity lengths, evaluates the Koszul homology that controls
//! those bordism groups for regular entries, and implements external and
//! symmetrized products.
//!
//! All group-valued answers are exact (Smith normal form over
//! arbitrary-precision integers, via the `abelian` crate) and all
//! reports are deterministic byte-for-byte.

pub mod ads;
pub mod axioms;
pub mod complex;
pub mod error;
pub mod json;
pub mod koszul;
pub mod par;
pub mod products;
pub mod ring;
pub mod singular;

pub use error::{Error, Result};
pub use ring::RingSpec;
