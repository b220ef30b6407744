//! Exact computations on small nilpotent Lie algebras: central series,
//! Schur multipliers and coranks, central extensions, and realizations by
//! bosonic / pseudo-bosonic ladder operators checked both symbolically and
//! on truncated Fock-space matrices.

pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod fock;
pub mod format;
pub mod invariants;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod weyl;

pub use error::{Error, Result};
pub use invariants::{fingerprint, Fingerprint};
pub use lie::{LieAlgebra, Relation};
pub use linalg::{Matrix, Subspace};
pub use scalar::Scalar;
pub use weyl::WeylElement;
