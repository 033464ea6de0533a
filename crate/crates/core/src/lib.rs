//! Exact computation of the expansion-contraction factorization linking
//! integral-form and modified Macdonald polynomials through central elements
//! of the Iwahori-Hecke algebra of `S_n`, with point counts of Lusztig
//! varieties and parabolic Springer fibers checked against brute-force
//! enumeration over finite fields.
//!
//! Start from a [`Context`] for a fixed `n`; every table is computed on
//! first use and cached there.

pub mod context;
pub mod counts;
pub mod exactring;
pub mod export;
pub mod golden;
pub mod hecke;
pub mod matrix;
pub mod oracle;
pub mod partitions;
pub mod symfunc;
pub mod symgroup;
pub mod verify;

use thiserror::Error;

pub use context::Context;
pub use exactring::{ExactError, QTFraction, QTLaurent};
pub use hecke::{HeckeElement, HeckeError};
pub use matrix::{LabeledMatrix, MatrixError, MixedMatrix, PartitionMatrix};
pub use oracle::{FpMatrix, OracleError};
pub use partitions::{Composition, Partition, PartitionError};
pub use symfunc::{Basis, SymContext, SymFunc, SymFuncError};
pub use symgroup::{Permutation, SymGroupError};

/// Any failure raised by the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    SymGroup(#[from] SymGroupError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    SymFunc(#[from] SymFuncError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("independent computations disagree: {0}")]
    InternalMismatch(String),
    #[error("{0}")]
    Unsupported(String),
}
