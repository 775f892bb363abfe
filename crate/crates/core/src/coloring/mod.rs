//! Fox colorings of knot diagrams.
//!
//! A `p`-coloring labels every arc with a residue mod `p` so that at each
//! crossing `2*over - under1 - under2 == 0 (mod p)`. This module builds the
//! crossing matrix encoding those relations, derives the knot determinant
//! and coloring matrix from it, and checks that every nontrivial coloring of
//! a reduced alternating diagram with prime determinant is heterogeneous.

mod matrix;
mod pseudo;
mod space;
mod verify;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactla::LinAlgError;

pub use matrix::{
    coloring_matrix, crossing_matrix, extend_with_zero, knot_det, minor_matrix, signed_minor_det,
    transpose_law, CrossingMatrixFull, TransposeLaw,
};
pub use pseudo::{defects, find_pseudo_coloring, PseudoColoring};
pub use space::{
    brute_force_colorings, coloring_space, fundamental_coeffs, is_heterogeneous, reconstruct,
    Coloring, ColoringSpace, BRUTE_FORCE_LIMIT, MAX_MODULUS,
};
pub use verify::{verify_kh, KHReport, KHStatus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("diagram has {n} crossing(s); at least 2 are needed")]
    TooSmall { n: usize },
    #[error("minor crossing matrix is singular")]
    SingularMinor,
    #[error("vector is not in the kernel of the minor crossing matrix mod {det}")]
    NotInKernel { det: BigInt },
    #[error("determinant {det} is not prime")]
    NotPrimeDeterminant { det: BigInt },
    #[error("colors {x} and {y} coincide mod {p}")]
    DegeneratePair { x: u64, y: u64, p: u64 },
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{what} exceeds the enumeration limit")]
    TooLarge { what: String },
    #[error("column {j} out of range for a {n}-crossing diagram")]
    ColumnOutOfRange { j: usize, n: usize },
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("pseudo-coloring check failed: {0}")]
    DefectMismatch(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

pub type Result<T> = std::result::Result<T, ColoringError>;
