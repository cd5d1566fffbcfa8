use alloc::string::String;

use thiserror::Error;

use crate::kernel::Parity;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("field of characteristic {0} is not allowed (need 0 or a prime >= 5)")]
    BadField(u64),
    #[error("bracket [{0},{1}] given twice with different values")]
    ConflictingEntry(usize, usize),
    #[error("bracket [{i},{j}] must have parity {expected:?}")]
    GradingViolation { i: usize, j: usize, expected: Parity },
    #[error("even diagonal bracket [{0},{0}] must vanish")]
    EvenDiagonal(usize),
    #[error("vector is not homogeneous")]
    NotGraded,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("superalgebra is not nilpotent")]
    NotNilpotent,
    #[error("subspace is not central")]
    NotCentral,
    #[error("expected a subspace of dimension {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("graded Jacobi identity fails on {0} basis triples")]
    JacobiViolated(usize),
    #[error("change of basis matrix is singular")]
    SingularChangeOfBasis,
    #[error("basis labels must be unique and match the dimension")]
    BadLabels,
    #[error("unknown catalog entry {0:?}")]
    UnknownName(String),
    #[error("scalar {0} is not defined in this field")]
    UndefinedScalar(String),
    #[error(
        "epicenter membership ({member}) disagrees with the monomorphism criterion ({mono}) for center generator {generator}"
    )]
    CapabilityCrossCheck {
        generator: usize,
        member: bool,
        mono: bool,
    },
}
