//! Lie superalgebras by structure constants: bracket tables, validation,
//! graded subspaces, central series, center and quotients.

mod algebra;
mod structure;
mod subspace;
mod table;

pub use algebra::{JacobiViolation, Superalgebra, ValidationReport};
pub use subspace::GradedSubspace;
pub use table::{canonical_pair, complete_table, BasisVector, BracketTable, Parity, SparseBracket, SuperDim};

pub(crate) use table::default_labels;
