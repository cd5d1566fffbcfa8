//! Lie superalgebra invariants over ℚ and small prime fields: Schur
//! multipliers, epicenters and capability, and bound checking.
#![no_std]

extern crate alloc;

pub mod capability;
pub mod catalog;
pub mod claims;
pub mod error;
pub mod field;
pub mod homology;
pub mod kernel;
pub mod linalg;
pub mod verifier;

pub use capability::{epicenter, gamma, mono_criterion, EpicenterReport, GammaVerdict};
pub use claims::{Claim, Finding};
pub use error::Error;
pub use field::{Field, FieldKind, PrimeField, Rationals};
pub use homology::{multiplier_dimension, MultiplierReport};
pub use kernel::{GradedSubspace, Parity, SuperDim, Superalgebra};
