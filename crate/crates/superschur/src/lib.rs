//! Presentation files, reports and the `superschur` command line on top of
//! `superschur-core`.

pub mod any;
pub mod cli;
pub mod presentation;
pub mod report;

pub use any::AnyAlgebra;
pub use presentation::{lower, parse, serialize, PresentationAst, PresentationError};
