//! Symbolic ordinal arithmetic below ε₀ and the finite, checkable side of the
//! partition calculus.
//!
//! - [`ordinal`]: ordinals in Cantor normal form with exact arithmetic.
//! - [`expr`]: the `w`-syntax parser and evaluator for ordinal expressions.
//! - [`interval`]: finite unions of half-open ordinal intervals and their order types.
//! - [`partition`]: pair colorings, homogeneous sets, finite arrow checks and the
//!   rule-based colorings witnessing negative relations.
//! - [`derivation`]: partition statements derived by a small rule engine, with
//!   replayable certificates.
//! - [`json`]: the versioned JSON wire formats shared with the command line.

pub mod derivation;
pub mod expr;
pub mod interval;
pub mod json;
pub mod ordinal;
pub mod partition;

pub use derivation::{Derivation, PartitionStatement, Rule};
pub use expr::{OrdExpr, ParseError};
pub use interval::IntervalSet;
pub use ordinal::Ordinal;
pub use partition::{FinOrdSet, PairColoring, TableColoring};
