//! Sine and cosine addition equations on discrete commutative hypergroups.
//!
//! A [`Hypergroup`] is stored as a finite table of convolution measures
//! `μ_{x*y}`. Polynomial hypergroups come from three-term recurrences via
//! [`linearization_table`]. The [`solutions`] module builds every solution
//! family of the two addition theorems and classifies arbitrary pairs.

pub mod error;
pub mod exec;
pub mod hypergroup;
pub mod io;
pub mod polynomial;
pub mod scalar;
pub mod solutions;

pub use error::{HypergroupError, ParseError, RecurrenceError, SolutionError};
pub use exec::Exec;
pub use hypergroup::{AxiomReport, FiniteMeasure, HFunction, Hypergroup};
pub use polynomial::{
    additive_fn, counterexample_report, exponential_fn, linearization_table, sine_fn, CounterexampleReport,
    LinearizationTable, Recurrence,
};
pub use scalar::{Mode, Real, Scalar, Tolerance};
