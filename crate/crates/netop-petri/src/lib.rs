//! Petri nets with catalysts: marking and firing semantics, catalyst
//! detection, catalyst-graded executions, premonoidal whiskering, and
//! individual-token morphisms over catalyst words.
//!
//! A catalyst is a species whose coefficient is identical in the source and
//! target of every transition, so its amount is conserved by every run of
//! the net. Executions carry that amount as a *grade*, and processes of
//! equal grade compose in two sequential orders that share endpoints but not
//! step sequences — the tensor is premonoidal, not monoidal.

pub mod exec;
pub mod intg;
pub mod laws;
pub mod net;

pub use exec::{Execution, Step};
pub use intg::IntGMorphism;
pub use net::{parse_petri, CatalystGrade, Marking, PetriNet, Transition};

/// Errors for net construction, parsing, and execution algebra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("species mismatch: {0}")]
    SpeciesMismatch(String),
    #[error("transition not enabled: {0}")]
    NotEnabled(String),
    #[error("integer overflow in marking arithmetic")]
    Overflow,
    #[error("species {0} is not a catalyst")]
    NotACatalyst(String),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("catalyst grade mismatch: {0}")]
    GradeMismatch(String),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
}

impl From<netop_core::Error> for Error {
    fn from(err: netop_core::Error) -> Self {
        Error::BoundaryMismatch(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
