//! Compositional network algebra: network models, the symmetric monoidal
//! categories they generate, network operads and their algebras, and graph
//! products of monoids with a decidable word problem.
//!
//! The building blocks are families of "network monoids" `F(0), F(1), F(2), …`
//! — one monoid of networks for each vertex count — related by three pieces of
//! structure:
//!
//! * **overlay** `∪ : F(n) × F(n) → F(n)`, the monoid operation, which
//!   superimposes two networks on the same vertices;
//! * **disjoint union** `⊔ : F(m) × F(n) → F(m+n)`, which places networks side
//!   by side;
//! * a **symmetric group action** relabelling vertices.
//!
//! Such a family is a *network model* when twelve equations relating the three
//! structures hold; [`laws`] contains an executable suite for them. From any
//! network model one builds a symmetric monoidal category ([`total`]), a typed
//! operad ([`operad`]), and algebras acting on concrete networks
//! ([`algebra`]). Noncommutative models arise from graph products of monoids
//! over Kneser graphs ([`green`]).

pub mod algebra;
pub mod green;
pub mod laws;
pub mod model;
pub mod monoid;
pub mod operad;
pub mod perm;
pub mod total;

pub use model::{Model, Network};
pub use monoid::{MonoidElement, MonoidHom, MonoidSpec};
pub use perm::{Edge, Permutation};

/// Maximum supported vertex count. All constructors reject larger arities so
/// that oracle-style tests can enumerate over fibres.
pub const MAX_ARITY: usize = 32;

/// Errors shared by the core modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("arity {0} exceeds the supported maximum {MAX_ARITY}")]
    ArityTooLarge(usize),
    #[error("image {0:?} is not a bijection on 1..={1}")]
    NotABijection(Vec<usize>, usize),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("edge {{{0}, {1}}} out of range for arity {2}")]
    EdgeOutOfRange(usize, usize, usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("model mismatch: {0}")]
    ModelMismatch(String),
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error("integer overflow in monoid operation")]
    Overflow,
    #[error("fibre of {0} at arity {1} is infinite")]
    InfiniteFibre(String, usize),
    #[error("invalid operation profile: {0}")]
    BadProfile(String),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("payload mismatch: {0}")]
    PayloadMismatch(String),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("variety/monoid mismatch: {0}")]
    VarietyMismatch(String),
    #[error("degree bound violated: {0}")]
    BoundViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
