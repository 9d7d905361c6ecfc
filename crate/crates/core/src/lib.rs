//! Truncated path algebras `KQ / <paths of length L>`: irreducible components
//! of their module varieties, strong tilting modules and tilted algebras, and
//! representation-type heuristics.

pub mod algebra;
pub mod components;
pub mod linalg;
pub mod modrep;
pub mod quiver;
pub mod reptype;
pub mod seed;
pub mod ssq;
pub mod tilting;

pub use algebra::TruncatedAlgebra;
pub use linalg::{Field, FieldSpec, Matrix, PrimeField, Rat, Rationals, Subspace};
pub use modrep::Representation;
pub use quiver::{Path, Quiver};
pub use ssq::SemisimpleSequence;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("generic sampler exhausted: {0}")]
    SamplerExhausted(String),
    #[error("internal verification failed: {0}")]
    Verification(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// The guide in `book/`, compiled here so its snippets run as doctests.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/quivers.md")]
    pub mod quivers {}
    #[doc = include_str!("../../../book/src/modules.md")]
    pub mod modules {}
    #[doc = include_str!("../../../book/src/components.md")]
    pub mod components {}
    #[doc = include_str!("../../../book/src/tilting.md")]
    pub mod tilting {}
    #[doc = include_str!("../../../book/src/reptype.md")]
    pub mod reptype {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
