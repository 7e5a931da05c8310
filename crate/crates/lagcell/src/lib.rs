//! Exact cellular topology of real and complex Lagrangian Grassmannians.
//!
//! The Lagrangian Grassmannian of `R^{2n}` carries a classical decomposition
//! into Schubert cells indexed by shifted Young diagrams. This crate builds
//! three CW structures on top of that combinatorics: the complex Schubert
//! cells, the real Schubert cells, and a finer "mixed type" subdivision of the
//! complex cells that contains the real complex as a subcomplex. It computes
//! their integer boundary operators and integral homology, entirely in exact
//! arithmetic.
//!
//! The closed-form attaching degrees live in [`incidence`]; they are cross
//! checked against an independent oracle in [`rowreduce`] that differentiates
//! the explicit row-reduction transition maps with exact rational jets.
//!
//! See the `book/` directory for a guided tour; every snippet there runs as a
//! doctest of this crate.

pub mod cells;
pub mod chain;
pub mod diagrams;
pub mod export;
pub mod homology;
pub mod incidence;
pub mod rowreduce;
pub mod verify;

#[cfg(doctest)]
mod book;

use thiserror::Error;

/// Errors shared by all modules.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violates a precondition (bad subset, mismatched ranks,
    /// non-cover pair, zero transition parameter, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A request exceeds the configured enumeration bounds.
    #[error("resource limit: {0}")]
    Resource(String),
    /// An internal consistency check failed; indicates a bug, not bad input.
    #[error("integrity error: {0}")]
    Integrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
