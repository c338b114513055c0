//! Corpus profiling toolkit.
//!
//! Quantifies how far a rewritten corpus drifts from a human-authored
//! baseline: 67 lexico-grammatical feature detectors, Burrows' Delta,
//! per-feature usage ratios, and scores on four functional register
//! dimensions. A privacy-budgeted rewriter built on exponential-mechanism
//! token sampling produces the rewritten corpora.
//!
//! The numeric pipeline is generic over the scalar type (see [`scalar::Real`]);
//! the crate root exports `f64` aliases for the common case.

pub mod corpus;
pub mod error;
pub mod scalar;

pub use corpus::{annotate, AnnotatedDocument, CorpusFormat, PosTag, RawDocument, Token};
pub use error::{Error, Result};
pub use scalar::Real;
