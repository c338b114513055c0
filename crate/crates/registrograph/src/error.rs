//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("document {id}: malformed record at byte {offset}: {message}")]
    Malformed {
        id: String,
        offset: usize,
        message: String,
    },

    #[error("document {id}: missing field: {field}")]
    MissingField { id: String, field: &'static str },

    #[error("duplicate document id: {0}")]
    DuplicateId(String),

    #[error("document {0}: text is empty")]
    EmptyText(String),

    #[error("insufficient corpus: need at least 2 documents, got {0}")]
    InsufficientCorpus(usize),

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("corpus statistics provenance mismatch: vectors were standardized against different reference stats")]
    StatsProvenanceMismatch,

    #[error("privacy budget epsilon must be positive, got {0}")]
    NonPositiveEpsilon(f64),

    #[error("sensitivity bound must be positive, got {0}")]
    NonPositiveSensitivity(f64),

    #[error("no candidates to sample from")]
    NoCandidates,

    #[error("no usable candidate: all utilities are NaN or minus infinity")]
    NoUsableCandidate,

    #[error("empty scorer vocabulary")]
    EmptyVocabulary,

    #[error("loading table invalid: {0}")]
    InvalidLoadingTable(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("scorer subprocess error: {0}")]
    Subprocess(String),
}

pub type Result<T> = std::result::Result<T, Error>;
