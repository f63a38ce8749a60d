use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("grade mismatch: {0}")]
    Grade(String),
    #[error("character mismatch: {0} vs {1}")]
    Character(String, String),
    #[error("{0}")]
    Domain(String),
    #[error("{cols} columns exceed the canonicalization width cap of {cap} (raise SHARBLY_MAX_COLS)")]
    TooWide { cols: usize, cap: usize },
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
