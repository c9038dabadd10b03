//! Crate-wide error type.
//!
//! Structural misuse (mismatched truncation orders, mismatched arities or
//! algebras in arithmetic) panics, mirroring how shape errors are treated in
//! numeric crates. `Error` covers conditions a caller can sensibly react to:
//! bad input data, non-invertible elements, out-of-scope requests.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("scalar is not invertible (zero degree-0 part)")]
    NonInvertibleScalar,

    #[error("element is not invertible")]
    NonInvertibleElement,

    #[error("element is not provably nilpotent at degree 0 (power bound {bound} exceeded)")]
    NotNilpotent { bound: usize },

    #[error("leg {leg} out of range for arity {arity}")]
    LegOutOfRange { leg: usize, arity: usize },

    #[error("invalid leg positions {positions:?} for target arity {arity}")]
    BadPositions { positions: Vec<usize>, arity: usize },

    #[error("this check requires the trivial re-associator; use the quasi variant instead")]
    NontrivialReassociator,

    #[error("quantization obstruction: {0}")]
    QuantizationObstruction(String),

    #[error("associator arguments do not commute; only the commuting case is supported")]
    NoncommutingAssociatorArguments,

    #[error("bundle is missing a component: {0}")]
    MissingComponent(&'static str),

    #[error("invalid bundle: {0}")]
    InvalidBundle(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("strand index {index} out of range for {strands} strands")]
    StrandOutOfRange { index: usize, strands: usize },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
