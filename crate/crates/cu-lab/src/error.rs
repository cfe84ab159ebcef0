//! Error types shared across the workbench.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CuError {
    #[error("element does not belong to this model: {0}")]
    ElementModelMismatch(String),

    #[error("chain descriptor is not increasing at position {0}")]
    NotIncreasing(usize),

    #[error("space is not T0: points {0} and {1} are order-equivalent")]
    NotT0(usize, usize),

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("operation unsupported for this model: {0}")]
    UnsupportedModel(String),

    #[error("expected a way-below pair: {0}")]
    NotWayBelow(String),

    #[error("hypothesis violated at summand {index}: {detail}")]
    HypothesisViolated { index: usize, detail: String },

    #[error("precondition not established: {0}")]
    PreconditionNotEstablished(String),

    #[error("no witness found although preconditions were established: {0}")]
    NoWitness(String),

    #[error("parse error: {0}")]
    ParseError(String),

    #[error("validation error:\n{0}")]
    ValidationError(String),
}

pub type CuResult<T> = Result<T, CuError>;
