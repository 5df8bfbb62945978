use thiserror::Error;

#[derive(Debug, Error)]
pub enum LuError {
    #[error("Bloch scalars are inconsistent with a pure three-qubit state (residual {0:e})")]
    Inconsistent(f64),
    #[error("degenerate new-type transformation: aq + bc = 0")]
    DegenerateTransform,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("{0}")]
    Branch(String),
    #[error(transparent)]
    State(#[from] qstate_core::StateError),
}
