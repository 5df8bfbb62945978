use qstate_core::StateError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VariationalError {
    #[error(transparent)]
    State(#[from] StateError),
    #[error("invalid oracle configuration: {0}")]
    Config(String),
    #[error("start has {got} factors, state has {expected} qubits")]
    StartSize { expected: usize, got: usize },
    #[error("{n} qubits exceeds the supported maximum of {max}")]
    TooManyQubits { n: usize, max: usize },
}
