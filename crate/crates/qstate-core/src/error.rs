use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StateError {
    #[error("expected {expected} amplitudes for {n} qubits, got {got}")]
    Dimension { n: usize, expected: usize, got: usize },
    #[error("amplitude count {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("state has zero norm")]
    ZeroNorm,
    #[error("parameters are not normalized: sum of squares is {0}")]
    NotNormalized(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("qubit index {index} out of range for {n} qubits")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("matrix is not unitary (max deviation {0:e})")]
    NotUnitary(f64),
    #[error("expected {expected} qubits, got {got}")]
    QubitCount { expected: usize, got: usize },
    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),
    #[error("state file: {0}")]
    Parse(String),
}
