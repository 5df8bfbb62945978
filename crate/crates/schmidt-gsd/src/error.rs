use qstate_core::StateError;
use thiserror::Error;
use variational::VariationalError;

#[derive(Debug, Error)]
pub enum GsdError {
    #[error("product state is not stationary (residual {0:e})")]
    NotStationary(f64),
    #[error("overlap with the product state vanishes")]
    ZeroOverlap,
    #[error("form does not reconstruct the state (deviation {0:e})")]
    Reconstruction(f64),
    #[error("invalid Schmidt form: {0}")]
    Invalid(String),
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Variational(#[from] VariationalError),
}
