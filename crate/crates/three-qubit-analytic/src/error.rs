use thiserror::Error;

use crate::RegionLabel3;

#[derive(Debug, Error)]
pub enum AnalyticError {
    #[error("invalid input: {0}")]
    Invariant(String),
    #[error("requested the {requested} branch, but the state lies in {actual}")]
    Branch { requested: RegionLabel3, actual: RegionLabel3 },
    #[error("branch quantities are undefined: {0}")]
    Undefined(String),
    #[error(transparent)]
    State(#[from] qstate_core::StateError),
}
