use qstate_core::StateError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DualityError {
    #[error("invalid W state: {0}")]
    Invalid(String),
    #[error(
        "state is slightly entangled (largest coefficient squared {0} >= 1/2): Lambda = c_n and no diameter exists"
    )]
    SlightlyEntangled(f64),
    #[error("no sign change found for the {0} diameter equation")]
    NoBracket(&'static str),
    #[error("diameter bound violated: r^2 = {r_sq} on the {branch} branch")]
    Bound { r_sq: f64, branch: &'static str },
    #[error("interpolating formula is defined for bz <= 1/3, got {0}; above it the symmetric regime applies (Lambda^2 near 1/e)")]
    OutsideDomain(f64),
    #[error(transparent)]
    State(#[from] StateError),
}
