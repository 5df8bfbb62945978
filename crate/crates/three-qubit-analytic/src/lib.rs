//! Closed-form `Lambda_max^2` for three-qubit families:
//!
//! * W-type `a|100> + b|010> + c|001>`,
//! * two-qubit-symmetric `a|000> + b|111> + c|001> + d|110>`,
//! * four-term `a|100> + b|010> + c|001> + d|111>`,
//! * the W / flipped-W superposition `cos t |W> + sin t |W~>`.

mod error;
mod fourterm;
mod product;
mod region;
mod symmetric;
mod wtype;
mod ww;

pub use error::AnalyticError;
pub use fourterm::{
    fourterm_bloch_data, fourterm_bloch_solution, fourterm_bloch_solution_on, fourterm_quantities, lambda_sq_fourterm,
    FourTerm, FourTermQuantities,
};
pub use product::product_from_bloch_pair;
pub use region::RegionLabel3;
pub use symmetric::{lambda_sq_symmetric, symmetric_nearest_product, SymState};
pub use wtype::{lambda_sq_wtype, WType3};
pub use ww::{ww_state, ww_superposition_cubic, WwSolution};

pub type Result<T> = std::result::Result<T, AnalyticError>;

/// Tolerance for the unit-norm check on family coefficients.
pub const NORM_TOL: f64 = 1e-10;

pub(crate) fn check_coefficients(values: &[f64]) -> Result<()> {
    if let Some(v) = values.iter().find(|v| !(**v >= 0.0) || !v.is_finite()) {
        return Err(AnalyticError::Invariant(format!("coefficients must be non-negative, got {v}")));
    }
    let norm: f64 = values.iter().map(|v| v * v).sum();
    if (norm - 1.0).abs() > NORM_TOL {
        return Err(AnalyticError::Invariant(format!("squared coefficients sum to {norm}, expected 1")));
    }
    Ok(())
}
