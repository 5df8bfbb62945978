//! Multi-start stationary-point search for the maximal product overlap
//! `Lambda = max |<q_1 ... q_n|psi>|`, and the two-qubit Bloch-form
//! maximization over reduced states.

mod contract;
mod error;
mod lagrange;
mod oracle;
mod reduced;

pub use contract::Contractor;
pub use error::VariationalError;
pub use lagrange::{solve_lagrange_from_reduced, solve_lagrange_general, LagrangeSolution, LagrangeSystem};
pub use oracle::{
    oracle_lambda_max, oracle_report, stationarity_residual, stationary_iterate, OracleConfig, OracleReport, StartKind,
    StartReport, StationaryPoint, STATIONARY_RESIDUAL,
};
pub use reduced::{bloch_objective, maximize_reduced, pmax_from_reduced, ReducedMaximum};

pub type Result<T> = std::result::Result<T, VariationalError>;
