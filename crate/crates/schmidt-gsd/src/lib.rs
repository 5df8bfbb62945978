//! Generalized Schmidt decomposition (GSD) of three-qubit pure states,
//!
//! `|psi> = l0|u1u2u3> + l1|u1v2v3> + l2|v1u2v3> + l3|v1v2u3> + l4|v1v2v3>`,
//!
//! built from a stationary product state `|u1u2u3>` with `v_k` orthogonal to `u_k`.

mod error;
mod form;
mod validate;
mod variation;
mod wtype;

pub use error::GsdError;
pub use form::{gsd_from_stationary, SchmidtForm};
pub use validate::{validate_gsd, Condition, GsdVerdict, VerdictLabel, ORACLE_MATCH};
pub use variation::{
    schmidt_inequality, second_variation_matrix, simple_case_bound, InequalityCheck, SecondVariationMatrix, SimpleBound,
};
pub use wtype::{wtype_canonical_forms, CanonicalForm, WTypeForms};

pub type Result<T> = std::result::Result<T, GsdError>;

/// Coefficients at or below this magnitude count as zero when fixing phases.
pub const ZERO_COEFFICIENT: f64 = 1e-12;
/// Reconstruction tolerance, elementwise up to global phase.
pub const RECONSTRUCTION_TOL: f64 = 1e-9;
