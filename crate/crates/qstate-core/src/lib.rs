//! Dense n-qubit pure states and the reduced-state quantities consumed by
//! closed-form overlap formulas.
//!
//! Basis convention: amplitude index `i` in `[0, 2^n)` is read as the bit
//! string `b1 b2 ... bn` with `b1` the most significant bit, so qubit 0 of
//! the API is the leftmost label of the ket. All qubit indices are 0-based.

mod bloch;
mod density;
mod error;
pub mod io;
mod phase;
mod qubit;
pub mod random;
mod rotation;
mod state;

pub use bloch::{bloch_decomposition3, pauli_expectation, BlochDecomposition3, Pauli};
pub use density::{bloch_vector, correlation_matrix, partial_trace, two_qubit_bloch_data, DensityMatrix};
pub use error::StateError;
pub use phase::{real_form_by_local_phases, RealForm};
pub use qubit::{BlochVector, ProductState, Qubit};
pub use rotation::{apply_local_unitaries, is_unitary, rotation_from_unitary};
pub use state::{product_overlap, AcinParams, PhaseConvention, PureState};

pub use nalgebra::{Matrix2, Matrix3, Vector3};
pub use num_complex::Complex64 as C64;

pub type Result<T> = std::result::Result<T, StateError>;

/// Tolerance hierarchy shared by every crate in the workspace.
pub mod tol {
    /// Representation invariants (norms, unitarity, Hermiticity).
    pub const REPR: f64 = 1e-12;
    /// Matching of derived quantities.
    pub const DERIVED: f64 = 1e-10;
    /// Agreement between independent methods.
    pub const CROSS: f64 = 1e-6;
}
