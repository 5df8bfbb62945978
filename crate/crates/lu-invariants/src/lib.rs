//! Polynomial local-unitary invariants `J1..J5` of three-qubit pure states,
//! the Acín type classification, and the maximal squared product overlap
//! `P_max` written in terms of the invariants.

mod error;
mod invariants;
mod lambda0;
mod newtype;
mod pmax;
mod types;

pub use error::LuError;
pub use invariants::{
    fit_invariants, hyperdeterminant, invariants_from_acin, invariants_from_state, InvariantFit, LuInvariants,
    FIT_RESIDUAL,
};
pub use lambda0::{acin_from_invariants, lambda0_candidates, Lambda0Roots};
pub use newtype::{
    newtype_invariants, newtype_region_positive, newtype_standard_form, pmax_newtype_invariant_form, NewTypeForm,
};
pub use pmax::{pmax_by_type, two_qubit_invariant, two_qubit_pmax, Pmax, TwoQubitInvariant};
pub use types::{
    classify_invariants, classify_invariants_up_to_type3, classify_state, classify_type, StateType, J_NOISE, STATE_TOL,
    VANISHING,
};

pub type Result<T> = std::result::Result<T, LuError>;
