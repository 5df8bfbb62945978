use qstate_core::{PureState, StateError};
use serde::{Deserialize, Serialize};

use crate::{LuInvariants, Result, StateType};

/// `P_max` from a closed form, or a marker that none is known for the type.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Pmax {
    Closed(f64),
    Unavailable,
}

impl Pmax {
    pub fn value(self) -> Option<f64> {
        match self {
            Self::Closed(v) => Some(v),
            Self::Unavailable => None,
        }
    }
}

fn root(x: f64) -> f64 {
    x.max(0.0).sqrt()
}

fn half_plus(j: f64) -> f64 {
    0.5 * (1.0 + root(1.0 - 4.0 * j))
}

/// Closed-form `P_max` for Types 1-3; [`Pmax::Unavailable`] otherwise.
pub fn pmax_by_type(t: StateType, ji: &LuInvariants) -> Pmax {
    let LuInvariants { j1, j2, j3, j4, .. } = *ji;
    let v = match t {
        StateType::Type1 => 1.0,
        StateType::Type2aJ1 => half_plus(j1),
        StateType::Type2aJ2 => half_plus(j2),
        StateType::Type2aJ3 => half_plus(j3),
        StateType::Type2b => half_plus(j4),
        StateType::Type3a => {
            let s = root(j1 * j2 * j3);
            let sum = j1 + j2 + j3;
            // Sign of (1 - 2 l0^2)(1 - 2 l2^2)(1 - 2 l3^2): negative or zero iff the largest l^2 >= 1/2.
            if 4.0 * sum - 1.0 - 8.0 * s <= 0.0 {
                0.25 * (1.0 + root(1.0 - 4.0 * (j1 + j2)) + root(1.0 - 4.0 * (j1 + j3)) + root(1.0 - 4.0 * (j2 + j3)))
            } else {
                4.0 * s / (4.0 * sum - 1.0)
            }
        }
        StateType::Type3b12 => half_plus(j3 + j4),
        StateType::Type3b13 => half_plus(j2 + j4),
        StateType::Type3b23 => half_plus(j1 + j4),
        _ => return Pmax::Unavailable,
    };
    Pmax::Closed(v)
}

/// Two-qubit invariant `J = det rho_A`, the product of the squared Schmidt coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoQubitInvariant {
    pub j: f64,
}

pub fn two_qubit_invariant(psi: &PureState) -> Result<TwoQubitInvariant> {
    if psi.n_qubits() != 2 {
        return Err(StateError::QubitCount { expected: 2, got: psi.n_qubits() }.into());
    }
    let a = psi.amplitudes();
    let j = (a[0] * a[3] - a[1] * a[2]).norm_sqr();
    Ok(TwoQubitInvariant { j: j.clamp(0.0, 0.25) })
}

/// `P_max = (1 + sqrt(1 - 4J)) / 2` for a two-qubit pure state.
pub fn two_qubit_pmax(psi: &PureState) -> Result<f64> {
    Ok(half_plus(two_qubit_invariant(psi)?.j))
}
