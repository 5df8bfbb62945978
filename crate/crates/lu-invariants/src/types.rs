use std::f64::consts::PI;
use std::fmt;

use qstate_core::{AcinParams, PureState};
use serde::{Deserialize, Serialize};

use crate::{acin_from_invariants, invariants_from_acin, invariants_from_state, LuInvariants, Result};

/// Absolute threshold below which a coefficient or invariant counts as vanishing.
pub const VANISHING: f64 = 1e-10;

/// Tolerance on squared coefficients rebuilt from state-derived invariants.
pub const STATE_TOL: f64 = 1e-10;

/// Absolute error assumed for invariants fitted from a state.
pub const J_NOISE: f64 = 1e-14;

/// Type of a three-qubit pure state in the standard-form classification.
///
/// Variants are ordered from most to least specific.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StateType {
    /// Fully separable, all `J_i = 0`.
    Type1,
    /// Biseparable, only `J1` nonzero.
    Type2aJ1,
    /// Biseparable, only `J2` nonzero.
    Type2aJ2,
    /// Biseparable, only `J3` nonzero.
    Type2aJ3,
    /// Generalized GHZ, only `J4` nonzero.
    Type2b,
    /// Tri-Bell, `l1 = l4 = 0`.
    Type3a,
    /// Extended GHZ, `l1 = l2 = 0`.
    Type3b12,
    /// Extended GHZ, `l1 = l3 = 0`.
    Type3b13,
    /// Extended GHZ, `l2 = l3 = 0`.
    Type3b23,
    /// `l4 = 0`.
    Type4a,
    /// `l2 = 0`.
    Type4bL2,
    /// `l3 = 0`.
    Type4bL3,
    /// `l1 = 0`.
    Type4c,
    /// Real standard form, `phi` in `{0, pi}`.
    Type5,
    /// `a|100> + b|010> + c|001> + q|111>`.
    NewType,
    /// All coefficients nonzero and `phi` strictly inside `(0, pi)`.
    Generic,
}

impl StateType {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Type1 => "type1",
            Self::Type2aJ1 => "type2a-j1",
            Self::Type2aJ2 => "type2a-j2",
            Self::Type2aJ3 => "type2a-j3",
            Self::Type2b => "type2b",
            Self::Type3a => "type3a",
            Self::Type3b12 => "type3b-l1l2",
            Self::Type3b13 => "type3b-l1l3",
            Self::Type3b23 => "type3b-l2l3",
            Self::Type4a => "type4a",
            Self::Type4bL2 => "type4b-l2",
            Self::Type4bL3 => "type4b-l3",
            Self::Type4c => "type4c",
            Self::Type5 => "type5",
            Self::NewType => "new-type",
            Self::Generic => "generic",
        }
    }

    /// Types with a closed-form `P_max`.
    pub fn has_closed_form(self) -> bool {
        matches!(
            self,
            Self::Type1
                | Self::Type2aJ1
                | Self::Type2aJ2
                | Self::Type2aJ3
                | Self::Type2b
                | Self::Type3a
                | Self::Type3b12
                | Self::Type3b13
                | Self::Type3b23
        )
    }
}

impl fmt::Display for StateType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Types 1 and 2 from the invariants alone; `None` otherwise.
pub fn classify_invariants(ji: &LuInvariants) -> Option<StateType> {
    let nz = ji.as_array().map(|j| j.abs() > VANISHING);
    match nz {
        [false, false, false, false, false] => Some(StateType::Type1),
        [true, false, false, false, false] => Some(StateType::Type2aJ1),
        [false, true, false, false, false] => Some(StateType::Type2aJ2),
        [false, false, true, false, false] => Some(StateType::Type2aJ3),
        [false, false, false, true, false] => Some(StateType::Type2b),
        _ => None,
    }
}

/// Types 1-3 from the invariants alone; `None` for Types 4, 5 and generic states.
///
/// Type 3b is fixed by which `J_i` vanish. For `J4 = 0` the remaining coefficient obeys
/// `l1^2 = 1 - (J1J2 + J1J3 + J2J3) / sqrt(J1J2J3)`; `j_noise` is the absolute error of
/// the invariants and sets the tolerance of that test.
pub fn classify_invariants_up_to_type3(ji: &LuInvariants, j_noise: f64) -> Option<StateType> {
    if let Some(t) = classify_invariants(ji) {
        return Some(t);
    }
    let LuInvariants { j1, j2, j3, .. } = *ji;
    let nz = ji.as_array().map(|j| j.abs() > VANISHING);
    match nz {
        [false, false, true, true, false] => return Some(StateType::Type3b12),
        [false, true, false, true, false] => return Some(StateType::Type3b13),
        [true, false, false, true, false] => return Some(StateType::Type3b23),
        _ => {}
    }
    if nz[3] || !(nz[0] && nz[1] && nz[2]) {
        return None;
    }
    let l1s = 1.0 - (j1 * j2 + j1 * j3 + j2 * j3) / (j1 * j2 * j3).sqrt();
    let tol = STATE_TOL + j_noise * (1.0 / j1 + 1.0 / j2 + 1.0 / j3);
    (l1s.abs() <= tol).then_some(StateType::Type3a)
}

/// Most specific type matching the vanishing pattern of the standard form.
pub fn classify_type(p: &AcinParams) -> StateType {
    if let Some(t) = classify_invariants(&invariants_from_acin(p)) {
        return t;
    }
    let z = p.lambda.map(|l| l.abs() <= VANISHING);
    match (z[1], z[2], z[3], z[4]) {
        (true, _, _, true) => StateType::Type3a,
        (true, true, _, _) => StateType::Type3b12,
        (true, _, true, _) => StateType::Type3b13,
        (_, true, true, _) => StateType::Type3b23,
        (_, _, _, true) => StateType::Type4a,
        (_, true, _, _) => StateType::Type4bL2,
        (_, _, true, _) => StateType::Type4bL3,
        (true, _, _, _) => StateType::Type4c,
        _ if p.phi.abs() <= VANISHING || (p.phi - PI).abs() <= VANISHING => StateType::Type5,
        _ => StateType::Generic,
    }
}

/// Invariants of `psi`, its type, and a standard form reproducing the invariants.
///
/// Types 1-3 are read off the invariants. Otherwise the type comes from the rebuilt
/// standard form, and when both roots of the `l0` equation give one, the more specific type wins.
pub fn classify_state(psi: &PureState) -> Result<(StateType, LuInvariants, Option<AcinParams>)> {
    let ji = invariants_from_state(psi)?;
    let best = acin_from_invariants(&ji).into_iter().map(|p| (classify_type(&p), p)).min_by_key(|(t, _)| *t);
    let t = classify_invariants_up_to_type3(&ji, J_NOISE).or(best.map(|(t, _)| t)).unwrap_or(StateType::Generic);
    Ok((t, ji, best.map(|(_, p)| p)))
}
