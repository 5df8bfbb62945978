//! JSON state files.
//!
//! ```json
//! {"n": 3, "amplitudes": [[0.7071, 0.0], [0, 0], ...]}
//! {"acin": {"lambda": [0.7071, 0, 0, 0, 0.7071], "phi": 0.0}}
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::state::{AcinParams, PureState};
use crate::{Result, StateError, C64};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AcinSpec {
    pub lambda: Vec<f64>,
    #[serde(default)]
    pub phi: f64,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct StateFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amplitudes: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub acin: Option<AcinSpec>,
}

/// A parsed state with the normalization factor that was applied to the raw input.
#[derive(Clone, Debug, PartialEq)]
pub struct LoadedState {
    pub state: PureState,
    pub normalization_factor: f64,
    pub acin: Option<AcinParams>,
}

impl StateFile {
    pub fn from_state(psi: &PureState) -> Self {
        Self {
            n: Some(psi.n_qubits()),
            amplitudes: Some(psi.amplitudes().iter().map(|a| [a.re, a.im]).collect()),
            acin: None,
        }
    }

    pub fn load(self) -> Result<LoadedState> {
        match (self.amplitudes, self.acin) {
            (Some(_), Some(_)) => Err(StateError::Parse("give either amplitudes or acin, not both".into())),
            (None, None) => Err(StateError::Parse("missing amplitudes or acin".into())),
            (Some(raw), None) => {
                let amps: Vec<C64> = raw.iter().map(|[re, im]| C64::new(*re, *im)).collect();
                let n = match self.n {
                    Some(n) => n,
                    None if amps.len().is_power_of_two() && amps.len() >= 2 => amps.len().trailing_zeros() as usize,
                    None => return Err(StateError::NotPowerOfTwo(amps.len())),
                };
                let (state, normalization_factor) = PureState::normalized_with_factor(n, amps)?;
                Ok(LoadedState { state, normalization_factor, acin: None })
            }
            (None, Some(spec)) => {
                if self.n.is_some_and(|n| n != 3) {
                    return Err(StateError::Parse("acin form describes exactly 3 qubits".into()));
                }
                let lambda: [f64; 5] =
                    spec.lambda.as_slice().try_into().map_err(|_| {
                        StateError::Parse(format!("acin needs 5 coefficients, got {}", spec.lambda.len()))
                    })?;
                let norm = lambda.iter().map(|l| l * l).sum::<f64>().sqrt();
                if !(norm > 0.0) {
                    return Err(StateError::ZeroNorm);
                }
                let params = AcinParams::new(lambda.map(|l| l / norm), spec.phi)?;
                Ok(LoadedState { state: params.to_state(), normalization_factor: 1.0 / norm, acin: Some(params) })
            }
        }
    }
}

pub fn parse_state_json(text: &str) -> Result<LoadedState> {
    let file: StateFile = serde_json::from_str(text).map_err(|e| StateError::Parse(e.to_string()))?;
    file.load()
}

pub fn read_state_file(path: &Path) -> Result<LoadedState> {
    let text = std::fs::read_to_string(path).map_err(|e| StateError::Parse(format!("{}: {e}", path.display())))?;
    parse_state_json(&text)
}

pub fn state_to_json(psi: &PureState) -> String {
    serde_json::to_string(&StateFile::from_state(psi)).expect("state serializes")
}
