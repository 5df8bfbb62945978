use std::path::Path;

use qstate_core::io::{parse_state_json, read_state_file, LoadedState};
use qstate_core::PureState;

use crate::{CliError, Result};

/// Reads a state from a file path, inline JSON, or a shorthand.
///
/// Shorthands: `ghz:N`, `w:N`, `w:c1,c2,...` (normalized), `basis:N:INDEX`.
pub fn load_state(source: &str) -> Result<PureState> {
    Ok(load(source)?.state)
}

pub fn load(source: &str) -> Result<LoadedState> {
    let trimmed = source.trim();
    if trimmed.starts_with('{') {
        return Ok(parse_state_json(trimmed)?);
    }
    let path = Path::new(source);
    if path.exists() {
        return Ok(read_state_file(path)?);
    }
    match shorthand(trimmed) {
        Some(psi) => {
            let psi = psi?;
            Ok(LoadedState { state: psi, normalization_factor: 1.0, acin: None })
        }
        None => Err(CliError::Input(format!("cannot read state '{source}': no such file and not a known shorthand"))),
    }
}

fn shorthand(s: &str) -> Option<Result<PureState>> {
    let (kind, rest) = s.split_once(':')?;
    let parsed = match kind {
        "ghz" => count(rest).and_then(|n| Ok(PureState::ghz(n)?)),
        "w" if rest.contains(',') => floats(rest).and_then(|c| {
            let norm = c.iter().map(|x| x * x).sum::<f64>().sqrt();
            if !(norm > 0.0) || !norm.is_finite() {
                return Err(CliError::Input("W coefficients are not normalizable".into()));
            }
            Ok(PureState::w_type(&c.iter().map(|x| x / norm).collect::<Vec<_>>())?)
        }),
        "w" => count(rest).and_then(|n| Ok(PureState::w(n)?)),
        "basis" => {
            let (n, index) = match rest.split_once(':') {
                Some(pair) => pair,
                None => return Some(Err(CliError::Input("basis shorthand is basis:N:INDEX".into()))),
            };
            count(n).and_then(|n| {
                let i = index.trim().parse::<usize>().map_err(|e| CliError::Input(format!("basis index: {e}")))?;
                Ok(PureState::basis(n, i)?)
            })
        }
        _ => return None,
    };
    Some(parsed)
}

fn count(s: &str) -> Result<usize> {
    s.trim().parse::<usize>().map_err(|e| CliError::Input(format!("qubit count '{s}': {e}")))
}

fn floats(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|e| CliError::Input(format!("coefficient '{x}': {e}"))))
        .collect()
}
