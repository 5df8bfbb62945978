use qstate_core::{ProductState, PureState, Qubit};

use crate::wtype::detect_real;
use crate::{check_coefficients, Result};

/// `a|000> + b|111> + c|001> + d|110>` with non-negative coefficients.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymState {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl SymState {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        check_coefficients(&[a, b, c, d])?;
        Ok(Self { a, b, c, d })
    }

    pub fn to_state(&self) -> PureState {
        PureState::from_real(3, &[self.a, self.c, 0.0, 0.0, 0.0, 0.0, self.d, self.b]).expect("normalized")
    }

    pub fn detect(psi: &PureState, threshold: f64) -> Option<Self> {
        detect_real(psi, threshold, &[0, 7, 1, 6]).map(|v| Self { a: v[0], b: v[1], c: v[2], d: v[3] })
    }
}

/// `(1 + |a^2 + c^2 - b^2 - d^2|) / 2`, the larger squared Schmidt coefficient
/// across the cut between qubits (0, 1) and qubit 2.
pub fn lambda_sq_symmetric(s: &SymState) -> f64 {
    0.5 * (1.0 + (s.a * s.a + s.c * s.c - s.b * s.b - s.d * s.d).abs())
}

/// `|00> (a|0> + c|1>)` or `|11> (d|0> + b|1>)`, whichever carries more weight.
pub fn symmetric_nearest_product(s: &SymState) -> ProductState {
    let (pair, tail) = if s.a * s.a + s.c * s.c >= s.b * s.b + s.d * s.d {
        (Qubit::zero(), Qubit::from_real(s.a, s.c))
    } else {
        (Qubit::one(), Qubit::from_real(s.d, s.b))
    };
    ProductState { factors: vec![pair, pair, tail.unwrap_or_else(|_| Qubit::zero())] }
}
