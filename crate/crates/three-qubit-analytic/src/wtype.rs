use qstate_core::PureState;

use crate::{check_coefficients, RegionLabel3, Result};

/// `a|100> + b|010> + c|001>` with non-negative coefficients.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WType3 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl WType3 {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        check_coefficients(&[a, b, c])?;
        Ok(Self { a, b, c })
    }

    pub fn to_state(&self) -> PureState {
        PureState::from_real(3, &[0.0, self.c, self.b, 0.0, self.a, 0.0, 0.0, 0.0]).expect("normalized")
    }

    /// Reads the coefficients of a real non-negative state supported on `|100>, |010>, |001>`.
    pub fn detect(psi: &PureState, threshold: f64) -> Option<Self> {
        detect_real(psi, threshold, &[4, 2, 1]).map(|v| Self { a: v[0], b: v[1], c: v[2] })
    }
}

pub(crate) fn detect_real(psi: &PureState, threshold: f64, kets: &[usize]) -> Option<Vec<f64>> {
    if psi.n_qubits() != 3 {
        return None;
    }
    if psi.support(threshold).iter().any(|i| !kets.contains(i)) {
        return None;
    }
    let values: Vec<f64> =
        kets.iter().map(|&i| psi.amplitude(i)).map(|z| if z.norm() < threshold { 0.0 } else { z.re }).collect();
    let real = kets.iter().all(|&i| psi.amplitude(i).im.abs() <= threshold);
    (real && values.iter().all(|v| *v >= 0.0)).then_some(values)
}

/// `4R^2` of the triangle with sides `a, b, c` when the largest squared
/// coefficient is at most `1/2`, the largest squared coefficient otherwise.
pub fn lambda_sq_wtype(s: &WType3) -> (f64, RegionLabel3) {
    let (a, b, c) = (s.a, s.b, s.c);
    let max_sq = (a * a).max(b * b).max(c * c);
    let area16 = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
    if (max_sq - 0.5).abs() <= 1e-10 {
        return (max_sq, RegionLabel3::SharedSurfaceHighLow);
    }
    if max_sq > 0.5 || area16 <= 1e-14 {
        return (max_sq, RegionLabel3::LargestCoefficient);
    }
    (4.0 * a * a * b * b * c * c / area16, RegionLabel3::ConvexQuadrangle)
}
