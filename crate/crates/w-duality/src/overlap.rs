use qstate_core::{ProductState, Qubit};
use serde::{Deserialize, Serialize};

use crate::{critical_values, solve_diameter, DiameterSolution, RegionLabel, Result, WRegion, WStateN};

#[derive(Clone, Debug, PartialEq)]
pub struct WOverlap {
    pub lambda: f64,
    pub nearest: ProductState,
    pub region: WRegion,
    pub diameter: Option<DiameterSolution>,
}

impl WOverlap {
    pub fn lambda_sq(&self) -> f64 {
        self.lambda * self.lambda
    }
}

/// Serializable summary used by reports.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WOverlapSummary {
    pub lambda: f64,
    pub lambda_sq: f64,
    pub region: WRegion,
    pub diameter: Option<DiameterSolution>,
}

impl From<&WOverlap> for WOverlapSummary {
    fn from(o: &WOverlap) -> Self {
        Self { lambda: o.lambda, lambda_sq: o.lambda_sq(), region: o.region, diameter: o.diameter.clone() }
    }
}

/// `Lambda_max` of a W state with its nearest product state and region.
///
/// Highly entangled states use `Lambda = 2r prod sin theta_k`; otherwise
/// `Lambda = c_n` at the basis product with a 1 on the largest-coefficient qubit.
pub fn lambda_max_w(w: &WStateN) -> Result<WOverlap> {
    let region = critical_values(w);
    let n = w.n();
    if matches!(region.label, RegionLabel::SlightlyEntangled | RegionLabel::BoundaryShared) {
        let nearest = ProductState::basis(n, 1 << (n - 1 - w.largest_index()));
        let diameter = (region.label == RegionLabel::BoundaryShared).then(|| solve_diameter(w)).transpose()?;
        return Ok(WOverlap { lambda: w.largest(), nearest, region, diameter });
    }
    let sol = solve_diameter(w)?;
    let r = sol.r;
    let log_sin_sq: f64 = sol.thetas.iter().map(|t| t.sin().powi(2).ln()).sum();
    let lambda = (4.0 * r * r * log_sin_sq.exp()).sqrt();
    let factors =
        sol.thetas.iter().map(|t| Qubit::from_real(t.sin(), t.cos())).collect::<std::result::Result<_, _>>()?;
    Ok(WOverlap { lambda, nearest: ProductState::new(factors)?, region, diameter: Some(sol) })
}
