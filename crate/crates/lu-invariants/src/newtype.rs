use std::f64::consts::PI;

use qstate_core::AcinParams;
use three_qubit_analytic::RegionLabel3;

use crate::{LuError, LuInvariants, Result};

const NORM_TOL: f64 = 1e-10;
const EPS: f64 = 1e-14;

/// Standard form of `a|100> + b|010> + c|001> + q|111>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NewTypeForm {
    pub acin: AcinParams,
    /// Residual of `l0^2 (l2^2 + l3^2 + l4^2) = 1/4 - (l1^2 / l4^2)(l2^2 + l4^2)(l3^2 + l4^2)`.
    pub extra_constraint_residual: f64,
}

fn check(a: f64, b: f64, c: f64, q: f64) -> Result<()> {
    if [a, b, c, q].iter().any(|v| !(*v >= 0.0) || !v.is_finite()) {
        return Err(LuError::Invalid(format!("coefficients must be non-negative: {a}, {b}, {c}, {q}")));
    }
    let n = a * a + b * b + c * c + q * q;
    if (n - 1.0).abs() > NORM_TOL {
        return Err(LuError::Invalid(format!("squared coefficients sum to {n}, expected 1")));
    }
    Ok(())
}

/// `(a^2 + q^2 - b^2 - c^2)(ab - cq)(ac - bq) >= 0`.
pub fn newtype_region_positive(a: f64, b: f64, c: f64, q: f64) -> bool {
    (a * a + q * q - b * b - c * c) * (a * b - c * q) * (a * c - b * q) >= 0.0
}

/// Standard form with `phi = 0` in the positive region and `phi = pi` otherwise.
pub fn newtype_standard_form(a: f64, b: f64, c: f64, q: f64) -> Result<NewTypeForm> {
    check(a, b, c, q)?;
    let t = a * q + b * c;
    if t <= EPS {
        return Err(LuError::DegenerateTransform);
    }
    let u = a * b + c * q;
    let w = a * c + b * q;
    let l0s = w * u / t;
    let l0 = l0s.sqrt();
    let m = a * a + q * q - b * b - c * c;
    let abcq = a * b * c * q;
    let l1 = abcq.sqrt() * m.abs() / (u * w * t).sqrt();
    let l2 = (a * c - b * q).abs() / l0;
    let l3 = (a * b - c * q).abs() / l0;
    let l4 = 2.0 * abcq.sqrt() / l0;
    let phi = if newtype_region_positive(a, b, c, q) { 0.0 } else { PI };
    let acin = AcinParams::new([l0, l1, l2, l3, l4], phi)?;
    let (l2s, l3s, l4s) = (l2 * l2, l3 * l3, l4 * l4);
    // l1^2 / l4^2 in closed form, finite when q or abc vanish.
    let ratio = l0s * m * m / (4.0 * u * w * t);
    let residual = l0s * (l2s + l3s + l4s) - (0.25 - ratio * (l2s + l4s) * (l3s + l4s));
    Ok(NewTypeForm { acin, extra_constraint_residual: residual.abs() })
}

/// `J1 = (aq - bc)^2`, `J2 = (ac - bq)^2`, `J3 = (ab - cq)^2`, `J4 = 4abcq`,
/// `J5 = 2(bc - aq)(ab - cq)(ac - bq)`.
pub fn newtype_invariants(a: f64, b: f64, c: f64, q: f64) -> Result<LuInvariants> {
    check(a, b, c, q)?;
    let x = a * q - b * c;
    let y = a * c - b * q;
    let z = a * b - c * q;
    Ok(LuInvariants { j1: x * x, j2: y * y, j3: z * z, j4: 4.0 * a * b * c * q, j5: -2.0 * x * y * z })
}

/// `P_max` of a four-term state on the given branch, written in the invariants.
pub fn pmax_newtype_invariant_form(ji: &LuInvariants, branch: RegionLabel3) -> Result<f64> {
    let LuInvariants { j1, j2, j3, j4, .. } = *ji;
    let root = |x: f64| x.max(0.0).sqrt();
    let v = match branch {
        RegionLabel3::ConvexQuadrangle | RegionLabel3::SharedSurfaceR0 => {
            let den = 4.0 * (j1 + j2 + j3 + 2.0 * j4) - 1.0;
            if den.abs() <= EPS {
                return Err(LuError::Branch("convex-quadrangle denominator vanishes".into()));
            }
            4.0 * root((j1 + j4) * (j2 + j4) * (j3 + j4)) / den
        }
        RegionLabel3::CrossedQuadrangle => {
            let den = 4.0 * (j1 + j2 + j3 + j4) - 1.0;
            if den.abs() <= EPS {
                return Err(LuError::Branch("crossed-quadrangle denominator vanishes".into()));
            }
            (4.0 * root(j1 * j2 * j3) / den).abs()
        }
        RegionLabel3::LargestCoefficient | RegionLabel3::SharedSurfaceHighLow => {
            0.25 * (1.0
                + root(1.0 - 4.0 * (j2 + j3 + j4))
                + root(1.0 - 4.0 * (j1 + j3 + j4))
                + root(1.0 - 4.0 * (j1 + j2 + j4)))
        }
    };
    Ok(v)
}
