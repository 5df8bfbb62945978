use serde::{Deserialize, Serialize};

use crate::{bisect, critical_values, one_minus_root, DualityError, RegionLabel, Result, WStateN, FIRST_BOUNDARY_TOL};

/// Rounding allowance on the diameter bounds.
const BOUND_SLACK: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    /// All radicals positive.
    SymmetricPlus,
    /// Negative radical for the largest coefficient.
    AsymmetricMinus,
    /// Shared-surface limit, `r` infinite.
    None,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::SymmetricPlus => "symmetric",
            Self::AsymmetricMinus => "asymmetric",
            Self::None => "none",
        }
    }
}

/// Entanglement diameter and the angles of the nearest product state, in input order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiameterSolution {
    pub r: f64,
    pub branch: Branch,
    pub thetas: Vec<f64>,
}

impl DiameterSolution {
    /// Direction cosines `cos theta_k`; a unit vector.
    pub fn direction_cosines(&self) -> Vec<f64> {
        self.thetas.iter().map(|t| t.cos()).collect()
    }
}

fn sym_excess(c: &[f64], r: f64) -> f64 {
    2.0 - c.iter().map(|x| one_minus_root((x / r).powi(2))).sum::<f64>()
}

fn asym_excess(c: &[f64], r: f64) -> f64 {
    let (last, rest) = c.split_last().expect("non-empty");
    one_minus_root((last / r).powi(2)) - rest.iter().map(|x| one_minus_root((x / r).powi(2))).sum::<f64>()
}

/// Angle from `cos^2 theta` given either it or its complement, whichever is accurate.
fn angle(cos_sq: f64, sin_sq: f64) -> f64 {
    sin_sq.max(0.0).sqrt().atan2(cos_sq.max(0.0).sqrt())
}

fn thetas_sorted(c: &[f64], r: f64, branch: Branch) -> Vec<f64> {
    let n = c.len();
    c.iter()
        .enumerate()
        .map(|(k, x)| {
            let q = one_minus_root((x / r).powi(2));
            if k == n - 1 && branch == Branch::AsymmetricMinus {
                angle(1.0 - 0.5 * q, 0.5 * q)
            } else {
                angle(0.5 * q, 1.0 - 0.5 * q)
            }
        })
        .collect()
}

/// Entanglement diameter of a state that is not slightly entangled.
///
/// The symmetric equation `f+(r) = n - 2` has an increasing left side on
/// `[c_n, inf)`. On the asymmetric side `f-(c_n) >= n - 2`, `f-` first decreases
/// below `n - 2` and then approaches it from below, so the single root lies on
/// the decreasing flank: the bracket grows until `f-` drops below `n - 2`.
pub fn solve_diameter(w: &WStateN) -> Result<DiameterSolution> {
    let region = critical_values(w);
    let c = w.sorted();
    let n = c.len();
    let cn = w.largest();
    let (r, branch) = match region.label {
        RegionLabel::SlightlyEntangled => return Err(DualityError::SlightlyEntangled(cn * cn)),
        RegionLabel::BoundaryShared if (cn - region.r1).abs() <= FIRST_BOUNDARY_TOL => (cn, Branch::SymmetricPlus),
        RegionLabel::BoundaryShared => {
            let mut thetas = vec![std::f64::consts::FRAC_PI_2; n];
            thetas[n - 1] = 0.0;
            return Ok(DiameterSolution { r: f64::INFINITY, branch: Branch::None, thetas: w.unsort(&thetas) });
        }
        RegionLabel::BoundaryFirst => (cn, Branch::SymmetricPlus),
        RegionLabel::SymmetricHigh => {
            let mut hi = 2.0 * cn;
            let mut steps = 0;
            while sym_excess(c, hi) < 0.0 {
                hi *= 2.0;
                steps += 1;
                if steps > 200 {
                    return Err(DualityError::NoBracket("symmetric"));
                }
            }
            (bisect(|r| sym_excess(c, r), cn, hi), Branch::SymmetricPlus)
        }
        RegionLabel::AsymmetricHigh => {
            let mut hi = 2.0 * cn;
            let mut steps = 0;
            while asym_excess(c, hi) >= 0.0 {
                hi *= 2.0;
                steps += 1;
                if steps > 200 {
                    return Err(DualityError::NoBracket("asymmetric"));
                }
            }
            (bisect(|r| asym_excess(c, r), cn, hi), Branch::AsymmetricMinus)
        }
    };
    let r_sq = r * r;
    let ok = match branch {
        Branch::SymmetricPlus => (0.25 - BOUND_SLACK..=0.5 + BOUND_SLACK).contains(&r_sq),
        _ => r_sq >= 1.0 / 3.0 - BOUND_SLACK,
    };
    if !ok {
        return Err(DualityError::Bound { r_sq, branch: branch.as_str() });
    }
    Ok(DiameterSolution { r, branch, thetas: w.unsort(&thetas_sorted(c, r, branch)) })
}

/// Image of a set of angles under the inverse duality map.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InverseImage {
    pub r: f64,
    pub coefficients: Vec<f64>,
}

/// `r^2 = 1 / sum sin^2 2theta_k`, `c_k = r sin 2theta_k`.
pub fn inverse_map(thetas: &[f64]) -> Result<InverseImage> {
    let s: f64 = thetas.iter().map(|t| (2.0 * t).sin().powi(2)).sum();
    if !(s > 0.0) {
        return Err(DualityError::Invalid("all sin 2theta vanish".into()));
    }
    let r = s.sqrt().recip();
    Ok(InverseImage { r, coefficients: thetas.iter().map(|t| r * (2.0 * t).sin()).collect() })
}

/// Right triangles with hypotenuse `r`, legs `c_k` and adjacent sides `sqrt(r^2 - c_k^2)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Pyramid {
    pub hypotenuse: f64,
    pub legs: Vec<f64>,
    pub adjacent: Vec<f64>,
}

pub fn pyramid_geometry(w: &WStateN, sol: &DiameterSolution) -> Result<Pyramid> {
    if sol.branch == Branch::None || !sol.r.is_finite() {
        return Err(DualityError::Invalid("no finite entanglement diameter".into()));
    }
    let r = sol.r;
    let legs = w.coefficients().to_vec();
    let adjacent = legs.iter().map(|c| r * (1.0 - one_minus_root((c / r).powi(2)))).collect();
    Ok(Pyramid { hypotenuse: r, legs, adjacent })
}
