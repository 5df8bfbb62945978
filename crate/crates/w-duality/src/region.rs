use serde::{Deserialize, Serialize};

use crate::{bisect, one_minus_root, WStateN, FIRST_BOUNDARY_TOL, SHARED_BAND};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionLabel {
    /// `c_n < r1`.
    SymmetricHigh,
    /// `r1 < c_n < r2`.
    AsymmetricHigh,
    /// `c_n > r2`, equivalently `c_n^2 > 1/2`.
    SlightlyEntangled,
    /// `c_n = r1`.
    BoundaryFirst,
    /// `c_n = r2`, `Lambda^2 = 1/2`.
    BoundaryShared,
}

impl RegionLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::SymmetricHigh => "symmetric-high",
            Self::AsymmetricHigh => "asymmetric-high",
            Self::SlightlyEntangled => "slightly-entangled",
            Self::BoundaryFirst => "boundary-first",
            Self::BoundaryShared => "boundary-shared",
        }
    }

    pub fn is_highly_entangled(self) -> bool {
        matches!(self, Self::SymmetricHigh | Self::AsymmetricHigh | Self::BoundaryFirst)
    }
}

impl std::fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WRegion {
    pub r1: f64,
    pub r2: f64,
    pub label: RegionLabel,
}

/// `f0(r) - (n - 2)` for the coefficients `others` (all but the largest).
pub(crate) fn f0_excess(others: &[f64], r: f64) -> f64 {
    1.0 - others.iter().map(|c| one_minus_root((c / r).powi(2))).sum::<f64>()
}

/// Root of `sum sqrt(r^2 - c_k^2) = (len - 1) r` over `others`.
pub(crate) fn first_critical(others: &[f64]) -> f64 {
    let top = others.iter().fold(0.0f64, |a, &b| a.max(b));
    if top == 0.0 {
        return 0.0;
    }
    // f0 <= n - 2 at the largest of the others; f0 >= n - 2 at r2.
    let r2 = others.iter().map(|c| c * c).sum::<f64>().sqrt();
    let mut hi = r2.max(top);
    while f0_excess(others, hi) < 0.0 {
        hi *= 2.0;
    }
    bisect(|r| f0_excess(others, r), top, hi)
}

pub fn critical_values(w: &WStateN) -> WRegion {
    let n = w.n();
    let others = &w.sorted()[..n - 1];
    let cn = w.largest();
    let r2 = others.iter().map(|c| c * c).sum::<f64>().sqrt();
    let r1 = first_critical(others);
    let label = if (cn * cn - r2 * r2).abs() <= 2.0 * SHARED_BAND {
        RegionLabel::BoundaryShared
    } else if cn > r2 {
        RegionLabel::SlightlyEntangled
    } else if (cn - r1).abs() <= FIRST_BOUNDARY_TOL {
        RegionLabel::BoundaryFirst
    } else if cn < r1 {
        RegionLabel::SymmetricHigh
    } else {
        RegionLabel::AsymmetricHigh
    };
    WRegion { r1, r2, label }
}
