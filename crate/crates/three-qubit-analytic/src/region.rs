use std::fmt;

/// Validity domain of the four-term and W-type formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionLabel3 {
    /// `Lambda^2 = 4 R_q^2`, circumradius of the convex quadrangle (or triangle).
    ConvexQuadrangle,
    /// `Lambda^2 = 4 R_x^2`, circumradius of the crossed quadrangle.
    CrossedQuadrangle,
    /// `Lambda^2 = l^2` with `l` the largest coefficient.
    LargestCoefficient,
    /// `r_1 r_2 r_3 = 0`, where both circumradius formulas give `1/2`.
    SharedSurfaceR0,
    /// `l^2 = 1/2 + abcd / l^2`, separating the circumradius and largest-coefficient domains.
    SharedSurfaceHighLow,
}

impl RegionLabel3 {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::ConvexQuadrangle => "convex-quadrangle",
            Self::CrossedQuadrangle => "crossed-quadrangle",
            Self::LargestCoefficient => "largest-coefficient",
            Self::SharedSurfaceR0 => "shared-surface-r0",
            Self::SharedSurfaceHighLow => "shared-surface-high-low",
        }
    }
}

impl fmt::Display for RegionLabel3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
