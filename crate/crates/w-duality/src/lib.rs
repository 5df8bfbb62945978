//! Maximal product overlap of n-qubit W states
//! `c1|10...0> + c2|01...0> + ... + cn|0...01>` with non-negative coefficients.
//!
//! Highly entangled states are solved through the entanglement diameter `r`,
//! the common value of `c_k / sin 2 theta_k`, where the nearest product state
//! has factors `sin theta_k |0> + cos theta_k |1>`.

mod approx;
mod diameter;
mod error;
mod overlap;
mod region;
mod state;

pub use approx::{asymmetric_lambda_sq_approx, asymmetric_r_approx, large_n_lambda_sq, two_block_closed_form};
pub use diameter::{inverse_map, pyramid_geometry, solve_diameter, Branch, DiameterSolution, InverseImage, Pyramid};
pub use error::DualityError;
pub use overlap::{lambda_max_w, WOverlap, WOverlapSummary};
pub use region::{critical_values, RegionLabel, WRegion};
pub use state::WStateN;

pub type Result<T> = std::result::Result<T, DualityError>;

/// Half-width of the band around `c_n^2 = 1/2` treated as the shared surface.
pub const SHARED_BAND: f64 = 1e-10;
/// Distance `|c_n - r1|` below which a state sits on the first critical boundary.
pub const FIRST_BOUNDARY_TOL: f64 = 1e-12;

/// `1 - sqrt(1 - x)` without cancellation for small `x`.
pub(crate) fn one_minus_root(x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    x / (1.0 + (1.0 - x).sqrt())
}

/// Bisection on a sign change of `g` over `[lo, hi]`, run to floating-point resolution.
pub(crate) fn bisect(g: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let g_lo = g(lo);
    if g_lo == 0.0 {
        return lo;
    }
    if g(hi) == 0.0 {
        return hi;
    }
    let lo_positive = g_lo > 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = g(mid);
        if v == 0.0 {
            return mid;
        }
        if (v > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
