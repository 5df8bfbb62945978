use crate::{solve_diameter, DualityError, Result, WStateN};

/// `r^2` for `m` coefficients `cos(theta)/sqrt(m)` and `k` coefficients `sin(theta)/sqrt(k)`.
///
/// With `N = m + k` and `D = 1 - (N - 1) sin^2(2theta) / (mk)`,
/// `r^2 = [2Nmk - 4(N-1)(m cos^2 + k sin^2) + 2mk(N-2) sqrt(D)] / [16(N-1)(m-1)(k-1)]`.
/// A block of size one makes the ratio indeterminate; the root finder is used instead.
pub fn two_block_closed_form(m: usize, k: usize, theta: f64) -> Result<f64> {
    if m == 0 || k == 0 {
        return Err(DualityError::Invalid("both blocks need at least one qubit".into()));
    }
    if m == 1 || k == 1 {
        let r = solve_diameter(&WStateN::two_block(m, k, theta)?)?.r;
        return Ok(r * r);
    }
    let (mf, kf) = (m as f64, k as f64);
    let nf = mf + kf;
    let (s, c) = theta.sin_cos();
    let d = 1.0 - (nf - 1.0) / (mf * kf) * (2.0 * theta).sin().powi(2);
    let num = 2.0 * nf * mf * kf - 4.0 * (nf - 1.0) * (mf * c * c + kf * s * s)
        + 2.0 * mf * kf * (nf - 2.0) * d.max(0.0).sqrt();
    Ok(num / (16.0 * (nf - 1.0) * (mf - 1.0) * (kf - 1.0)))
}

/// Large-`N` diameter when one coefficient `c` dominates: `r = (1 - c^2) / (2 sqrt(1 - 2c^2))`.
pub fn asymmetric_r_approx(c: f64) -> Result<f64> {
    let c_sq = c * c;
    if !(0.0..0.5).contains(&c_sq) {
        return Err(DualityError::Invalid(format!("need 0 <= c^2 < 1/2, got {c_sq}")));
    }
    Ok(0.5 * (1.0 - c_sq) / (1.0 - 2.0 * c_sq).sqrt())
}

/// Large-`N` overlap when one coefficient `c` dominates: `(1 - c^2) exp(-(1 - 2c^2) / (1 - c^2))`.
pub fn asymmetric_lambda_sq_approx(c: f64) -> Result<f64> {
    let c_sq = c * c;
    if !(0.0..=0.5).contains(&c_sq) {
        return Err(DualityError::Invalid(format!("need 0 <= c^2 <= 1/2, got {c_sq}")));
    }
    Ok((1.0 - c_sq) * (-(1.0 - 2.0 * c_sq) / (1.0 - c_sq)).exp())
}

/// Interpolating `Lambda^2` for many qubits as a function of the smallest Bloch `z` component.
///
/// `((1 + bz)/2) exp(-2bz/(1 + bz))` on `(0, 1/3]`, `(1 - bz)/2` on `[-1, 0]`.
pub fn large_n_lambda_sq(bz: f64) -> Result<f64> {
    if !(-1.0..=1.0 / 3.0).contains(&bz) {
        return Err(DualityError::OutsideDomain(bz));
    }
    if bz <= 0.0 {
        Ok(0.5 * (1.0 - bz))
    } else {
        Ok(0.5 * (1.0 + bz) * (-2.0 * bz / (1.0 + bz)).exp())
    }
}
