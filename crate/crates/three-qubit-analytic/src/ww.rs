use nalgebra::{Matrix3, Vector3};
use qstate_core::{ProductState, PureState, Qubit};

use crate::{AnalyticError, Result};

/// Stationary symmetric product state `(cos phi |0> + sin phi |1>)^(x3)` with `t = tan phi`.
#[derive(Clone, Debug, PartialEq)]
pub struct WwSolution {
    /// Selected root; `f64::INFINITY` stands for `phi = pi/2`.
    pub t_root: f64,
    pub lambda_sq: f64,
    /// All candidate roots with their overlap values.
    pub candidates: Vec<(f64, f64)>,
    pub product: ProductState,
}

/// `cos(theta)|W> + sin(theta)|W~>` with `|W~>` the bit-flipped W state.
pub fn ww_state(theta: f64) -> PureState {
    let (c, s) = (theta.cos() / 3f64.sqrt(), theta.sin() / 3f64.sqrt());
    PureState::from_real(3, &[0.0, c, c, s, c, s, s, 0.0]).expect("normalized")
}

fn real_roots(coeffs: [f64; 4]) -> Vec<f64> {
    let [a, b, c, d] = coeffs;
    let mut roots = Vec::new();
    if a.abs() > 1e-12 {
        let m = Matrix3::new(-b / a, -c / a, -d / a, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0);
        for z in m.complex_eigenvalues().iter() {
            if z.im.abs() < 1e-7 {
                roots.push(z.re);
            }
        }
    } else if b.abs() > 1e-12 {
        let disc = c * c - 4.0 * b * d;
        if disc >= 0.0 {
            roots.push((-c + disc.sqrt()) / (2.0 * b));
            roots.push((-c - disc.sqrt()) / (2.0 * b));
        }
    } else if c.abs() > 1e-12 {
        roots.push(-d / c);
    }
    let f = |t: f64| ((a * t + b) * t + c) * t + d;
    let df = |t: f64| (3.0 * a * t + 2.0 * b) * t + c;
    for t in roots.iter_mut() {
        for _ in 0..8 {
            let dv = df(*t);
            if dv.abs() < 1e-300 {
                break;
            }
            *t -= f(*t) / dv;
        }
    }
    roots
}

/// Real roots of `sin(theta) t^3 + 2cos(theta) t^2 - 2 sin(theta) t - cos(theta) = 0`,
/// selected by the overlap `(1 + 2 s.r + s^T g s) / 4` with `s = (sin 2phi, 0, cos 2phi)`.
/// The direction `phi = pi/2` (`t` infinite) is always among the candidates.
pub fn ww_superposition_cubic(theta: f64) -> Result<WwSolution> {
    if !(-1e-12..=std::f64::consts::FRAC_PI_2 + 1e-12).contains(&theta) {
        return Err(AnalyticError::Invariant(format!("theta must lie in [0, pi/2], got {theta}")));
    }
    let (st, ct) = theta.sin_cos();
    let r = Vector3::new(2.0 * (2.0 * theta).sin(), 0.0, (2.0 * theta).cos()) / 3.0;
    let g = Matrix3::from_diagonal(&Vector3::new(2.0, 2.0, -1.0)) / 3.0;
    let value = |phi: f64| {
        let s = Vector3::new((2.0 * phi).sin(), 0.0, (2.0 * phi).cos());
        0.25 * (1.0 + 2.0 * s.dot(&r) + s.dot(&(g * s)))
    };
    let mut candidates: Vec<(f64, f64)> =
        real_roots([st, 2.0 * ct, -2.0 * st, -ct]).into_iter().map(|t| (t, value(t.atan()))).collect();
    candidates.push((f64::INFINITY, value(std::f64::consts::FRAC_PI_2)));
    let &(t_root, lambda_sq) = candidates.iter().max_by(|x, y| x.1.total_cmp(&y.1)).expect("non-empty");
    let phi = if t_root.is_finite() { t_root.atan() } else { std::f64::consts::FRAC_PI_2 };
    let q = Qubit::from_real(phi.cos(), phi.sin())?;
    Ok(WwSolution { t_root, lambda_sq, candidates, product: ProductState { factors: vec![q; 3] } })
}
