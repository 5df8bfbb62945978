use nalgebra::Matrix3;
use qstate_core::{BlochVector, PureState};
use variational::LagrangeSolution;

use crate::wtype::detect_real;
use crate::{check_coefficients, AnalyticError, RegionLabel3, Result};

const DEGENERATE: f64 = 1e-14;
const SURFACE: f64 = 1e-10;
const R_ZERO: f64 = 1e-12;

/// `a|100> + b|010> + c|001> + d|111>` with non-negative coefficients.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourTerm {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl FourTerm {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        check_coefficients(&[a, b, c, d])?;
        Ok(Self { a, b, c, d })
    }

    pub fn to_state(&self) -> PureState {
        PureState::from_real(3, &[0.0, self.c, self.b, 0.0, self.a, 0.0, 0.0, self.d]).expect("normalized")
    }

    pub fn detect(psi: &PureState, threshold: f64) -> Option<Self> {
        detect_real(psi, threshold, &[4, 2, 1, 7]).map(|v| Self { a: v[0], b: v[1], c: v[2], d: v[3] })
    }

    fn as_array(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourTermQuantities {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
    pub omega: f64,
    pub mu: f64,
    /// `(p-a)(p-b)(p-c)(p-d)` with `p` the semiperimeter.
    pub sq_sq: f64,
    /// `p(p-c-d)(p-b-d)(p-a-d)`.
    pub sx_sq: f64,
    /// Squared circumradius of the convex quadrangle; `None` when degenerate.
    pub rq_sq: Option<f64>,
    /// Squared circumradius of the crossed quadrangle; `None` when it has no circumcircle.
    pub rx_sq: Option<f64>,
}

impl FourTermQuantities {
    pub fn r(&self) -> f64 {
        self.r1 * self.r2 * self.r3
    }
}

pub fn fourterm_quantities(s: &FourTerm) -> FourTermQuantities {
    let FourTerm { a, b, c, d } = *s;
    let (a2, b2, c2, d2) = (a * a, b * b, c * c, d * d);
    let r1 = b2 + c2 - a2 - d2;
    let r2 = a2 + c2 - b2 - d2;
    let r3 = a2 + b2 - c2 - d2;
    let omega = a * b + d * c;
    let mu = a * b - d * c;
    let p = 0.5 * (a + b + c + d);
    let sq_sq = (p - a) * (p - b) * (p - c) * (p - d);
    let sx_sq = p * (p - c - d) * (p - b - d) * (p - a - d);
    let convex = (a * b + c * d) * (a * c + b * d) * (a * d + b * c);
    let crossed = (a * c - b * d) * (b * c - a * d) * (a * b - c * d);
    let r = r1 * r2 * r3;
    let rq_sq = (sq_sq > DEGENERATE).then(|| convex / (16.0 * sq_sq));
    let rx_sq = if sx_sq.abs() <= DEGENERATE && crossed.abs() <= DEGENERATE && r.abs() <= R_ZERO {
        Some(0.125)
    } else if sx_sq > DEGENERATE && crossed >= 0.0 {
        Some(crossed / (16.0 * sx_sq))
    } else {
        None
    };
    FourTermQuantities { r1, r2, r3, omega, mu, sq_sq, sx_sq, rq_sq, rx_sq }
}

fn largest(s: &FourTerm) -> f64 {
    s.as_array().into_iter().fold(0.0, f64::max)
}

/// `Lambda^2` and its validity domain.
///
/// With `l` the largest coefficient, `4R_q^2` holds for `l^2 <= 1/2 + abcd/l^2`
/// and `l^2` above it; on `r_1 r_2 r_3 = 0` the value is exactly `1/2`.
pub fn lambda_sq_fourterm(s: &FourTerm) -> (f64, RegionLabel3) {
    let q = fourterm_quantities(s);
    let l = largest(s);
    let l2 = l * l;
    let threshold = 0.5 + s.a * s.b * s.c * s.d / l2;
    if (l2 - threshold).abs() <= SURFACE {
        let value = q.rq_sq.map_or(l2, |r| 4.0 * r);
        return (value, RegionLabel3::SharedSurfaceHighLow);
    }
    if l2 > threshold {
        return (l2, RegionLabel3::LargestCoefficient);
    }
    if q.r().abs() <= R_ZERO {
        return (0.5, RegionLabel3::SharedSurfaceR0);
    }
    match q.rq_sq {
        Some(r) => (4.0 * r, RegionLabel3::ConvexQuadrangle),
        None => (l2, RegionLabel3::LargestCoefficient),
    }
}

/// `(r_A, r_B, g)` of the reduced state on qubits 0 and 1.
pub fn fourterm_bloch_data(s: &FourTerm) -> (BlochVector, BlochVector, Matrix3<f64>) {
    let q = fourterm_quantities(s);
    let g = Matrix3::new(2.0 * q.omega, 0.0, 0.0, 0.0, 2.0 * q.mu, 0.0, 0.0, 0.0, -q.r3);
    (BlochVector::new(0.0, 0.0, q.r1), BlochVector::new(0.0, 0.0, q.r2), g)
}

fn planar(u: f64, v: f64, l1: f64, g: f64, plane_y: bool) -> Result<(BlochVector, BlochVector)> {
    if u.abs() > 1.0 + 1e-12 || v.abs() > 1.0 + 1e-12 {
        return Err(AnalyticError::Undefined(format!("z-components ({u}, {v}) leave the unit interval")));
    }
    let t1 = (1.0 - u * u).max(0.0).sqrt();
    let t2 = if g.abs() > DEGENERATE { l1 * t1 / g } else { (1.0 - v * v).max(0.0).sqrt() };
    Ok(if plane_y {
        (BlochVector::new(0.0, t1, u), BlochVector::new(0.0, t2, v))
    } else {
        (BlochVector::new(t1, 0.0, u), BlochVector::new(t2, 0.0, v))
    })
}

/// Bloch vectors of the nearest product state for the branch the state lies in.
pub fn fourterm_bloch_solution(s: &FourTerm) -> Result<LagrangeSolution> {
    let (_, label) = lambda_sq_fourterm(s);
    let branch = match label {
        RegionLabel3::SharedSurfaceHighLow | RegionLabel3::SharedSurfaceR0 => RegionLabel3::ConvexQuadrangle,
        other => other,
    };
    fourterm_bloch_solution_on(s, branch).or_else(|e| match label {
        RegionLabel3::SharedSurfaceHighLow => fourterm_bloch_solution_on(s, RegionLabel3::LargestCoefficient),
        _ => Err(e),
    })
}

/// Bloch vectors on an explicitly requested branch.
pub fn fourterm_bloch_solution_on(s: &FourTerm, branch: RegionLabel3) -> Result<LagrangeSolution> {
    let (_, actual) = lambda_sq_fourterm(s);
    let allowed = match branch {
        RegionLabel3::ConvexQuadrangle => matches!(
            actual,
            RegionLabel3::ConvexQuadrangle | RegionLabel3::SharedSurfaceR0 | RegionLabel3::SharedSurfaceHighLow
        ),
        RegionLabel3::CrossedQuadrangle => actual == RegionLabel3::SharedSurfaceR0,
        RegionLabel3::LargestCoefficient => {
            matches!(actual, RegionLabel3::LargestCoefficient | RegionLabel3::SharedSurfaceHighLow)
        }
        RegionLabel3::SharedSurfaceR0 | RegionLabel3::SharedSurfaceHighLow => false,
    };
    if !allowed {
        return Err(AnalyticError::Branch { requested: branch, actual });
    }
    let FourTerm { a, b, c, d } = *s;
    let q = fourterm_quantities(s);
    let (r1v, r2v, g) = fourterm_bloch_data(s);
    let (s1, s2) = match branch {
        RegionLabel3::LargestCoefficient => {
            (BlochVector::new(0.0, 0.0, q.r1.signum()), BlochVector::new(0.0, 0.0, q.r2.signum()))
        }
        RegionLabel3::ConvexQuadrangle => {
            let den = 4.0 * q.omega * q.omega - q.r3 * q.r3;
            let (p, m) = (a * c + b * d, b * c + a * d);
            if den.abs() <= DEGENERATE || p <= DEGENERATE || m <= DEGENERATE {
                return Err(AnalyticError::Undefined("degenerate convex quadrangle".into()));
            }
            let l1 = 2.0 * q.omega * m / p;
            let l2 = 2.0 * q.omega * p / m;
            let u = (l2 * q.r1 - q.r2 * q.r3) / den;
            let v = (l1 * q.r2 - q.r1 * q.r3) / den;
            planar(u, v, l1, 2.0 * q.omega, false)?
        }
        _ => {
            let den = 4.0 * q.mu * q.mu - q.r3 * q.r3;
            let (p, m) = (a * c - b * d, b * c - a * d);
            if den.abs() <= DEGENERATE || p.abs() <= DEGENERATE || m.abs() <= DEGENERATE {
                return Err(AnalyticError::Undefined("degenerate crossed quadrangle".into()));
            }
            let l1 = 2.0 * q.mu * m / p;
            let l2 = 2.0 * q.mu * p / m;
            let u = (l2 * q.r1 - q.r2 * q.r3) / den;
            let v = (l1 * q.r2 - q.r1 * q.r3) / den;
            planar(u, v, l1, 2.0 * q.mu, true)?
        }
    };
    let sol = LagrangeSolution::at(&r1v, &r2v, &g, &s1, &s2);
    let res = sol.residual(&r1v, &r2v, &g);
    if res > 1e-9 {
        return Err(AnalyticError::Undefined(format!("branch solution residual {res:e}")));
    }
    Ok(sol)
}
