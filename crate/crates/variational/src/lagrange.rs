use nalgebra::{Matrix2, Matrix3, SMatrix, SVector, Vector2, Vector3};
use qstate_core::{two_qubit_bloch_data, BlochVector, DensityMatrix};

use crate::reduced::{bloch_objective, start_directions};
use crate::Result;

/// A critical point of `s1.r1 + s2.r2 + s1^T g s2` on the product of unit spheres.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LagrangeSolution {
    pub s1: BlochVector,
    pub s2: BlochVector,
    pub lambda1: f64,
    pub lambda2: f64,
    /// Objective `(1 + s1.r1 + s2.r2 + s1^T g s2) / 4` at this point.
    pub value: f64,
    /// `det(lambda1 lambda2 I - g g^T)` vanishes, so the point lies on a
    /// family that the closed-form inversion cannot resolve.
    pub free_family: bool,
}

impl LagrangeSolution {
    /// Evaluates the multipliers `l1 = s1.(r1 + g s2)`, `l2 = s2.(r2 + g^T s1)` at a given pair.
    pub fn at(r1: &BlochVector, r2: &BlochVector, g: &Matrix3<f64>, s1: &BlochVector, s2: &BlochVector) -> Self {
        let (r1, r2, v1, v2) = (r1.to_vector(), r2.to_vector(), s1.to_vector(), s2.to_vector());
        let l1 = v1.dot(&(r1 + g * v2));
        let l2 = v2.dot(&(r2 + g.transpose() * v1));
        let scale = 1.0 + g.norm_squared();
        let det = (Matrix3::identity() * (l1 * l2) - g * g.transpose()).determinant();
        Self {
            s1: *s1,
            s2: *s2,
            lambda1: l1,
            lambda2: l2,
            value: bloch_objective(&r1, &r2, g, &v1, &v2),
            free_family: det.abs() < 1e-8 * scale * scale * scale,
        }
    }

    /// Norm of the stationarity system residual, including the unit-length constraints.
    pub fn residual(&self, r1: &BlochVector, r2: &BlochVector, g: &Matrix3<f64>) -> f64 {
        let z = Unknowns::from_column_slice(&[
            self.s1.x,
            self.s1.y,
            self.s1.z,
            self.s2.x,
            self.s2.y,
            self.s2.z,
            self.lambda1,
            self.lambda2,
        ]);
        residual(&r1.to_vector(), &r2.to_vector(), g, &z).norm()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LagrangeSystem {
    pub solutions: Vec<LagrangeSolution>,
}

impl LagrangeSystem {
    pub fn has_free_family(&self) -> bool {
        self.solutions.iter().any(|s| s.free_family)
    }

    pub fn best(&self) -> Option<&LagrangeSolution> {
        self.solutions.iter().max_by(|a, b| a.value.total_cmp(&b.value))
    }
}

const ACCEPT: f64 = 1e-11;

type Unknowns = SVector<f64, 8>;

fn residual(r1: &Vector3<f64>, r2: &Vector3<f64>, g: &Matrix3<f64>, z: &Unknowns) -> Unknowns {
    let s1 = Vector3::new(z[0], z[1], z[2]);
    let s2 = Vector3::new(z[3], z[4], z[5]);
    let e1 = r1 + g * s2 - s1 * z[6];
    let e2 = r2 + g.transpose() * s1 - s2 * z[7];
    Unknowns::from_column_slice(&[
        e1[0],
        e1[1],
        e1[2],
        e2[0],
        e2[1],
        e2[2],
        0.5 * (s1.norm_squared() - 1.0),
        0.5 * (s2.norm_squared() - 1.0),
    ])
}

fn jacobian(g: &Matrix3<f64>, z: &Unknowns) -> SMatrix<f64, 8, 8> {
    let mut j = SMatrix::<f64, 8, 8>::zeros();
    for a in 0..3 {
        j[(a, a)] = -z[6];
        j[(3 + a, 3 + a)] = -z[7];
        j[(a, 6)] = -z[a];
        j[(3 + a, 7)] = -z[3 + a];
        j[(6, a)] = z[a];
        j[(7, 3 + a)] = z[3 + a];
        for b in 0..3 {
            j[(a, 3 + b)] = g[(a, b)];
            j[(3 + a, b)] = g[(b, a)];
        }
    }
    j
}

fn levenberg_marquardt(r1: &Vector3<f64>, r2: &Vector3<f64>, g: &Matrix3<f64>, mut z: Unknowns) -> Option<Unknowns> {
    let mut f = residual(r1, r2, g, &z);
    let mut cost = f.norm_squared();
    let mut mu = 1e-3;
    for _ in 0..400 {
        if cost.sqrt() < 1e-14 {
            break;
        }
        let j = jacobian(g, &z);
        let jt = j.transpose();
        let jtj = jt * j;
        let grad = jt * f;
        let mut damped = jtj;
        for i in 0..8 {
            damped[(i, i)] += mu * (1.0 + jtj[(i, i)]);
        }
        let Some(step) = damped.lu().solve(&(-grad)) else {
            mu *= 10.0;
            continue;
        };
        let trial = z + step;
        let ft = residual(r1, r2, g, &trial);
        let ct = ft.norm_squared();
        if ct < cost {
            z = trial;
            f = ft;
            cost = ct;
            mu = (mu * 0.3).max(1e-15);
        } else {
            mu *= 10.0;
            if mu > 1e12 {
                break;
            }
        }
    }
    (cost.sqrt() < ACCEPT).then_some(z)
}

/// Newton on `(|s1|^2 - 1, |s2|^2 - 1)` with `s1`, `s2` obtained by inverting
/// `(l1 l2 - g g^T) s1 = l2 r1 + g r2`, `(l1 l2 - g^T g) s2 = l1 r2 + g^T r1`.
fn lambda_newton(r1: &Vector3<f64>, r2: &Vector3<f64>, g: &Matrix3<f64>, l: Vector2<f64>) -> Option<Unknowns> {
    let ggt = g * g.transpose();
    let gtg = g.transpose() * g;
    let vectors = |l: &Vector2<f64>| -> Option<(Vector3<f64>, Vector3<f64>)> {
        let p = l[0] * l[1];
        let a1 = Matrix3::identity() * p - ggt;
        let a2 = Matrix3::identity() * p - gtg;
        let s1 = a1.lu().solve(&(r1 * l[1] + g * r2))?;
        let s2 = a2.lu().solve(&(r2 * l[0] + g.transpose() * r1))?;
        Some((s1, s2))
    };
    let eval =
        |l: &Vector2<f64>| vectors(l).map(|(s1, s2)| Vector2::new(s1.norm_squared() - 1.0, s2.norm_squared() - 1.0));
    let mut l = l;
    for _ in 0..60 {
        let f = eval(&l)?;
        if f.norm() < 1e-14 {
            break;
        }
        let h = 1e-7 * (1.0 + l.norm());
        let fx = eval(&(l + Vector2::new(h, 0.0)))?;
        let fy = eval(&(l + Vector2::new(0.0, h)))?;
        let jac = Matrix2::from_columns(&[(fx - f) / h, (fy - f) / h]);
        let step = jac.lu().solve(&(-f))?;
        l += step;
        if !l.iter().all(|x| x.is_finite()) {
            return None;
        }
    }
    let (s1, s2) = vectors(&l)?;
    let z = Unknowns::from_column_slice(&[s1[0], s1[1], s1[2], s2[0], s2[1], s2[2], l[0], l[1]]);
    Some(z)
}

fn finish(r1: &Vector3<f64>, r2: &Vector3<f64>, g: &Matrix3<f64>, z: &Unknowns) -> Option<LagrangeSolution> {
    let s1 = Vector3::new(z[0], z[1], z[2]);
    let s2 = Vector3::new(z[3], z[4], z[5]);
    if (s1.norm() - 1.0).abs() > 1e-10 || (s2.norm() - 1.0).abs() > 1e-10 {
        return None;
    }
    if residual(r1, r2, g, z).norm() > 1e-10 {
        return None;
    }
    Some(LagrangeSolution::at(
        &BlochVector::from_vector(r1),
        &BlochVector::from_vector(r2),
        g,
        &BlochVector::from_vector(&s1),
        &BlochVector::from_vector(&s2),
    ))
}

fn same_point(a: &LagrangeSolution, b: &LagrangeSolution) -> bool {
    if (a.lambda1 - b.lambda1).abs() > 1e-7 || (a.lambda2 - b.lambda2).abs() > 1e-7 {
        return false;
    }
    if a.free_family && b.free_family {
        return (a.s1.z - b.s1.z).abs() < 1e-7 && (a.s2.z - b.s2.z).abs() < 1e-7;
    }
    (a.s1.to_vector() - b.s1.to_vector()).norm() < 1e-7 && (a.s2.to_vector() - b.s2.to_vector()).norm() < 1e-7
}

/// All real critical points of `s1.r1 + s2.r2 + s1^T g s2` with `|s1| = |s2| = 1`.
///
/// Regular solutions come from Newton iterations on the multiplier pair over a
/// grid; solutions with `det(l1 l2 I - g g^T) = 0` are reached by damped
/// least squares on the full system from a set of Bloch-direction starts.
/// Points on a continuous family are reported once per multiplier pair and
/// z-components.
pub fn solve_lagrange_general(r1: &BlochVector, r2: &BlochVector, g: &Matrix3<f64>) -> LagrangeSystem {
    let (r1, r2) = (r1.to_vector(), r2.to_vector());
    let bound = r1.norm() + r2.norm() + g.norm() + 1.0;
    let mut candidates = Vec::new();
    let steps = 24;
    for i in 0..=steps {
        for j in 0..=steps {
            let l = Vector2::new(
                -bound + 2.0 * bound * f64::from(i) / f64::from(steps),
                -bound + 2.0 * bound * f64::from(j) / f64::from(steps),
            );
            if let Some(z) = lambda_newton(&r1, &r2, g, l) {
                candidates.push(z);
            }
        }
    }
    let dirs = start_directions();
    for d1 in &dirs {
        for d2 in &dirs {
            let l1 = d1.dot(&(r1 + g * d2));
            let l2 = d2.dot(&(r2 + g.transpose() * d1));
            let z = Unknowns::from_column_slice(&[d1[0], d1[1], d1[2], d2[0], d2[1], d2[2], l1, l2]);
            if let Some(z) = levenberg_marquardt(&r1, &r2, g, z) {
                candidates.push(z);
            }
        }
    }
    let mut solutions: Vec<LagrangeSolution> = Vec::new();
    for z in candidates {
        let z =
            if residual(&r1, &r2, g, &z).norm() < 1e-13 { z } else { levenberg_marquardt(&r1, &r2, g, z).unwrap_or(z) };
        if let Some(s) = finish(&r1, &r2, g, &z) {
            if !solutions.iter().any(|t| same_point(t, &s)) {
                solutions.push(s);
            }
        }
    }
    solutions.sort_by(|a, b| b.value.total_cmp(&a.value));
    LagrangeSystem { solutions }
}

/// [`solve_lagrange_general`] with `r1`, `r2`, `g` read off a two-qubit density matrix.
pub fn solve_lagrange_from_reduced(rho_ab: &DensityMatrix) -> Result<LagrangeSystem> {
    let (r1, r2, g) = two_qubit_bloch_data(rho_ab)?;
    Ok(solve_lagrange_general(&r1, &r2, &g))
}
