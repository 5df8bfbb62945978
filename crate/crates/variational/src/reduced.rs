use nalgebra::{Matrix3, Vector3};
use qstate_core::{two_qubit_bloch_data, BlochVector, DensityMatrix};

use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReducedMaximum {
    pub pmax: f64,
    pub s1: BlochVector,
    pub s2: BlochVector,
}

/// `(1 + s1.r1 + s2.r2 + s1^T g s2) / 4`.
pub fn bloch_objective(
    r1: &Vector3<f64>,
    r2: &Vector3<f64>,
    g: &Matrix3<f64>,
    s1: &Vector3<f64>,
    s2: &Vector3<f64>,
) -> f64 {
    (1.0 + s1.dot(r1) + s2.dot(r2) + s1.dot(&(g * s2))) / 4.0
}

pub(crate) fn start_directions() -> Vec<Vector3<f64>> {
    let mut dirs = Vec::with_capacity(26);
    for x in -1..=1 {
        for y in -1..=1 {
            for z in -1..=1 {
                if (x, y, z) != (0, 0, 0) {
                    dirs.push(Vector3::new(f64::from(x), f64::from(y), f64::from(z)).normalize());
                }
            }
        }
    }
    dirs
}

fn unit_or(v: Vector3<f64>, fallback: Vector3<f64>) -> Vector3<f64> {
    let n = v.norm();
    if n < 1e-14 {
        fallback
    } else {
        v / n
    }
}

/// Alternating maximization over unit `s1`, `s2` from a fixed set of start directions.
pub fn maximize_reduced(r1: &Vector3<f64>, r2: &Vector3<f64>, g: &Matrix3<f64>) -> ReducedMaximum {
    let mut best: Option<(f64, Vector3<f64>, Vector3<f64>)> = None;
    for start in start_directions() {
        let mut s2 = start;
        let mut s1 = unit_or(r1 + g * s2, start);
        let mut value = bloch_objective(r1, r2, g, &s1, &s2);
        for _ in 0..20_000 {
            let n2 = unit_or(r2 + g.transpose() * s1, s2);
            let n1 = unit_or(r1 + g * n2, s1);
            let v = bloch_objective(r1, r2, g, &n1, &n2);
            let moved = (n1 - s1).norm().max((n2 - s2).norm());
            s1 = n1;
            s2 = n2;
            let gain = v - value;
            value = v;
            if gain.abs() < 1e-16 && moved < 1e-12 {
                break;
            }
        }
        if best.as_ref().is_none_or(|b| value > b.0) {
            best = Some((value, s1, s2));
        }
    }
    let (pmax, s1, s2) = best.expect("start set is non-empty");
    ReducedMaximum { pmax, s1: BlochVector::from_vector(&s1), s2: BlochVector::from_vector(&s2) }
}

/// `max (1 + s1.r1 + s2.r2 + g_ij s1_i s2_j) / 4` over unit Bloch vectors.
pub fn pmax_from_reduced(rho_ab: &DensityMatrix) -> Result<f64> {
    let (r1, r2, g) = two_qubit_bloch_data(rho_ab)?;
    Ok(maximize_reduced(&r1.to_vector(), &r2.to_vector(), &g).pmax)
}
