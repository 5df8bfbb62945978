use qstate_core::AcinParams;

use crate::{invariants_from_acin, LuInvariants};

const COEF_EPS: f64 = 1e-12;
const ROOT_EPS: f64 = 1e-10;
/// Relative discriminant below which the two roots are merged.
const DOUBLE_ROOT: f64 = 1e-12;
/// Squared coefficients below this are treated as numerical noise when rebuilding a standard form.
const SNAP: f64 = crate::STATE_TOL;
const MATCH: f64 = 1e-8;
const ZERO_J: f64 = 1e-12;

/// Positive roots `x = l0^2` of `(J1+J4)x^2 - (J5+J4)x + (J2J3 + J2J4 + J3J4 + J4^2) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Lambda0Roots {
    /// Roots in `(0, 1]`, ascending; a double root appears once.
    pub roots: Vec<f64>,
    /// All three coefficients vanish, so `l0` is not fixed by the invariants.
    pub degenerate: bool,
}

pub fn lambda0_candidates(ji: &LuInvariants) -> Lambda0Roots {
    let LuInvariants { j1, j2, j3, j4, j5 } = *ji;
    let qa = j1 + j4;
    let qb = -(j5 + j4);
    let qc = j2 * j3 + j2 * j4 + j3 * j4 + j4 * j4;
    let mut roots = Vec::new();
    if qa.abs() <= COEF_EPS {
        if qb.abs() <= COEF_EPS {
            return Lambda0Roots { roots, degenerate: qc.abs() <= COEF_EPS };
        }
        roots.push(-qc / qb);
    } else {
        let disc = qb * qb - 4.0 * qa * qc;
        let scale = (qb * qb + (4.0 * qa * qc).abs()).max(COEF_EPS);
        if disc >= -DOUBLE_ROOT * scale {
            let s = disc.max(0.0).sqrt();
            if disc <= DOUBLE_ROOT * scale {
                roots.push(-qb / (2.0 * qa));
            } else {
                // Stable quadratic roots.
                let t = -0.5 * (qb + qb.signum() * s);
                roots.push(t / qa);
                if t != 0.0 {
                    roots.push(qc / t);
                }
            }
        }
    }
    roots.retain(|x| *x > ROOT_EPS && *x <= 1.0 + ROOT_EPS);
    for x in &mut roots {
        *x = x.min(1.0);
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() <= ROOT_EPS);
    Lambda0Roots { roots, degenerate: false }
}

/// Standard forms reproducing `ji`, one per admissible root of the `l0` equation.
///
/// When `J2 = J3 = J4 = J5 = 0` the state is `|1> (x) |BC>` up to local unitaries and
/// a representative with `l0 = 0` is returned.
pub fn acin_from_invariants(ji: &LuInvariants) -> Vec<AcinParams> {
    let LuInvariants { j1, j2, j3, j4, j5 } = *ji;
    if [j2, j3, j4, j5].iter().all(|j| j.abs() <= ZERO_J) {
        let s = (1.0 - 4.0 * j1.max(0.0)).max(0.0).sqrt();
        let l1 = ((1.0 + s) / 2.0).sqrt();
        let l4 = ((1.0 - s) / 2.0).max(0.0).sqrt();
        return AcinParams::new([0.0, l1, 0.0, 0.0, l4], 0.0).into_iter().collect();
    }
    let mut out = Vec::new();
    for x in lambda0_candidates(ji).roots {
        let snap = |v: f64| if v.abs() <= SNAP { 0.0 } else { v };
        let l2s = snap(j2 / x);
        let l3s = snap(j3 / x);
        let l4s = snap(j4 / x);
        let l1s = snap(1.0 - x - l2s - l3s - l4s);
        if [l1s, l2s, l3s, l4s].iter().any(|v| *v < 0.0) {
            continue;
        }
        let [l0, l1, l2, l3, l4] = [x, l1s, l2s, l3s, l4s].map(f64::sqrt);
        let den = 2.0 * l1 * l2 * l3 * l4;
        let phi = if den > SNAP {
            let c = (l1s * l4s + l2s * l3s - j1) / den;
            if c.abs() > 1.0 + 1e-6 {
                continue;
            }
            c.clamp(-1.0, 1.0).acos()
        } else {
            0.0
        };
        let norm = (x + l1s + l2s + l3s + l4s).sqrt();
        let lambda = [l0, l1, l2, l3, l4].map(|l| l / norm);
        let Ok(p) = AcinParams::new(lambda, phi) else {
            continue;
        };
        if invariants_from_acin(&p).max_abs_diff(ji) <= MATCH {
            out.push(p);
        }
    }
    out
}
