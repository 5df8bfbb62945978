use qstate_core::{ProductState, Qubit};
use three_qubit_analytic::WType3;

use crate::{gsd_from_stationary, Result, SchmidtForm, ZERO_COEFFICIENT};

/// Triangle quantities within this distance of zero mark the boundary of the special solution.
const BOUNDARY_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalForm {
    /// 1, 2, 3 for the single-excitation solutions, 4 for the special one.
    pub solution: usize,
    pub stationary: ProductState,
    pub form: SchmidtForm,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WTypeForms {
    pub forms: Vec<CanonicalForm>,
    /// Index into `forms` of the generalized Schmidt decomposition.
    pub true_gsd: usize,
    /// Some `r_a r_b r_c` or the triangle area vanishes.
    pub boundary: bool,
}

impl WTypeForms {
    pub fn gsd(&self) -> &CanonicalForm {
        &self.forms[self.true_gsd]
    }
}

/// Canonical forms of `a|100> + b|010> + c|001>` from the stationary points of the overlap.
///
/// With `r_a = b^2 + c^2 - a^2` (and cyclic) and triangle area `S`, the special
/// solution exists when all `r >= 0` and `S > 0`. The GSD is solution 1 if
/// `r_a < 0`, 2 if `r_b < 0`, 3 if `r_c < 0`, and the special solution otherwise.
/// A zero coefficient has no single-excitation form.
pub fn wtype_canonical_forms(s: &WType3) -> Result<WTypeForms> {
    let psi = s.to_state();
    let (a, b, c) = (s.a, s.b, s.c);
    let (a2, b2, c2) = (a * a, b * b, c * c);
    let r = [b2 + c2 - a2, a2 + c2 - b2, a2 + b2 - c2];
    let area_sq16 = r[0] * r[1] + r[1] * r[2] + r[2] * r[0];
    let mut forms = Vec::with_capacity(4);
    for (k, coef) in [a, b, c].into_iter().enumerate() {
        if coef <= ZERO_COEFFICIENT {
            continue;
        }
        let stationary = ProductState::basis(3, 1 << (2 - k));
        forms.push(CanonicalForm { solution: k + 1, form: gsd_from_stationary(&psi, &stationary)?, stationary });
    }
    let triangle = r.iter().all(|x| *x >= -BOUNDARY_TOL) && area_sq16 > BOUNDARY_TOL;
    let boundary = r.iter().any(|x| x.abs() <= BOUNDARY_TOL) || area_sq16 <= BOUNDARY_TOL;
    if triangle {
        let s4 = area_sq16.sqrt();
        let rc = r.map(|x| if x <= BOUNDARY_TOL { 0.0 } else { x });
        let factor =
            |coef: f64, own: f64, p: f64, q: f64| Qubit::from_real(coef * (2.0 * own).sqrt() / s4, (p * q).sqrt() / s4);
        let stationary = ProductState::new(vec![
            factor(a, rc[0], rc[1], rc[2])?,
            factor(b, rc[1], rc[0], rc[2])?,
            factor(c, rc[2], rc[0], rc[1])?,
        ])?;
        forms.push(CanonicalForm { solution: 4, form: gsd_from_stationary(&psi, &stationary)?, stationary });
    }
    let wanted = if r[0] < -BOUNDARY_TOL {
        1
    } else if r[1] < -BOUNDARY_TOL {
        2
    } else if r[2] < -BOUNDARY_TOL {
        3
    } else {
        4
    };
    let true_gsd = match forms.iter().position(|f| f.solution == wanted) {
        Some(i) => i,
        None => (0..forms.len()).fold(0, |best, i| if forms[i].form.l0 > forms[best].form.l0 { i } else { best }),
    };
    Ok(WTypeForms { forms, true_gsd, boundary })
}
