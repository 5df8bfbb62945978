use qstate_core::Matrix3;

use crate::{GsdError, Result, SchmidtForm, ZERO_COEFFICIENT};

/// Tolerance of [`schmidt_inequality`].
const INEQUALITY_TOL: f64 = 1e-12;

/// `A = [[l0, -l3, -l2], [-l3, l0, -l1], [-l2, -l1, l0]]`; `-l0 A` bounds the second variation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SecondVariationMatrix {
    pub a: Matrix3<f64>,
}

impl SecondVariationMatrix {
    pub fn trace(&self) -> f64 {
        self.a.trace()
    }

    /// `(tr A)^2 - tr(A^2)`, twice the sum of principal 2x2 minors.
    pub fn minor_sum(&self) -> f64 {
        self.trace().powi(2) - (self.a * self.a).trace()
    }

    pub fn determinant(&self) -> f64 {
        self.a.determinant()
    }

    pub fn is_positive_semidefinite(&self, tol: f64) -> bool {
        self.trace() >= -tol && self.minor_sum() >= -tol && self.determinant() >= -tol
    }
}

pub fn second_variation_matrix(f: &SchmidtForm) -> SecondVariationMatrix {
    let (l0, l1, l2, l3) = (f.l0, f.l1, f.l2, f.l3);
    SecondVariationMatrix { a: Matrix3::new(l0, -l3, -l2, -l3, l0, -l1, -l2, -l1, l0) }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InequalityCheck {
    pub holds: bool,
    /// `l0^2 - (l1^2 + l2^2 + l3^2 + 2 l1 l2 l3 / l0)`.
    pub slack: f64,
}

/// `l0^2 >= l1^2 + l2^2 + l3^2 + 2 l1 l2 l3 / l0`, equivalent to `det A >= 0`.
pub fn schmidt_inequality(f: &SchmidtForm) -> Result<InequalityCheck> {
    if !(f.l0 > 0.0) {
        return Err(GsdError::Invalid("inequality needs l0 > 0".into()));
    }
    let slack = f.l0 * f.l0 - (f.l1 * f.l1 + f.l2 * f.l2 + f.l3 * f.l3 + 2.0 * f.l1 * f.l2 * f.l3 / f.l0);
    Ok(InequalityCheck { holds: slack >= -INEQUALITY_TOL, slack })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimpleBound {
    pub holds: bool,
    /// Competing stationary value `sqrt(l1^2 + l4^2)`.
    pub competitor: f64,
}

/// For `l2 = l3 = 0` and real `l4 >= 0`: the form is a GSD only if `l0^2 >= l1^2 + l4^2`.
pub fn simple_case_bound(f: &SchmidtForm) -> Result<SimpleBound> {
    if f.l2 > ZERO_COEFFICIENT || f.l3 > ZERO_COEFFICIENT {
        return Err(GsdError::Invalid("simple case needs l2 = l3 = 0".into()));
    }
    if f.l4.im.abs() > ZERO_COEFFICIENT || f.l4.re < -ZERO_COEFFICIENT {
        return Err(GsdError::Invalid("simple case needs real non-negative l4".into()));
    }
    let r_sq = f.l1 * f.l1 + f.l4.re * f.l4.re;
    Ok(SimpleBound { holds: f.l0 * f.l0 >= r_sq - INEQUALITY_TOL, competitor: r_sq.sqrt() })
}
