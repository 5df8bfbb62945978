use qstate_core::{PureState, StateError};
use variational::{oracle_lambda_max, OracleConfig};

use crate::{schmidt_inequality, second_variation_matrix, GsdError, Result, SchmidtForm, RECONSTRUCTION_TOL};

/// Agreement between `l0` and the oracle required for certification.
pub const ORACLE_MATCH: f64 = 1e-6;
const CONDITION_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    Trace,
    MinorSum,
    Determinant,
    Dominant,
    SchmidtInequality,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Trace => "trace(A) >= 0",
            Self::MinorSum => "tr(A)^2 - tr(A^2) >= 0",
            Self::Determinant => "det(A) >= 0",
            Self::Dominant => "l0 >= |l4|",
            Self::SchmidtInequality => "l0^2 >= l1^2 + l2^2 + l3^2 + 2 l1 l2 l3 / l0",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictLabel {
    CertifiedMaximum,
    NecessaryConditionsFailed,
    /// Necessary conditions hold but `l0` is not the oracle's maximum.
    RejectedByOracle,
    /// The oracle did not converge.
    Inconclusive,
}

impl VerdictLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::CertifiedMaximum => "certified-maximum",
            Self::NecessaryConditionsFailed => "necessary-conditions-failed",
            Self::RejectedByOracle => "rejected-by-oracle",
            Self::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GsdVerdict {
    pub label: VerdictLabel,
    pub failed: Vec<Condition>,
    pub oracle_lambda: Option<f64>,
    /// `Lambda_oracle - l0`.
    pub oracle_gap: Option<f64>,
}

/// Checks the second-variation conditions, `l0 >= |l4|` and the Schmidt
/// inequality, then compares `l0` with the oracle. Positivity is only necessary.
pub fn validate_gsd(psi: &PureState, f: &SchmidtForm, config: &OracleConfig) -> Result<GsdVerdict> {
    if psi.n_qubits() != 3 {
        return Err(StateError::QubitCount { expected: 3, got: psi.n_qubits() }.into());
    }
    let err = f.reconstruction_error(psi);
    if !(err <= RECONSTRUCTION_TOL) {
        return Err(GsdError::Reconstruction(err));
    }
    let a = second_variation_matrix(f);
    let mut failed = Vec::new();
    if a.trace() < -CONDITION_TOL {
        failed.push(Condition::Trace);
    }
    if a.minor_sum() < -CONDITION_TOL {
        failed.push(Condition::MinorSum);
    }
    if a.determinant() < -CONDITION_TOL {
        failed.push(Condition::Determinant);
    }
    if !f.is_dominant(CONDITION_TOL) {
        failed.push(Condition::Dominant);
    }
    if schmidt_inequality(f).map_or(true, |c| c.slack < -CONDITION_TOL) {
        failed.push(Condition::SchmidtInequality);
    }
    if !failed.is_empty() {
        return Ok(GsdVerdict {
            label: VerdictLabel::NecessaryConditionsFailed,
            failed,
            oracle_lambda: None,
            oracle_gap: None,
        });
    }
    let best = oracle_lambda_max(psi, config)?;
    let gap = best.lambda - f.l0;
    let label = if !best.converged {
        VerdictLabel::Inconclusive
    } else if gap.abs() < ORACLE_MATCH {
        VerdictLabel::CertifiedMaximum
    } else {
        VerdictLabel::RejectedByOracle
    };
    Ok(GsdVerdict { label, failed, oracle_lambda: Some(best.lambda), oracle_gap: Some(gap) })
}
