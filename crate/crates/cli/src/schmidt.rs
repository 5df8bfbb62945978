use qstate_core::PureState;
use schmidt_gsd::{
    gsd_from_stationary, schmidt_inequality, second_variation_matrix, validate_gsd, wtype_canonical_forms, SchmidtForm,
};
use serde::Serialize;
use three_qubit_analytic::WType3;
use variational::{oracle_lambda_max, OracleConfig};

use crate::methods::gsd_pattern;
use crate::registry::DETECT_TOL;
use crate::report::{product_json, OracleSummary};
use crate::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FormReport {
    pub label: String,
    /// `l0..l4` as `[re, im]`.
    pub coefficients: [[f64; 2]; 5],
    pub nearest: Vec<[[f64; 2]; 2]>,
    pub trace: f64,
    pub minor_sum: f64,
    pub determinant: f64,
    pub inequality_holds: bool,
    pub inequality_slack: f64,
    pub verdict: String,
    pub failed: Vec<String>,
    pub oracle_lambda: Option<f64>,
    pub oracle_gap: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SchmidtReport {
    pub source: String,
    pub forms: Vec<FormReport>,
    /// Index into `forms` of the decomposition at the maximum.
    pub gsd: Option<usize>,
    pub input_form: Option<FormReport>,
    pub verdict: String,
    pub oracle: Option<OracleSummary>,
    pub complete: bool,
    pub diagnostics: Vec<String>,
}

fn form_report(psi: &PureState, label: String, f: &SchmidtForm, config: &OracleConfig) -> Result<FormReport> {
    let gsd = |e: schmidt_gsd::GsdError| CliError::Input(e.to_string());
    let a = second_variation_matrix(f);
    let ineq = schmidt_inequality(f).map_err(gsd)?;
    let v = validate_gsd(psi, f, config).map_err(gsd)?;
    Ok(FormReport {
        label,
        coefficients: f.coefficients().map(|z| [z.re, z.im]),
        nearest: product_json(&f.nearest_product()),
        trace: a.trace(),
        minor_sum: a.minor_sum(),
        determinant: a.determinant(),
        inequality_holds: ineq.holds,
        inequality_slack: ineq.slack,
        verdict: v.label.as_str().to_string(),
        failed: v.failed.iter().map(|c| c.as_str().to_string()).collect(),
        oracle_lambda: v.oracle_lambda,
        oracle_gap: v.oracle_gap,
    })
}

/// Generalized Schmidt decomposition of a three-qubit state with its checks.
pub fn schmidt(psi: &PureState, config: &OracleConfig) -> Result<SchmidtReport> {
    if psi.n_qubits() != 3 {
        return Err(CliError::Input(format!("the five-term decomposition needs 3 qubits, got {}", psi.n_qubits())));
    }
    let input_form = match gsd_pattern(psi) {
        Some((l0, l1, l2, l3, l4)) => match SchmidtForm::computational(l0, l1, l2, l3, l4) {
            Ok(f) => Some(form_report(psi, "input".into(), &f, config)?),
            Err(_) => None,
        },
        None => None,
    };
    if let Some(s) = WType3::detect(psi, DETECT_TOL) {
        let all = wtype_canonical_forms(&s).map_err(|e| CliError::Input(e.to_string()))?;
        let mut forms = Vec::with_capacity(all.forms.len());
        for c in &all.forms {
            forms.push(form_report(psi, format!("solution-{}", c.solution), &c.form, config)?);
        }
        let verdict = forms[all.true_gsd].verdict.clone();
        let mut diagnostics = Vec::new();
        if all.boundary {
            diagnostics.push("state lies on a region boundary; several forms share the maximum".into());
        }
        return Ok(SchmidtReport {
            source: "wtype-canonical".into(),
            forms,
            gsd: Some(all.true_gsd),
            input_form,
            verdict,
            oracle: None,
            complete: true,
            diagnostics,
        });
    }
    let best = oracle_lambda_max(psi, config).map_err(|e| CliError::Input(e.to_string()))?;
    let oracle = Some(OracleSummary {
        lambda_sq: best.lambda * best.lambda,
        converged: best.converged,
        residual: Some(best.residual),
    });
    let partial = |diagnostic: String, input_form: Option<FormReport>| SchmidtReport {
        source: "oracle-stationary".into(),
        forms: Vec::new(),
        gsd: None,
        input_form,
        verdict: "inconclusive".into(),
        oracle: oracle.clone(),
        complete: false,
        diagnostics: vec![diagnostic],
    };
    if !best.converged {
        return Ok(partial(
            format!("oracle did not converge: lambda {:.12}, residual {:e}", best.lambda, best.residual),
            input_form,
        ));
    }
    let f = match gsd_from_stationary(psi, &best.product) {
        Ok(f) => f,
        Err(e) => return Ok(partial(format!("no decomposition at the oracle point: {e}"), input_form)),
    };
    let report = form_report(psi, "oracle".into(), &f, config)?;
    Ok(SchmidtReport {
        source: "oracle-stationary".into(),
        verdict: report.verdict.clone(),
        forms: vec![report],
        gsd: Some(0),
        input_form,
        oracle,
        complete: true,
        diagnostics: Vec::new(),
    })
}
