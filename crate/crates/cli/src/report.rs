use qstate_core::{ProductState, PureState};
use serde::Serialize;
use serde_json::Value;

use crate::methods::gsd_pattern;
use crate::registry::{Evaluation, Registry};
use crate::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodChoice {
    Auto,
    Analytic,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleSummary {
    pub lambda_sq: f64,
    pub converged: bool,
    pub residual: Option<f64>,
}

/// Value from a reading of the input that is not a certified closed form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Candidate {
    pub source: String,
    pub lambda_sq: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntanglementReport {
    pub n_qubits: usize,
    pub lambda: f64,
    pub lambda_sq: f64,
    /// `-ln(lambda_sq)`.
    pub entanglement: f64,
    pub region: String,
    pub method: String,
    /// Factors as `[[re, im], [re, im]]` amplitude pairs.
    pub nearest: Option<Vec<[[f64; 2]; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analytic_lambda_sq: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidate: Option<Candidate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn product_json(p: &ProductState) -> Vec<[[f64; 2]; 2]> {
    p.factors.iter().map(|q| [[q.alpha.re, q.alpha.im], [q.beta.re, q.beta.im]]).collect()
}

fn oracle_summary(e: &Evaluation) -> OracleSummary {
    OracleSummary { lambda_sq: e.lambda_sq, converged: e.converged, residual: e.residual }
}

fn base(psi: &PureState, e: &Evaluation, method: String) -> EntanglementReport {
    let lambda_sq = e.lambda_sq.min(1.0);
    let region = if lambda_sq >= 1.0 - 1e-12 { "product".to_string() } else { e.region.clone() };
    EntanglementReport {
        n_qubits: psi.n_qubits(),
        lambda: lambda_sq.sqrt(),
        lambda_sq,
        entanglement: 0.0 - lambda_sq.ln(),
        region,
        method,
        nearest: e.nearest.as_ref().map(product_json),
        analytic_lambda_sq: None,
        oracle: None,
        candidate: None,
        gap: None,
        note: None,
    }
}

fn unavailable(psi: &PureState) -> CliError {
    let detail = if psi.n_qubits() == 3 {
        match lu_invariants::classify_state(psi) {
            Ok((t, _, _)) => format!("no closed form applies to this {t} state; use --method oracle"),
            Err(e) => format!("no closed form applies ({e}); use --method oracle"),
        }
    } else {
        format!("no closed form applies to this {}-qubit state; use --method oracle", psi.n_qubits())
    };
    CliError::Unavailable(detail)
}

fn run_oracle(registry: &Registry, psi: &PureState) -> Result<Evaluation> {
    let oracle = registry.numeric().ok_or_else(|| CliError::Unavailable("no numeric method registered".into()))?;
    let e = oracle.evaluate(psi)?;
    if !e.converged {
        return Err(CliError::Convergence(format!(
            "oracle did not converge (best lambda^2 {:.12}, residual {:e})",
            e.lambda_sq,
            e.residual.unwrap_or(f64::NAN)
        )));
    }
    Ok(e)
}

/// Evaluates the state with the requested method choice.
pub fn compute(registry: &Registry, psi: &PureState, choice: MethodChoice) -> Result<EntanglementReport> {
    let analytic = registry.analytic_for(psi);
    match choice {
        MethodChoice::Analytic => {
            let m = analytic.ok_or_else(|| unavailable(psi))?;
            let e = m.evaluate(psi)?;
            Ok(base(psi, &e, format!("analytic({})", m.name())))
        }
        MethodChoice::Oracle => {
            let e = run_oracle(registry, psi)?;
            let mut r = base(psi, &e, "oracle".into());
            r.oracle = Some(oracle_summary(&e));
            Ok(r)
        }
        MethodChoice::Auto => match analytic {
            Some(m) => {
                let e = m.evaluate(psi)?;
                Ok(base(psi, &e, format!("analytic({})", m.name())))
            }
            None => {
                let e = run_oracle(registry, psi)?;
                let mut r = base(psi, &e, "oracle".into());
                r.oracle = Some(oracle_summary(&e));
                r.note = Some("no closed form applies; numeric maximum".into());
                Ok(r)
            }
        },
        MethodChoice::Both => {
            let o = run_oracle(registry, psi)?;
            let mut r = match analytic {
                Some(m) => {
                    let e = m.evaluate(psi)?;
                    let mut r = base(psi, &e, format!("analytic({})+oracle", m.name()));
                    r.analytic_lambda_sq = Some(e.lambda_sq);
                    r.gap = Some((e.lambda_sq - o.lambda_sq).abs());
                    r
                }
                None => {
                    let mut r = base(psi, &o, "oracle".into());
                    match gsd_pattern(psi) {
                        Some((l0, ..)) => {
                            r.candidate = Some(Candidate { source: "gsd-form".into(), lambda_sq: l0 * l0 });
                            r.gap = Some((l0 * l0 - o.lambda_sq).abs());
                            r.note = Some(
                                "no closed form applies; gap is against the leading coefficient of the input form"
                                    .into(),
                            );
                        }
                        None => r.note = Some("no closed form applies; oracle value only".into()),
                    }
                    r
                }
            };
            r.oracle = Some(oracle_summary(&o));
            Ok(r)
        }
    }
}

/// Serializes a report as pretty JSON or as `key: value` lines.
pub fn render<T: Serialize>(value: &T, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => Ok(serde_json::to_string_pretty(value)? + "\n"),
        OutputFormat::Text => {
            let mut out = String::new();
            flatten("", &serde_json::to_value(value)?, &mut out);
            Ok(out)
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, item, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), item, out);
            }
        }
        Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
        other => out.push_str(&format!("{prefix}: {other}\n")),
    }
}
