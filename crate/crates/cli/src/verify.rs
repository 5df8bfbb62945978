use qstate_core::{PureState, C64};
use schmidt_gsd::{validate_gsd, wtype_canonical_forms, SchmidtForm, VerdictLabel};
use serde::Serialize;
use three_qubit_analytic::{lambda_sq_fourterm, FourTerm, WType3};
use variational::OracleConfig;

use crate::registry::Registry;
use crate::report::{compute, MethodChoice};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

fn close(name: &str, got: f64, want: f64, tol: f64) -> Check {
    Check {
        name: name.to_string(),
        passed: (got - want).abs() <= tol,
        detail: format!("got {got:.15}, expected {want:.15}, tolerance {tol:e}"),
    }
}

fn lambda_sq(registry: &Registry, psi: &PureState, choice: MethodChoice) -> Result<f64> {
    Ok(compute(registry, psi, choice)?.lambda_sq)
}

/// Known closed-form values checked against the analytic paths and the oracle.
pub fn verify(config: &OracleConfig) -> Result<VerifyReport> {
    let registry = Registry::standard(*config);
    let mut checks = Vec::new();
    let w = PureState::w(3)?;
    checks.push(close("w3 analytic", lambda_sq(&registry, &w, MethodChoice::Analytic)?, 4.0 / 9.0, 1e-12));
    checks.push(close("w3 oracle", lambda_sq(&registry, &w, MethodChoice::Oracle)?, 4.0 / 9.0, 1e-8));
    let ghz = PureState::ghz(3)?;
    checks.push(close("ghz analytic", lambda_sq(&registry, &ghz, MethodChoice::Analytic)?, 0.5, 1e-12));
    checks.push(close("ghz oracle", lambda_sq(&registry, &ghz, MethodChoice::Oracle)?, 0.5, 1e-8));
    checks.push(close("product", lambda_sq(&registry, &PureState::basis(3, 0)?, MethodChoice::Auto)?, 1.0, 1e-12));
    let w5 = PureState::w(5)?;
    checks.push(close("w5 analytic", lambda_sq(&registry, &w5, MethodChoice::Analytic)?, (0.8f64).powi(4), 1e-12));

    let a = (1.0f64 / 3.0).sqrt();
    let anchors = [
        ("fourterm d=0", FourTerm::new(a, a, a, 0.0), 4.0 / 9.0),
        ("fourterm a=d", FourTerm::new(0.5, 0.5, 0.5, 0.5), 0.5),
        (
            "fourterm d^2=4/7",
            FourTerm::new((1.0f64 / 7.0).sqrt(), (1.0f64 / 7.0).sqrt(), (1.0f64 / 7.0).sqrt(), (4.0f64 / 7.0).sqrt()),
            4.0 / 7.0,
        ),
    ];
    for (name, s, want) in anchors {
        let s = s.map_err(|e| crate::CliError::Input(e.to_string()))?;
        checks.push(close(name, lambda_sq_fourterm(&s).0, want, 1e-10));
    }

    let forms = WType3::new(a, a, a).map(|s| wtype_canonical_forms(&s));
    match forms {
        Ok(Ok(f)) => {
            let g = &f.gsd().form;
            let [l0, l1, _, _, l4] = g.coefficients();
            let dev = (l0.re - 2.0 * l1.re).abs().max((l0.re - 2f64.sqrt() * l4.norm()).abs());
            checks.push(Check {
                name: "w3 saturated decomposition".into(),
                passed: dev <= 1e-10,
                detail: format!("max deviation {dev:e}"),
            });
        }
        _ => checks.push(Check {
            name: "w3 saturated decomposition".into(),
            passed: false,
            detail: "no canonical form".into(),
        }),
    }

    let l4 = C64::new(2.0 / 11f64.sqrt(), 0.0);
    let form =
        SchmidtForm::computational(2.0 / 11f64.sqrt(), 1.0 / 11f64.sqrt(), 1.0 / 11f64.sqrt(), 1.0 / 11f64.sqrt(), l4);
    let check = match form {
        Ok(f) => match validate_gsd(&f.to_state(), &f, config) {
            Ok(v) => Check {
                name: "saturated non-maximal form rejected".into(),
                passed: v.label == VerdictLabel::RejectedByOracle,
                detail: format!("verdict {}, oracle lambda {:?}", v.label.as_str(), v.oracle_lambda),
            },
            Err(e) => {
                Check { name: "saturated non-maximal form rejected".into(), passed: false, detail: e.to_string() }
            }
        },
        Err(e) => Check { name: "saturated non-maximal form rejected".into(), passed: false, detail: e.to_string() },
    };
    checks.push(check);

    let passed = checks.iter().filter(|c| c.passed).count();
    let failed = checks.len() - passed;
    Ok(VerifyReport { checks, passed, failed })
}
