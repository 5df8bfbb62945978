use lu_invariants::{
    classify_state, fit_invariants, hyperdeterminant, pmax_by_type, two_qubit_invariant, two_qubit_pmax, LuInvariants,
    TwoQubitInvariant,
};
use qstate_core::PureState;
use serde::Serialize;
use three_qubit_analytic::{lambda_sq_fourterm, lambda_sq_wtype, FourTerm, WType3};
use w_duality::{lambda_max_w, RegionLabel, WOverlapSummary};

use crate::methods::detect_w;
use crate::registry::{Registry, DETECT_TOL};
use crate::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WClassification {
    pub coefficients: Vec<f64>,
    #[serde(flatten)]
    pub overlap: WOverlapSummary,
    pub r_sq: Option<f64>,
    pub shared: bool,
    pub first_boundary: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThreeQubitClassification {
    pub state_type: String,
    pub invariants: LuInvariants,
    pub closed_form_lambda_sq: Option<f64>,
    pub wtype_region: Option<String>,
    pub fourterm_region: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassifyReport {
    pub n_qubits: usize,
    /// Analytic families containing the state, in dispatch order.
    pub families: Vec<&'static str>,
    pub region: String,
    pub lambda_sq: Option<f64>,
    pub w: Option<WClassification>,
    pub three_qubit: Option<ThreeQubitClassification>,
}

pub fn classify(registry: &Registry, psi: &PureState) -> Result<ClassifyReport> {
    let families = registry.matching(psi);
    let (region, lambda_sq) = match registry.analytic_for(psi) {
        Some(m) => {
            let e = m.evaluate(psi)?;
            (e.region, Some(e.lambda_sq))
        }
        None => ("no-closed-form".to_string(), None),
    };
    let w = match detect_w(psi) {
        Some(state) => {
            let o = lambda_max_w(&state).map_err(|e| CliError::Input(e.to_string()))?;
            let d = o.diameter.as_ref();
            Some(WClassification {
                coefficients: state.coefficients().to_vec(),
                r_sq: d.as_ref().map(|d| d.r * d.r).filter(|r| r.is_finite()),
                shared: o.region.label == RegionLabel::BoundaryShared,
                first_boundary: o.region.label == RegionLabel::BoundaryFirst,
                overlap: WOverlapSummary::from(&o),
            })
        }
        None => None,
    };
    let three_qubit = if psi.n_qubits() == 3 {
        let (t, ji, _) = classify_state(psi).map_err(|e| CliError::Input(e.to_string()))?;
        Some(ThreeQubitClassification {
            state_type: t.as_str().to_string(),
            invariants: ji,
            closed_form_lambda_sq: pmax_by_type(t, &ji).value(),
            wtype_region: WType3::detect(psi, DETECT_TOL).map(|s| lambda_sq_wtype(&s).1.as_str().to_string()),
            fourterm_region: FourTerm::detect(psi, DETECT_TOL).map(|s| lambda_sq_fourterm(&s).1.as_str().to_string()),
        })
    } else {
        None
    };
    Ok(ClassifyReport { n_qubits: psi.n_qubits(), families, region, lambda_sq, w, three_qubit })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum InvariantsReport {
    Three {
        n_qubits: usize,
        invariants: LuInvariants,
        fit_residual: f64,
        hyperdeterminant_abs: f64,
        state_type: String,
        closed_form_lambda_sq: Option<f64>,
    },
    Two {
        n_qubits: usize,
        #[serde(flatten)]
        invariant: TwoQubitInvariant,
        lambda_sq: f64,
    },
}

pub fn invariants(psi: &PureState) -> Result<InvariantsReport> {
    let lu = |e: lu_invariants::LuError| CliError::Input(e.to_string());
    match psi.n_qubits() {
        3 => {
            let fit = fit_invariants(psi).map_err(lu)?;
            let (t, ji, _) = classify_state(psi).map_err(lu)?;
            Ok(InvariantsReport::Three {
                n_qubits: 3,
                invariants: ji,
                fit_residual: fit.residual,
                hyperdeterminant_abs: hyperdeterminant(psi).map_err(lu)?.norm(),
                state_type: t.as_str().to_string(),
                closed_form_lambda_sq: pmax_by_type(t, &ji).value(),
            })
        }
        2 => Ok(InvariantsReport::Two {
            n_qubits: 2,
            invariant: two_qubit_invariant(psi).map_err(lu)?,
            lambda_sq: two_qubit_pmax(psi).map_err(lu)?,
        }),
        n => Err(CliError::Input(format!("invariants are defined here for 2 or 3 qubits, got {n}"))),
    }
}
