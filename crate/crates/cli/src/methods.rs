use lu_invariants::{classify_state, pmax_by_type, two_qubit_pmax};
use qstate_core::{product_overlap, ProductState, PureState, Qubit, C64};
use schmidt_gsd::wtype_canonical_forms;
use three_qubit_analytic::{
    fourterm_bloch_solution, lambda_sq_fourterm, lambda_sq_symmetric, lambda_sq_wtype, product_from_bloch_pair,
    symmetric_nearest_product, FourTerm, SymState, WType3,
};
use variational::{oracle_lambda_max, OracleConfig};
use w_duality::{lambda_max_w, WStateN};

use crate::registry::{Evaluation, LambdaMaxMethod, DETECT_TOL};
use crate::{CliError, Result};

const NEAREST_CHECK: f64 = 1e-8;

/// Region label shared by families without a finer partition.
pub fn entanglement_class(lambda_sq: f64) -> &'static str {
    if lambda_sq >= 1.0 - 1e-12 {
        "product"
    } else if (lambda_sq - 0.5).abs() <= 1e-10 {
        "shared"
    } else if lambda_sq > 0.5 {
        "slightly-entangled"
    } else {
        "highly-entangled"
    }
}

/// Keeps a product only if its overlap reproduces the value.
fn checked(psi: &PureState, lambda_sq: f64, p: Option<ProductState>) -> Option<ProductState> {
    p.filter(|p| product_overlap(psi, p).map(|o| (o * o - lambda_sq).abs() < NEAREST_CHECK).unwrap_or(false))
}

fn analytic(psi: &PureState, lambda_sq: f64, region: &str, nearest: Option<ProductState>) -> Evaluation {
    Evaluation {
        lambda_sq,
        region: region.to_string(),
        nearest: checked(psi, lambda_sq, nearest),
        converged: true,
        residual: None,
    }
}

pub struct WType3Method;

impl LambdaMaxMethod for WType3Method {
    fn name(&self) -> &'static str {
        "wtype"
    }

    fn detect(&self, psi: &PureState) -> bool {
        WType3::detect(psi, DETECT_TOL).is_some()
    }

    fn evaluate(&self, psi: &PureState) -> Result<Evaluation> {
        let s = WType3::detect(psi, DETECT_TOL).ok_or_else(|| CliError::Unavailable("not a W-type state".into()))?;
        let (l2, label) = lambda_sq_wtype(&s);
        let nearest = wtype_canonical_forms(&s).ok().map(|f| f.gsd().form.nearest_product());
        Ok(analytic(psi, l2, label.as_str(), nearest))
    }
}

pub struct SymmetricMethod;

impl LambdaMaxMethod for SymmetricMethod {
    fn name(&self) -> &'static str {
        "symmetric"
    }

    fn detect(&self, psi: &PureState) -> bool {
        SymState::detect(psi, DETECT_TOL).is_some()
    }

    fn evaluate(&self, psi: &PureState) -> Result<Evaluation> {
        let s = SymState::detect(psi, DETECT_TOL)
            .ok_or_else(|| CliError::Unavailable("not in the symmetric family".into()))?;
        let l2 = lambda_sq_symmetric(&s);
        Ok(analytic(psi, l2, entanglement_class(l2), Some(symmetric_nearest_product(&s))))
    }
}

pub struct FourTermMethod;

impl LambdaMaxMethod for FourTermMethod {
    fn name(&self) -> &'static str {
        "fourterm"
    }

    fn detect(&self, psi: &PureState) -> bool {
        FourTerm::detect(psi, DETECT_TOL).is_some()
    }

    fn evaluate(&self, psi: &PureState) -> Result<Evaluation> {
        let s = FourTerm::detect(psi, DETECT_TOL)
            .ok_or_else(|| CliError::Unavailable("not in the four-term family".into()))?;
        let (l2, label) = lambda_sq_fourterm(&s);
        let nearest =
            fourterm_bloch_solution(&s).ok().and_then(|sol| product_from_bloch_pair(psi, &sol.s1, &sol.s2).ok());
        Ok(analytic(psi, l2, label.as_str(), nearest))
    }
}

/// Real non-negative amplitudes supported on single-excitation kets.
pub fn detect_w(psi: &PureState) -> Option<WStateN> {
    let n = psi.n_qubits();
    if n < 3 {
        return None;
    }
    let kets: Vec<usize> = (0..n).map(|k| 1 << (n - 1 - k)).collect();
    if psi.support(DETECT_TOL).iter().any(|i| !kets.contains(i)) {
        return None;
    }
    let mut c = Vec::with_capacity(n);
    for &i in &kets {
        let z = psi.amplitude(i);
        if z.norm() < DETECT_TOL {
            c.push(0.0);
        } else if z.im.abs() <= DETECT_TOL && z.re > 0.0 {
            c.push(z.re);
        } else {
            return None;
        }
    }
    WStateN::normalized(&c).ok()
}

pub struct WNMethod;

impl LambdaMaxMethod for WNMethod {
    fn name(&self) -> &'static str {
        "w-n"
    }

    fn detect(&self, psi: &PureState) -> bool {
        detect_w(psi).is_some()
    }

    fn evaluate(&self, psi: &PureState) -> Result<Evaluation> {
        let w = detect_w(psi).ok_or_else(|| CliError::Unavailable("not an n-qubit W-type state".into()))?;
        let o = lambda_max_w(&w).map_err(|e| CliError::Unavailable(e.to_string()))?;
        Ok(analytic(psi, o.lambda_sq(), o.region.label.as_str(), Some(o.nearest)))
    }
}

pub struct AcinTypeMethod;

impl LambdaMaxMethod for AcinTypeMethod {
    fn name(&self) -> &'static str {
        "acin-type"
    }

    fn detect(&self, psi: &PureState) -> bool {
        psi.n_qubits() == 3 && classify_state(psi).map(|(t, _, _)| t.has_closed_form()).unwrap_or(false)
    }

    fn evaluate(&self, psi: &PureState) -> Result<Evaluation> {
        if psi.n_qubits() != 3 {
            return Err(CliError::Unavailable("type classification needs three qubits".into()));
        }
        let (t, ji, _) = classify_state(psi).map_err(|e| CliError::Input(e.to_string()))?;
        let l2 = pmax_by_type(t, &ji)
            .value()
            .ok_or_else(|| CliError::Unavailable(format!("no closed form for {t} states")))?;
        Ok(analytic(psi, l2, t.as_str(), None))
    }
}

pub struct TwoQubitMethod;

impl LambdaMaxMethod for TwoQubitMethod {
    fn name(&self) -> &'static str {
        "two-qubit"
    }

    fn detect(&self, psi: &PureState) -> bool {
        psi.n_qubits() == 2
    }

    fn evaluate(&self, psi: &PureState) -> Result<Evaluation> {
        if psi.n_qubits() != 2 {
            return Err(CliError::Unavailable("not a two-qubit state".into()));
        }
        let l2 = two_qubit_pmax(psi).map_err(|e| CliError::Input(e.to_string()))?;
        Ok(analytic(psi, l2, entanglement_class(l2), two_qubit_nearest(psi)))
    }
}

/// Leading Schmidt pair from the 2x2 amplitude matrix.
fn two_qubit_nearest(psi: &PureState) -> Option<ProductState> {
    let a = psi.amplitudes();
    let m = qstate_core::Matrix2::new(a[0], a[1], a[2], a[3]);
    let svd = m.svd(true, false);
    let u = svd.u?;
    let k = if svd.singular_values[0] >= svd.singular_values[1] { 0 } else { 1 };
    let first = Qubit::new(u[(0, k)], u[(1, k)]).ok()?;
    let c = psi.contract_except(&[first, Qubit::zero()], 1);
    let second = Qubit::new(c[0], c[1]).ok()?;
    ProductState::new(vec![first, second]).ok()
}

pub struct OracleMethod {
    config: OracleConfig,
}

impl OracleMethod {
    pub fn new(config: OracleConfig) -> Self {
        Self { config }
    }
}

impl LambdaMaxMethod for OracleMethod {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn is_analytic(&self) -> bool {
        false
    }

    fn detect(&self, _psi: &PureState) -> bool {
        true
    }

    fn evaluate(&self, psi: &PureState) -> Result<Evaluation> {
        let best = oracle_lambda_max(psi, &self.config).map_err(|e| CliError::Input(e.to_string()))?;
        let l2 = best.lambda * best.lambda;
        Ok(Evaluation {
            lambda_sq: l2,
            region: entanglement_class(l2).to_string(),
            nearest: Some(best.product),
            converged: best.converged,
            residual: Some(best.residual),
        })
    }
}

/// Amplitudes of `a0|000> + a1|011> + a2|101> + a3|110> + a4|111>` with real non-negative `a0..a3`.
pub fn gsd_pattern(psi: &PureState) -> Option<(f64, f64, f64, f64, C64)> {
    if psi.n_qubits() != 3 || psi.support(DETECT_TOL).iter().any(|i| ![0, 3, 5, 6, 7].contains(i)) {
        return None;
    }
    let mut l = [0.0; 4];
    for (slot, &i) in l.iter_mut().zip(&[0usize, 3, 5, 6]) {
        let z = psi.amplitude(i);
        if z.im.abs() > DETECT_TOL || z.re < -DETECT_TOL {
            return None;
        }
        *slot = z.re.max(0.0);
    }
    (l[0] > DETECT_TOL).then_some((l[0], l[1], l[2], l[3], psi.amplitude(7)))
}
