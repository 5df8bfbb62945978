use qstate_core::{ProductState, PureState};
use variational::OracleConfig;

use crate::methods::{
    AcinTypeMethod, FourTermMethod, OracleMethod, SymmetricMethod, TwoQubitMethod, WNMethod, WType3Method,
};
use crate::Result;

/// Amplitude threshold used when matching family sparsity patterns.
pub const DETECT_TOL: f64 = 1e-10;

/// Outcome of one method on one state.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub lambda_sq: f64,
    pub region: String,
    pub nearest: Option<ProductState>,
    pub converged: bool,
    /// Stationarity residual, reported by numeric methods.
    pub residual: Option<f64>,
}

pub trait LambdaMaxMethod: Send + Sync {
    fn name(&self) -> &'static str;

    /// Closed-form methods are analytic; the oracle is not.
    fn is_analytic(&self) -> bool {
        true
    }

    fn detect(&self, psi: &PureState) -> bool;

    fn evaluate(&self, psi: &PureState) -> Result<Evaluation>;
}

/// Ordered collection of methods; dispatch picks the first analytic match.
pub struct Registry {
    methods: Vec<Box<dyn LambdaMaxMethod>>,
}

impl Registry {
    pub fn empty() -> Self {
        Self { methods: Vec::new() }
    }

    /// All built-in methods in dispatch order, oracle last.
    pub fn standard(oracle: OracleConfig) -> Self {
        let mut r = Self::empty();
        r.register(Box::new(WType3Method));
        r.register(Box::new(SymmetricMethod));
        r.register(Box::new(FourTermMethod));
        r.register(Box::new(WNMethod));
        r.register(Box::new(AcinTypeMethod));
        r.register(Box::new(TwoQubitMethod));
        r.register(Box::new(OracleMethod::new(oracle)));
        r
    }

    pub fn register(&mut self, method: Box<dyn LambdaMaxMethod>) {
        self.methods.push(method);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.iter().map(|m| m.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn LambdaMaxMethod> {
        self.methods.iter().find(|m| m.name() == name).map(|m| m.as_ref())
    }

    /// First analytic method whose family contains the state.
    pub fn analytic_for(&self, psi: &PureState) -> Option<&dyn LambdaMaxMethod> {
        self.methods.iter().find(|m| m.is_analytic() && m.detect(psi)).map(|m| m.as_ref())
    }

    /// Every analytic method whose family contains the state.
    pub fn matching(&self, psi: &PureState) -> Vec<&'static str> {
        self.methods.iter().filter(|m| m.is_analytic() && m.detect(psi)).map(|m| m.name()).collect()
    }

    pub fn numeric(&self) -> Option<&dyn LambdaMaxMethod> {
        self.methods.iter().find(|m| !m.is_analytic()).map(|m| m.as_ref())
    }
}
