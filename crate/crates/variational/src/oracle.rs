use std::cmp::Ordering;

use qstate_core::random::haar_qubit;
use qstate_core::{ProductState, PureState, Qubit};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::contract::Contractor;
use crate::{Result, VariationalError};

/// Stationarity residual required for a point to count as converged.
pub const STATIONARY_RESIDUAL: f64 = 1e-9;

const MAX_QUBITS: usize = 24;
const ZERO_CONTRACTION: f64 = 1e-14;
const TIE: f64 = 1e-10;
const POLISH_RESIDUAL: f64 = 1e-12;
const POLISH_SWEEPS: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleConfig {
    pub n_starts: usize,
    pub max_iters: usize,
    /// Change in the overlap between sweeps below which a sweep counts as stalled.
    pub conv_tol: f64,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { n_starts: 64, max_iters: 10_000, conv_tol: 1e-12, seed: 0 }
    }
}

impl OracleConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self { seed, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_starts == 0 {
            return Err(VariationalError::Config("n_starts must be positive".into()));
        }
        if self.max_iters == 0 {
            return Err(VariationalError::Config("max_iters must be positive".into()));
        }
        if !(self.conv_tol > 0.0 && self.conv_tol < 1e-6) {
            return Err(VariationalError::Config(format!("conv_tol must lie in (0, 1e-6), got {}", self.conv_tol)));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StationaryPoint {
    pub lambda: f64,
    pub product: ProductState,
    pub iterations: usize,
    pub converged: bool,
    pub residual: f64,
    /// Factors re-drawn after a vanishing contraction.
    pub restarts: usize,
}

impl StationaryPoint {
    pub fn lambda_sq(&self) -> f64 {
        self.lambda * self.lambda
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StartKind {
    /// Computational basis state with a single `|1>` on the given qubit.
    Basis(usize),
    Haar,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StartReport {
    pub index: usize,
    pub kind: StartKind,
    pub lambda: f64,
    pub iterations: usize,
    pub residual: f64,
    pub converged: bool,
    pub restarts: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    pub best: StationaryPoint,
    pub best_start: usize,
    pub starts: Vec<StartReport>,
}

impl OracleReport {
    pub fn converged_starts(&self) -> usize {
        self.starts.iter().filter(|s| s.converged).count()
    }
}

/// `(|<u|psi>|, max_k |<u_k^perp| c_k>|)` with `c_k` the contraction on all factors but `k`.
pub fn stationarity_residual(psi: &PureState, product: &ProductState) -> Result<(f64, f64)> {
    check_sizes(psi, product)?;
    let c = Contractor::new(psi);
    Ok(residual_with(&c, &product.factors))
}

fn residual_with(c: &Contractor<'_>, factors: &[Qubit]) -> (f64, f64) {
    let mut res = 0.0f64;
    for (k, q) in factors.iter().enumerate() {
        let v = c.contract(factors, k);
        let perp = q.orthogonal();
        let off = perp.alpha.conj() * v[0] + perp.beta.conj() * v[1];
        res = res.max(off.norm());
    }
    (c.overlap(factors).norm(), res)
}

fn check_sizes(psi: &PureState, start: &ProductState) -> Result<()> {
    if start.n_qubits() != psi.n_qubits() {
        return Err(VariationalError::StartSize { expected: psi.n_qubits(), got: start.n_qubits() });
    }
    if psi.n_qubits() > MAX_QUBITS {
        return Err(VariationalError::TooManyQubits { n: psi.n_qubits(), max: MAX_QUBITS });
    }
    Ok(())
}

fn canonical_phase(q: Qubit) -> Qubit {
    let pivot = if q.alpha.norm() > 1e-12 { q.alpha } else { q.beta };
    let ph = pivot.conj() / pivot.norm();
    Qubit { alpha: q.alpha * ph, beta: q.beta * ph }
}

fn iterate(c: &Contractor<'_>, start: &ProductState, config: &OracleConfig, rng: &mut ChaCha8Rng) -> StationaryPoint {
    let n = c.n_qubits();
    let mut factors = start.factors.clone();
    let mut lambda = c.overlap(&factors).norm();
    let mut restarts = 0;
    let mut residual = f64::INFINITY;
    let mut converged = false;
    let mut iterations = 0;
    let mut polish_left = POLISH_SWEEPS;
    while iterations < config.max_iters {
        iterations += 1;
        let prev = lambda;
        let mut step = 0.0f64;
        let mut restarted = false;
        let mut last = None;
        for k in 0..n {
            let v = c.contract(&factors, k);
            let norm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
            if norm < ZERO_CONTRACTION {
                factors[k] = haar_qubit(rng);
                restarts += 1;
                restarted = true;
                last = None;
                continue;
            }
            let q = Qubit { alpha: v[0] / norm, beta: v[1] / norm };
            step = step.max(((q.alpha - factors[k].alpha).norm_sqr() + (q.beta - factors[k].beta).norm_sqr()).sqrt());
            factors[k] = q;
            last = Some(norm);
        }
        lambda = match last {
            Some(l) => l,
            None => c.overlap(&factors).norm(),
        };
        debug_assert!(restarted || lambda >= prev - 1e-12, "overlap decreased: {prev} -> {lambda}");
        if converged || (!restarted && (lambda - prev).abs() < config.conv_tol && step < 1e-7) {
            let (l, r) = residual_with(c, &factors);
            lambda = l;
            residual = r;
            if r < STATIONARY_RESIDUAL {
                converged = true;
            }
        }
        if converged {
            if residual < POLISH_RESIDUAL || polish_left == 0 {
                break;
            }
            polish_left -= 1;
        }
    }
    let (l, r) = residual_with(c, &factors);
    lambda = l;
    residual = r;
    converged = converged && r < STATIONARY_RESIDUAL;
    StationaryPoint {
        lambda: lambda.min(1.0),
        product: ProductState { factors: factors.into_iter().map(canonical_phase).collect() },
        iterations,
        converged,
        residual,
        restarts,
    }
}

/// Cyclic updates `|u_k> <- <u_1 .. u_{k-1} u_{k+1} .. u_n|psi>` normalized, until stationary.
pub fn stationary_iterate(psi: &PureState, start: &ProductState, config: &OracleConfig) -> Result<StationaryPoint> {
    config.validate()?;
    check_sizes(psi, start)?;
    let mut rng = rng_for(config.seed, 0);
    Ok(iterate(&Contractor::new(psi), start, config, &mut rng))
}

fn rng_for(seed: u64, stream: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream as u64);
    rng
}

fn z_key(p: &ProductState) -> Vec<f64> {
    p.factors.iter().map(|q| q.bloch().z).collect()
}

fn better(a: &StationaryPoint, b: &StationaryPoint) -> bool {
    if a.lambda > b.lambda + TIE {
        return true;
    }
    if a.lambda < b.lambda - TIE {
        return false;
    }
    for (x, y) in z_key(&a.product).iter().zip(z_key(&b.product)) {
        match x.partial_cmp(&y) {
            Some(Ordering::Greater) if x - y > 1e-9 => return true,
            Some(Ordering::Less) if y - x > 1e-9 => return false,
            _ => {}
        }
    }
    a.lambda > b.lambda
}

/// Runs every start and keeps all per-start diagnostics.
///
/// Starts are the `n` single-excitation basis states followed by
/// `n_starts` Haar-random product states; start `i` draws from stream `i`
/// of a generator seeded with `config.seed`.
pub fn oracle_report(psi: &PureState, config: &OracleConfig) -> Result<OracleReport> {
    config.validate()?;
    let n = psi.n_qubits();
    if n > MAX_QUBITS {
        return Err(VariationalError::TooManyQubits { n, max: MAX_QUBITS });
    }
    let contractor = Contractor::new(psi);
    let total = n + config.n_starts;
    let points: Vec<(StartKind, StationaryPoint)> = (0..total)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(config.seed, i);
            let (kind, start) = if i < n {
                (StartKind::Basis(i), ProductState::basis(n, 1usize << (n - 1 - i)))
            } else {
                let factors = (0..n).map(|_| haar_qubit(&mut rng)).collect();
                (StartKind::Haar, ProductState { factors })
            };
            (kind, iterate(&contractor, &start, config, &mut rng))
        })
        .collect();
    let mut best_start = 0;
    for (i, (_, p)) in points.iter().enumerate().skip(1) {
        if better(p, &points[best_start].1) {
            best_start = i;
        }
    }
    let starts = points
        .iter()
        .enumerate()
        .map(|(index, (kind, p))| StartReport {
            index,
            kind: *kind,
            lambda: p.lambda,
            iterations: p.iterations,
            residual: p.residual,
            converged: p.converged,
            restarts: p.restarts,
        })
        .collect();
    let best = points.into_iter().nth(best_start).map(|(_, p)| p).expect("at least one start");
    Ok(OracleReport { best, best_start, starts })
}

/// Best stationary point over all starts.
pub fn oracle_lambda_max(psi: &PureState, config: &OracleConfig) -> Result<StationaryPoint> {
    oracle_report(psi, config).map(|r| r.best)
}
