use std::f64::consts::PI;

use qstate_core::{Matrix3, ProductState, PureState, Qubit, StateError, Vector3, C64};
use variational::{stationarity_residual, STATIONARY_RESIDUAL};

use crate::{GsdError, Result, RECONSTRUCTION_TOL, ZERO_COEFFICIENT};

const NORM_TOL: f64 = 1e-10;
const ORTHO_TOL: f64 = 1e-12;

/// Five-term canonical form over the product basis `{u_k, v_k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SchmidtForm {
    pub l0: f64,
    pub l1: f64,
    pub l2: f64,
    pub l3: f64,
    pub l4: C64,
    /// `(u_k, v_k)` per qubit.
    pub bases: [(Qubit, Qubit); 3],
}

/// Bits of the five terms, `0` selecting `u` and `1` selecting `v`.
const TERMS: [[usize; 3]; 5] = [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0], [1, 1, 1]];

impl SchmidtForm {
    pub fn new(l0: f64, l1: f64, l2: f64, l3: f64, l4: C64, bases: [(Qubit, Qubit); 3]) -> Result<Self> {
        if [l0, l1, l2, l3].iter().any(|x| !(*x >= 0.0) || !x.is_finite()) || !l4.norm().is_finite() {
            return Err(GsdError::Invalid(format!("l0..l3 must be non-negative: {l0}, {l1}, {l2}, {l3}")));
        }
        let norm = l0 * l0 + l1 * l1 + l2 * l2 + l3 * l3 + l4.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(GsdError::Invalid(format!("squared coefficients sum to {norm}, expected 1")));
        }
        for (k, (u, v)) in bases.iter().enumerate() {
            if !u.is_normalized() || !v.is_normalized() || u.inner(v).norm() > ORTHO_TOL {
                return Err(GsdError::Invalid(format!("basis pair {k} is not orthonormal")));
            }
        }
        Ok(Self { l0, l1, l2, l3, l4, bases })
    }

    /// Form over the computational basis, `u = |0>`, `v = |1>`.
    pub fn computational(l0: f64, l1: f64, l2: f64, l3: f64, l4: C64) -> Result<Self> {
        Self::new(l0, l1, l2, l3, l4, [(Qubit::zero(), Qubit::one()); 3])
    }

    pub fn coefficients(&self) -> [C64; 5] {
        [self.l0.into(), self.l1.into(), self.l2.into(), self.l3.into(), self.l4]
    }

    pub fn nearest_product(&self) -> ProductState {
        ProductState { factors: self.bases.iter().map(|(u, _)| *u).collect() }
    }

    pub fn to_state(&self) -> PureState {
        let mut amps = vec![C64::new(0.0, 0.0); 8];
        for (coef, bits) in self.coefficients().iter().zip(TERMS) {
            let p = ProductState {
                factors: bits.iter().zip(&self.bases).map(|(&b, (u, v))| if b == 0 { *u } else { *v }).collect(),
            };
            for (i, a) in p.to_amplitudes().into_iter().enumerate() {
                amps[i] += coef * a;
            }
        }
        PureState::new(3, amps).expect("orthonormal five-term form")
    }

    /// Largest elementwise deviation from `psi` up to global phase.
    pub fn reconstruction_error(&self, psi: &PureState) -> f64 {
        psi.distance_up_to_phase(&self.to_state())
    }

    /// `l0 >= |l4|`.
    pub fn is_dominant(&self, tol: f64) -> bool {
        self.l0 + tol >= self.l4.norm()
    }

    /// `-pi/2 <= Arg(l4) <= pi/2`.
    pub fn arg_in_range(&self, tol: f64) -> bool {
        self.l4.re >= -tol
    }
}

fn overlap_bits(psi: &PureState, u: &[Qubit; 3], v: &[Qubit; 3], bits: [usize; 3]) -> C64 {
    let factors = (0..3).map(|k| if bits[k] == 0 { u[k] } else { v[k] }).collect();
    psi.overlap_with_product(&ProductState { factors })
}

/// Phases `chi` of `v_k` solving the constraints greedily, most important first.
fn solve_phases(rows: &[([f64; 3], f64)]) -> [f64; 3] {
    let mut picked: Vec<([f64; 3], f64)> = Vec::new();
    let mut basis: Vec<Vector3<f64>> = Vec::new();
    for (row, rhs) in rows {
        let mut w = Vector3::from(*row);
        for b in &basis {
            w -= b * b.dot(&w);
        }
        if w.norm() > 1e-9 {
            basis.push(w.normalize());
            picked.push((*row, *rhs));
        }
        if picked.len() == 3 {
            break;
        }
    }
    let m = Matrix3::from_fn(|i, j| picked[i].0[j]);
    let b = Vector3::new(picked[0].1, picked[1].1, picked[2].1);
    let x = m.try_inverse().expect("three independent rows") * b;
    [x[0], x[1], x[2]]
}

/// GSD from a stationary product state.
///
/// `u_1` is rephased so that `<u1u2u3|psi>` is real positive, `v_k` are the
/// orthogonal complements with phases chosen to make `l1, l2, l3` non-negative,
/// and the collective sign of the `v_k` brings `Arg(l4)` into `[-pi/2, pi/2]`.
/// When some `l_i` vanish the freed phase makes `l4` real positive instead,
/// and any phase still free is set to zero.
pub fn gsd_from_stationary(psi: &PureState, stationary: &ProductState) -> Result<SchmidtForm> {
    if psi.n_qubits() != 3 {
        return Err(StateError::QubitCount { expected: 3, got: psi.n_qubits() }.into());
    }
    let (overlap, residual) = stationarity_residual(psi, stationary)?;
    if !(residual < STATIONARY_RESIDUAL) {
        return Err(GsdError::NotStationary(residual));
    }
    if overlap <= ZERO_COEFFICIENT {
        return Err(GsdError::ZeroOverlap);
    }
    let f = &stationary.factors;
    let c = psi.overlap_with_product(stationary);
    let u = [f[0].with_phase(c.arg()), f[1], f[2]];
    let v0 = [u[0].orthogonal(), u[1].orthogonal(), u[2].orthogonal()];
    let t: [C64; 4] = [
        overlap_bits(psi, &u, &v0, [0, 1, 1]),
        overlap_bits(psi, &u, &v0, [1, 0, 1]),
        overlap_bits(psi, &u, &v0, [1, 1, 0]),
        overlap_bits(psi, &u, &v0, [1, 1, 1]),
    ];
    let nonzero = |z: C64| z.norm() > ZERO_COEFFICIENT;
    let pair_rows = [[0.0, 1.0, 1.0], [1.0, 0.0, 1.0], [1.0, 1.0, 0.0]];
    let mut rows: Vec<([f64; 3], f64)> =
        (0..3).filter(|&i| nonzero(t[i])).map(|i| (pair_rows[i], t[i].arg())).collect();
    let all_pairs = rows.len() == 3;
    if !all_pairs && nonzero(t[3]) {
        rows.push(([1.0, 1.0, 1.0], t[3].arg()));
    }
    rows.extend([([1.0, 0.0, 0.0], 0.0), ([0.0, 1.0, 0.0], 0.0), ([0.0, 0.0, 1.0], 0.0)]);
    let mut chi = solve_phases(&rows);
    let mut l4 = t[3] * C64::from_polar(1.0, -(chi[0] + chi[1] + chi[2]));
    if all_pairs && (l4.re < -ZERO_COEFFICIENT || (l4.re.abs() <= ZERO_COEFFICIENT && l4.im < 0.0)) {
        chi = chi.map(|x| x + PI);
        l4 = -l4;
    }
    if !nonzero(l4) {
        l4 = C64::new(0.0, 0.0);
    } else if l4.im.abs() <= ZERO_COEFFICIENT * l4.norm() {
        l4 = C64::new(l4.re, 0.0);
    }
    let bases = std::array::from_fn(|k| (u[k], v0[k].with_phase(chi[k])));
    let lam = |i: usize| if nonzero(t[i]) { t[i].norm() } else { 0.0 };
    let norm_sq = overlap * overlap + lam(0).powi(2) + lam(1).powi(2) + lam(2).powi(2) + l4.norm_sqr();
    let s = norm_sq.sqrt().recip();
    let form = SchmidtForm::new(overlap * s, lam(0) * s, lam(1) * s, lam(2) * s, l4 * s, bases)?;
    let err = form.reconstruction_error(psi);
    if !(err <= RECONSTRUCTION_TOL) {
        return Err(GsdError::Reconstruction(err));
    }
    Ok(form)
}
