use nalgebra::{SMatrix, SVector};
use qstate_core::{bloch_decomposition3, AcinParams, PureState, StateError, C64};
use serde::{Deserialize, Serialize};

use crate::{LuError, Result};

/// Largest least-squares residual accepted by [`invariants_from_state`].
pub const FIT_RESIDUAL: f64 = 1e-9;

/// The five polynomial LU-invariants of a three-qubit pure state.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LuInvariants {
    pub j1: f64,
    pub j2: f64,
    pub j3: f64,
    pub j4: f64,
    pub j5: f64,
}

impl LuInvariants {
    pub const ZERO: Self = Self { j1: 0.0, j2: 0.0, j3: 0.0, j4: 0.0, j5: 0.0 };

    pub fn new(j1: f64, j2: f64, j3: f64, j4: f64, j5: f64) -> Self {
        Self { j1, j2, j3, j4, j5 }
    }

    pub fn as_array(&self) -> [f64; 5] {
        [self.j1, self.j2, self.j3, self.j4, self.j5]
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.as_array().iter().zip(other.as_array()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    /// Right-hand sides of the Bloch-form relations:
    /// `|v_1|^2, |v_2|^2, |v_3|^2, Tr h1h1^T, Tr h2h2^T, Tr h3h3^T, g.g, h3 v1 v2`.
    pub fn bloch_scalars(&self) -> [f64; 8] {
        let Self { j1, j2, j3, j4, j5 } = *self;
        [
            1.0 - 4.0 * (j2 + j3 + j4),
            1.0 - 4.0 * (j1 + j3 + j4),
            1.0 - 4.0 * (j1 + j2 + j4),
            1.0 + 4.0 * (2.0 * j1 - j2 - j3),
            1.0 - 4.0 * (j1 - 2.0 * j2 + j3),
            1.0 - 4.0 * (j1 + j2 - 2.0 * j3),
            1.0 + 4.0 * (2.0 * j1 + 2.0 * j2 + 2.0 * j3 + 3.0 * j4),
            1.0 - 4.0 * (j1 + j2 + j3 + j4 - j5),
        ]
    }
}

pub fn invariants_from_acin(p: &AcinParams) -> LuInvariants {
    let [l0, l1, l2, l3, l4] = p.lambda;
    let j1 = l1 * l1 * l4 * l4 + l2 * l2 * l3 * l3 - 2.0 * l1 * l2 * l3 * l4 * p.phi.cos();
    LuInvariants {
        j1,
        j2: l0 * l0 * l2 * l2,
        j3: l0 * l0 * l3 * l3,
        j4: l0 * l0 * l4 * l4,
        j5: l0 * l0 * (j1 + l2 * l2 * l3 * l3 - l1 * l1 * l4 * l4),
    }
}

/// Cayley hyperdeterminant of the 2x2x2 amplitude tensor.
pub fn hyperdeterminant(psi: &PureState) -> Result<C64> {
    if psi.n_qubits() != 3 {
        return Err(StateError::QubitCount { expected: 3, got: psi.n_qubits() }.into());
    }
    let a = |i: usize| psi.amplitude(i);
    let d1 =
        a(0) * a(0) * a(7) * a(7) + a(1) * a(1) * a(6) * a(6) + a(2) * a(2) * a(5) * a(5) + a(4) * a(4) * a(3) * a(3);
    let d2 = a(0) * a(7) * (a(3) * a(4) + a(5) * a(2) + a(6) * a(1))
        + a(3) * a(4) * (a(5) * a(2) + a(6) * a(1))
        + a(5) * a(2) * a(6) * a(1);
    let d3 = a(0) * a(6) * a(5) * a(3) + a(7) * a(1) * a(2) * a(4);
    Ok(d1 - d2 * 2.0 + d3 * 4.0)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InvariantFit {
    pub invariants: LuInvariants,
    /// Euclidean norm of the least-squares residual.
    pub residual: f64,
}

/// Least-squares fit of `J1..J5` to the eight Bloch scalars plus `J4 = |Det psi|`.
///
/// The Bloch relations alone have rank four in `J1..J5`; the hyperdeterminant
/// supplies the missing direction.
pub fn fit_invariants(psi: &PureState) -> Result<InvariantFit> {
    let d = bloch_decomposition3(psi)?;
    let v = d.v_norms_sq();
    let h = d.h_norms_sq();
    let rows: [[f64; 5]; 9] = [
        [0.0, -4.0, -4.0, -4.0, 0.0],
        [-4.0, 0.0, -4.0, -4.0, 0.0],
        [-4.0, -4.0, 0.0, -4.0, 0.0],
        [8.0, -4.0, -4.0, 0.0, 0.0],
        [-4.0, 8.0, -4.0, 0.0, 0.0],
        [-4.0, -4.0, 8.0, 0.0, 0.0],
        [8.0, 8.0, 8.0, 12.0, 0.0],
        [-4.0, -4.0, -4.0, -4.0, 4.0],
        [0.0, 0.0, 0.0, 1.0, 0.0],
    ];
    let a = SMatrix::<f64, 9, 5>::from_fn(|i, j| rows[i][j]);
    let b = SVector::<f64, 9>::from_column_slice(&[
        v[0] - 1.0,
        v[1] - 1.0,
        v[2] - 1.0,
        h[0] - 1.0,
        h[1] - 1.0,
        h[2] - 1.0,
        d.g_norm_sq() - 1.0,
        d.h3_v1_v2() - 1.0,
        hyperdeterminant(psi)?.norm(),
    ]);
    let at = a.transpose();
    let x =
        (at * a).cholesky().ok_or_else(|| LuError::Invalid("normal equations are singular".into()))?.solve(&(at * b));
    let residual = (a * x - b).norm();
    Ok(InvariantFit { invariants: LuInvariants::new(x[0], x[1], x[2], x[3], x[4]), residual })
}

/// `J1..J5` from the Bloch form of `psi`; fails when the fit residual exceeds [`FIT_RESIDUAL`].
pub fn invariants_from_state(psi: &PureState) -> Result<LuInvariants> {
    let fit = fit_invariants(psi)?;
    if !(fit.residual <= FIT_RESIDUAL) {
        return Err(LuError::Inconsistent(fit.residual));
    }
    Ok(fit.invariants)
}
