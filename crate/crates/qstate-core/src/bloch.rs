use nalgebra::{DMatrix, Matrix3, Vector3};

use crate::density::DensityMatrix;
use crate::state::PureState;
use crate::{Result, StateError, C64};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    /// Image of basis bit `b` as `(phase, flipped bit)`.
    fn act(self, b: usize) -> (C64, usize) {
        match self {
            Pauli::I => (C64::new(1.0, 0.0), b),
            Pauli::X => (C64::new(1.0, 0.0), b ^ 1),
            Pauli::Y => (if b == 0 { C64::new(0.0, 1.0) } else { C64::new(0.0, -1.0) }, b ^ 1),
            Pauli::Z => (C64::new(if b == 0 { 1.0 } else { -1.0 }, 0.0), b),
        }
    }

    fn matrix(self) -> [[C64; 2]; 2] {
        let mut m = [[C64::new(0.0, 0.0); 2]; 2];
        for b in 0..2 {
            let (ph, out) = self.act(b);
            m[out][b] = ph;
        }
        m
    }
}

/// `<psi| P_1 (x) ... (x) P_n |psi>` (real for Hermitian Pauli strings).
pub fn pauli_expectation(psi: &PureState, ops: &[Pauli]) -> Result<f64> {
    let n = psi.n_qubits();
    if ops.len() != n {
        return Err(StateError::QubitCount { expected: n, got: ops.len() });
    }
    let amps = psi.amplitudes();
    let mut acc = C64::new(0.0, 0.0);
    for (i, a) in amps.iter().enumerate() {
        if a.norm_sqr() == 0.0 {
            continue;
        }
        let mut phase = C64::new(1.0, 0.0);
        let mut j = 0usize;
        for (k, op) in ops.iter().enumerate() {
            let shift = n - 1 - k;
            let (ph, b) = op.act((i >> shift) & 1);
            phase *= ph;
            j |= b << shift;
        }
        acc += amps[j].conj() * phase * a;
    }
    Ok(acc.re)
}

/// Bloch form of a three-qubit density matrix:
/// `rho = 1/8 [ I + v_i . sigma^(i) + h^(i) on the complementary pair + g sigma sigma sigma ]`.
///
/// `h[0]` acts on qubits (1, 2), `h[1]` on (0, 2), `h[2]` on (0, 1).
#[derive(Clone, Debug, PartialEq)]
pub struct BlochDecomposition3 {
    pub v: [Vector3<f64>; 3],
    pub h: [Matrix3<f64>; 3],
    pub g: [[[f64; 3]; 3]; 3],
}

pub fn bloch_decomposition3(psi: &PureState) -> Result<BlochDecomposition3> {
    if psi.n_qubits() != 3 {
        return Err(StateError::QubitCount { expected: 3, got: psi.n_qubits() });
    }
    let mut t = [[[0.0f64; 4]; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                t[a][b][c] = pauli_expectation(psi, &[Pauli::ALL[a], Pauli::ALL[b], Pauli::ALL[c]])?;
            }
        }
    }
    let v = [
        Vector3::from_fn(|i, _| t[i + 1][0][0]),
        Vector3::from_fn(|i, _| t[0][i + 1][0]),
        Vector3::from_fn(|i, _| t[0][0][i + 1]),
    ];
    let h = [
        Matrix3::from_fn(|i, j| t[0][i + 1][j + 1]),
        Matrix3::from_fn(|i, j| t[i + 1][0][j + 1]),
        Matrix3::from_fn(|i, j| t[i + 1][j + 1][0]),
    ];
    let mut g = [[[0.0; 3]; 3]; 3];
    for (i, gi) in g.iter_mut().enumerate() {
        for (j, gij) in gi.iter_mut().enumerate() {
            for (k, x) in gij.iter_mut().enumerate() {
                *x = t[i + 1][j + 1][k + 1];
            }
        }
    }
    Ok(BlochDecomposition3 { v, h, g })
}

impl BlochDecomposition3 {
    /// Coefficient of `P_a (x) P_b (x) P_c` with index 0 meaning identity.
    pub fn coefficient(&self, a: usize, b: usize, c: usize) -> f64 {
        match (a, b, c) {
            (0, 0, 0) => 1.0,
            (i, 0, 0) => self.v[0][i - 1],
            (0, i, 0) => self.v[1][i - 1],
            (0, 0, i) => self.v[2][i - 1],
            (0, i, j) => self.h[0][(i - 1, j - 1)],
            (i, 0, j) => self.h[1][(i - 1, j - 1)],
            (i, j, 0) => self.h[2][(i - 1, j - 1)],
            (i, j, k) => self.g[i - 1][j - 1][k - 1],
        }
    }

    /// Rebuilds the 8x8 density matrix from the Bloch components.
    pub fn reconstruct(&self) -> DensityMatrix {
        let mut m = DMatrix::<C64>::zeros(8, 8);
        for a in 0..4 {
            let pa = Pauli::ALL[a].matrix();
            for b in 0..4 {
                let pb = Pauli::ALL[b].matrix();
                for c in 0..4 {
                    let w = self.coefficient(a, b, c) / 8.0;
                    if w == 0.0 {
                        continue;
                    }
                    let pc = Pauli::ALL[c].matrix();
                    for r in 0..8 {
                        for s in 0..8 {
                            let e = pa[r >> 2][s >> 2] * pb[(r >> 1) & 1][(s >> 1) & 1] * pc[r & 1][s & 1];
                            m[(r, s)] += e * w;
                        }
                    }
                }
            }
        }
        DensityMatrix::from_matrix_unchecked(m)
    }

    /// Squared norms `|v_i|^2`.
    pub fn v_norms_sq(&self) -> [f64; 3] {
        [self.v[0].norm_squared(), self.v[1].norm_squared(), self.v[2].norm_squared()]
    }

    /// `Tr(h_i h_i^T)`.
    pub fn h_norms_sq(&self) -> [f64; 3] {
        [self.h[0].norm_squared(), self.h[1].norm_squared(), self.h[2].norm_squared()]
    }

    /// Full contraction `g_abc g_abc`.
    pub fn g_norm_sq(&self) -> f64 {
        self.g.iter().flatten().flatten().map(|x| x * x).sum()
    }

    /// `h^(3)_{ab} v_1a v_2b`, the mixed scalar with qubits 0 and 1.
    pub fn h3_v1_v2(&self) -> f64 {
        (self.v[0].transpose() * self.h[2] * self.v[1])[(0, 0)]
    }
}
