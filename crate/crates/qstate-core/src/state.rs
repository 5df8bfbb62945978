use serde::{Deserialize, Serialize};

use crate::density::DensityMatrix;
use crate::qubit::{ProductState, Qubit};
use crate::{tol, Result, StateError, C64};

const ZERO: C64 = C64::new(0.0, 0.0);

/// Which canonicalization produced a five-coefficient parameter set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhaseConvention {
    /// Real `l0..l4`, phase `phi` in `[0, pi]` on the `|100>` term.
    AcinPhi,
    /// Real `l0..l3`, complex `l4` with `Arg(l4)` in `[-pi/2, pi/2]`.
    GsdArgL4,
}

/// Five-coefficient standard form
/// `l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AcinParams {
    pub lambda: [f64; 5],
    pub phi: f64,
}

impl AcinParams {
    pub fn new(lambda: [f64; 5], phi: f64) -> Result<Self> {
        if lambda.iter().any(|l| !(*l >= 0.0) || !l.is_finite()) {
            return Err(StateError::InvalidParameter(format!("coefficients must be non-negative: {lambda:?}")));
        }
        if !(0.0..=std::f64::consts::PI).contains(&phi) {
            return Err(StateError::InvalidParameter(format!("phase {phi} outside [0, pi]")));
        }
        let s: f64 = lambda.iter().map(|l| l * l).sum();
        if (s - 1.0).abs() > tol::DERIVED {
            return Err(StateError::NotNormalized(s));
        }
        Ok(Self { lambda, phi })
    }

    pub const fn convention(&self) -> PhaseConvention {
        PhaseConvention::AcinPhi
    }

    pub fn to_state(&self) -> PureState {
        let [l0, l1, l2, l3, l4] = self.lambda;
        let mut amps = vec![ZERO; 8];
        amps[0] = C64::new(l0, 0.0);
        amps[4] = C64::from_polar(l1, self.phi);
        amps[5] = C64::new(l2, 0.0);
        amps[6] = C64::new(l3, 0.0);
        amps[7] = C64::new(l4, 0.0);
        PureState::from_normalized(3, amps)
    }
}

/// Dense pure state over the `2^n` computational basis.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    n: usize,
    amps: Vec<C64>,
}

impl PureState {
    /// Normalizes `amps` and fixes the global phase so the first
    /// non-negligible amplitude is real positive.
    pub fn new(n: usize, amps: Vec<C64>) -> Result<Self> {
        Self::normalized_with_factor(n, amps).map(|(s, _)| s)
    }

    /// Like [`PureState::new`], also returning the factor `1/|amps|` that was applied.
    pub fn normalized_with_factor(n: usize, mut amps: Vec<C64>) -> Result<(Self, f64)> {
        if n == 0 || n > 30 {
            return Err(StateError::InvalidParameter(format!("unsupported qubit count {n}")));
        }
        let expected = 1usize << n;
        if amps.len() != expected {
            return Err(StateError::Dimension { n, expected, got: amps.len() });
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(StateError::InvalidParameter("non-finite amplitude".into()));
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0) {
            return Err(StateError::ZeroNorm);
        }
        let factor = 1.0 / norm;
        let max = amps.iter().map(|a| a.norm()).fold(0.0, f64::max);
        let phase = amps
            .iter()
            .find(|a| a.norm() > 1e-12 * max)
            .map(|a| C64::from_polar(1.0, -a.arg()))
            .unwrap_or(C64::new(1.0, 0.0));
        for a in &mut amps {
            *a *= phase * factor;
        }
        Ok((Self { n, amps }, factor))
    }

    /// Infers the qubit count from the amplitude count.
    pub fn from_amplitudes(amps: Vec<C64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(StateError::NotPowerOfTwo(len));
        }
        Self::new(len.trailing_zeros() as usize, amps)
    }

    pub fn from_real(n: usize, amps: &[f64]) -> Result<Self> {
        Self::new(n, amps.iter().map(|&a| C64::new(a, 0.0)).collect())
    }

    pub(crate) fn from_normalized(n: usize, amps: Vec<C64>) -> Self {
        Self::new(n, amps).expect("normalized amplitudes")
    }

    pub fn basis(n: usize, index: usize) -> Result<Self> {
        if index >= 1 << n {
            return Err(StateError::InvalidParameter(format!("basis index {index} out of range")));
        }
        let mut amps = vec![ZERO; 1 << n];
        amps[index] = C64::new(1.0, 0.0);
        Self::new(n, amps)
    }

    pub fn product(p: &ProductState) -> Self {
        Self::from_normalized(p.n_qubits(), p.to_amplitudes())
    }

    /// `(|0...0> + |1...1>)/sqrt(2)`.
    pub fn ghz(n: usize) -> Result<Self> {
        let mut amps = vec![ZERO; 1 << n];
        amps[0] = C64::new(1.0, 0.0);
        amps[(1 << n) - 1] = C64::new(1.0, 0.0);
        Self::new(n, amps)
    }

    /// Equal-weight W state.
    pub fn w(n: usize) -> Result<Self> {
        Self::w_type(&vec![1.0; n])
    }

    /// `c1|10...0> + c2|01...0> + ... + cn|0...01>` (normalized).
    pub fn w_type(coeffs: &[f64]) -> Result<Self> {
        let n = coeffs.len();
        if n == 0 {
            return Err(StateError::InvalidParameter("empty coefficient list".into()));
        }
        let mut amps = vec![ZERO; 1 << n];
        for (k, c) in coeffs.iter().enumerate() {
            amps[1 << (n - 1 - k)] = C64::new(*c, 0.0);
        }
        Self::new(n, amps)
    }

    /// `l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>`.
    pub fn from_acin_params(lambda: [f64; 5], phi: f64) -> Result<Self> {
        Ok(AcinParams::new(lambda, phi)?.to_state())
    }

    /// Five-term form over the product basis built from `u = |0>`, `v = |1>`:
    /// `l0|000> + l1|011> + l2|101> + l3|110> + l4|111>`.
    pub fn from_gsd_coefficients(l0: f64, l1: f64, l2: f64, l3: f64, l4: C64) -> Result<Self> {
        let mut amps = vec![ZERO; 8];
        amps[0] = C64::new(l0, 0.0);
        amps[3] = C64::new(l1, 0.0);
        amps[5] = C64::new(l2, 0.0);
        amps[6] = C64::new(l3, 0.0);
        amps[7] = l4;
        Self::new(3, amps)
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> C64 {
        self.amps[index]
    }

    /// Indices whose amplitude magnitude exceeds `threshold`.
    pub fn support(&self, threshold: f64) -> Vec<usize> {
        (0..self.amps.len()).filter(|&i| self.amps[i].norm() > threshold).collect()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> C64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    /// Largest elementwise deviation after aligning the global phase of `other` to `self`.
    pub fn distance_up_to_phase(&self, other: &Self) -> f64 {
        if self.n != other.n {
            return f64::INFINITY;
        }
        let ov = other.inner(self);
        let phase = if ov.norm() > 0.0 { ov / ov.norm() } else { C64::new(1.0, 0.0) };
        self.amps.iter().zip(&other.amps).map(|(a, b)| (a - b * phase).norm()).fold(0.0, f64::max)
    }

    pub fn approx_eq_up_to_phase(&self, other: &Self, tolerance: f64) -> bool {
        self.distance_up_to_phase(other) <= tolerance
    }

    pub fn density(&self) -> DensityMatrix {
        DensityMatrix::from_pure(self)
    }

    /// Reduced density matrix after tracing out `traced` (computed from amplitudes).
    pub fn reduced_density(&self, traced: &[usize]) -> Result<DensityMatrix> {
        let kept = crate::density::kept_indices(self.n, traced)?;
        let t: Vec<usize> = (0..self.n).filter(|q| !kept.contains(q)).collect();
        let dk = 1usize << kept.len();
        let mut m = nalgebra::DMatrix::<C64>::zeros(dk, dk);
        for tv in 0..(1usize << t.len()) {
            let base = crate::density::scatter(self.n, &t, tv);
            let col: Vec<C64> = (0..dk).map(|a| self.amps[base | crate::density::scatter(self.n, &kept, a)]).collect();
            for a in 0..dk {
                if col[a] == ZERO {
                    continue;
                }
                for b in 0..dk {
                    m[(a, b)] += col[a] * col[b].conj();
                }
            }
        }
        Ok(DensityMatrix::from_matrix_unchecked(m))
    }

    /// `<q_1 ... q_{k-1} q_{k+1} ... q_n | psi>`, an unnormalized vector on qubit `k`.
    pub fn contract_except(&self, factors: &[Qubit], k: usize) -> [C64; 2] {
        debug_assert_eq!(factors.len(), self.n);
        let n = self.n;
        let mut buf: Vec<C64> = self.amps.clone();
        // contract qubits n-1 down to 0, skipping k; qubit j then sits on axis j
        // with only qubit k (if k > j) to its right
        for j in (0..n).rev() {
            if j == k {
                continue;
            }
            let right = if k > j { 2 } else { 1 };
            let left = 1usize << j;
            let q0 = factors[j].alpha.conj();
            let q1 = factors[j].beta.conj();
            for l in 0..left {
                for r in 0..right {
                    let i0 = 2 * l * right + r;
                    buf[l * right + r] = q0 * buf[i0] + q1 * buf[i0 + right];
                }
            }
        }
        [buf[0], buf[1]]
    }

    /// `<q_1 ... q_n | psi>`.
    pub fn overlap_with_product(&self, p: &ProductState) -> C64 {
        self.amps.iter().enumerate().map(|(i, a)| p.amplitude(i).conj() * a).sum()
    }
}

/// `|<psi|q_1 ... q_n>|`.
pub fn product_overlap(psi: &PureState, p: &ProductState) -> Result<f64> {
    if psi.n_qubits() != p.n_qubits() {
        return Err(StateError::QubitCount { expected: psi.n_qubits(), got: p.n_qubits() });
    }
    Ok(psi.overlap_with_product(p).norm().min(1.0))
}
