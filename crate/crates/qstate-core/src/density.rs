use nalgebra::{DMatrix, Matrix3};

use crate::qubit::BlochVector;
use crate::state::PureState;
use crate::{tol, Result, StateError, C64};

/// Hermitian, unit-trace, positive semidefinite matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    m: DMatrix<C64>,
}

impl DensityMatrix {
    /// Validates Hermiticity and trace (1e-12) and positivity (min eigenvalue >= -1e-10).
    pub fn new(m: DMatrix<C64>) -> Result<Self> {
        if m.nrows() != m.ncols() || m.nrows() == 0 {
            return Err(StateError::InvalidDensity(format!("shape {}x{}", m.nrows(), m.ncols())));
        }
        let herm = (&m - m.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if herm > tol::REPR {
            return Err(StateError::InvalidDensity(format!("not Hermitian (deviation {herm:e})")));
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() > tol::REPR || tr.im.abs() > tol::REPR {
            return Err(StateError::InvalidDensity(format!("trace {tr}")));
        }
        let rho = Self { m };
        let min = rho.min_eigenvalue();
        if min < -tol::DERIVED {
            return Err(StateError::InvalidDensity(format!("negative eigenvalue {min:e}")));
        }
        Ok(rho)
    }

    pub fn from_pure(psi: &PureState) -> Self {
        let v = nalgebra::DVector::from_column_slice(psi.amplitudes());
        Self { m: &v * v.adjoint() }
    }

    pub(crate) fn from_matrix_unchecked(m: DMatrix<C64>) -> Self {
        Self { m }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    /// Qubit count when the dimension is a power of two.
    pub fn n_qubits(&self) -> Option<usize> {
        let d = self.dim();
        d.is_power_of_two().then(|| d.trailing_zeros() as usize)
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.m[(i, j)]
    }

    pub fn trace(&self) -> C64 {
        self.m.trace()
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self.m.clone().symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues().first().copied().unwrap_or(0.0)
    }

    /// Real part of the determinant (the determinant of a Hermitian matrix is real).
    pub fn determinant(&self) -> f64 {
        self.m.determinant().re
    }

    /// Elementwise maximum deviation from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (&self.m - &other.m).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Sorted list of qubits that remain after tracing `traced`.
pub(crate) fn kept_indices(n: usize, traced: &[usize]) -> Result<Vec<usize>> {
    if let Some(&index) = traced.iter().find(|&&q| q >= n) {
        return Err(StateError::IndexOutOfRange { index, n });
    }
    let kept: Vec<usize> = (0..n).filter(|q| !traced.contains(q)).collect();
    if kept.is_empty() {
        return Err(StateError::InvalidParameter("cannot trace out every qubit".into()));
    }
    Ok(kept)
}

/// Places the bits of `value` (most significant first) on the qubit positions `qubits`.
pub(crate) fn scatter(n: usize, qubits: &[usize], value: usize) -> usize {
    let m = qubits.len();
    qubits.iter().enumerate().fold(0, |acc, (i, &q)| acc | (((value >> (m - 1 - i)) & 1) << (n - 1 - q)))
}

/// Partial trace of an `n_qubits` density matrix over `traced` (0-based qubit indices).
pub fn partial_trace(rho: &DensityMatrix, n_qubits: usize, traced: &[usize]) -> Result<DensityMatrix> {
    if rho.dim() != 1 << n_qubits {
        return Err(StateError::Dimension { n: n_qubits, expected: 1 << n_qubits, got: rho.dim() });
    }
    let kept = kept_indices(n_qubits, traced)?;
    let t: Vec<usize> = (0..n_qubits).filter(|q| !kept.contains(q)).collect();
    let dk = 1usize << kept.len();
    let idx: Vec<usize> = (0..dk).map(|a| scatter(n_qubits, &kept, a)).collect();
    let mut m = DMatrix::<C64>::zeros(dk, dk);
    for tv in 0..(1usize << t.len()) {
        let base = scatter(n_qubits, &t, tv);
        for a in 0..dk {
            for b in 0..dk {
                m[(a, b)] += rho.m[(base | idx[a], base | idx[b])];
            }
        }
    }
    Ok(DensityMatrix::from_matrix_unchecked(m))
}

/// `(Tr rho sx, Tr rho sy, Tr rho sz)` of a single-qubit density matrix.
pub fn bloch_vector(rho: &DensityMatrix) -> Result<BlochVector> {
    if rho.dim() != 2 {
        return Err(StateError::InvalidDensity(format!("expected 2x2, got {0}x{0}", rho.dim())));
    }
    let m = &rho.m;
    Ok(BlochVector::new(2.0 * m[(1, 0)].re, 2.0 * m[(1, 0)].im, (m[(0, 0)] - m[(1, 1)]).re))
}

fn pauli_mat(k: usize) -> [[C64; 2]; 2] {
    let o = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    match k {
        0 => [[o, one], [one, o]],
        1 => [[o, -i], [i, o]],
        _ => [[one, o], [o, -one]],
    }
}

/// `g_ij = Tr(rho_ab sigma_i (x) sigma_j)` of a two-qubit density matrix.
pub fn correlation_matrix(rho_ab: &DensityMatrix) -> Result<Matrix3<f64>> {
    if rho_ab.dim() != 4 {
        return Err(StateError::InvalidDensity(format!("expected 4x4, got {0}x{0}", rho_ab.dim())));
    }
    let mut g = Matrix3::zeros();
    for i in 0..3 {
        let a = pauli_mat(i);
        for j in 0..3 {
            let b = pauli_mat(j);
            let mut t = C64::new(0.0, 0.0);
            for r in 0..4 {
                for c in 0..4 {
                    let op = a[c >> 1][r >> 1] * b[c & 1][r & 1];
                    t += rho_ab.m[(r, c)] * op;
                }
            }
            g[(i, j)] = t.re;
        }
    }
    Ok(g)
}

/// Local Bloch vectors of both qubits and their correlation matrix.
pub fn two_qubit_bloch_data(rho_ab: &DensityMatrix) -> Result<(BlochVector, BlochVector, Matrix3<f64>)> {
    let g = correlation_matrix(rho_ab)?;
    let r1 = bloch_vector(&partial_trace(rho_ab, 2, &[1])?)?;
    let r2 = bloch_vector(&partial_trace(rho_ab, 2, &[0])?)?;
    Ok((r1, r2, g))
}
