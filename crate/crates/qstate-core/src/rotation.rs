use nalgebra::{Matrix2, Matrix3};

use crate::state::PureState;
use crate::{tol, Result, StateError, C64};

fn paulis() -> [Matrix2<C64>; 3] {
    let o = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    [Matrix2::new(o, one, one, o), Matrix2::new(o, -i, i, o), Matrix2::new(one, o, o, -one)]
}

fn unitarity_defect(u: &Matrix2<C64>) -> f64 {
    (u * u.adjoint() - Matrix2::identity()).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn is_unitary(u: &Matrix2<C64>, tolerance: f64) -> bool {
    unitarity_defect(u) <= tolerance
}

/// The SO(3) matrix `O` with `U sigma_a U^dag = O_ab sigma_b`.
pub fn rotation_from_unitary(u: &Matrix2<C64>) -> Result<Matrix3<f64>> {
    let d = unitarity_defect(u);
    if d > tol::REPR {
        return Err(StateError::NotUnitary(d));
    }
    let s = paulis();
    Ok(Matrix3::from_fn(|a, b| 0.5 * (u * s[a] * u.adjoint() * s[b]).trace().re))
}

/// `(U_1 (x) ... (x) U_n)|psi>`.
pub fn apply_local_unitaries(psi: &PureState, us: &[Matrix2<C64>]) -> Result<PureState> {
    let n = psi.n_qubits();
    if us.len() != n {
        return Err(StateError::QubitCount { expected: n, got: us.len() });
    }
    if let Some(d) = us.iter().map(unitarity_defect).find(|&d| d > tol::REPR) {
        return Err(StateError::NotUnitary(d));
    }
    let mut amps = psi.amplitudes().to_vec();
    for (k, u) in us.iter().enumerate() {
        let stride = 1usize << (n - 1 - k);
        for i in 0..amps.len() {
            if i & stride != 0 {
                continue;
            }
            let (a0, a1) = (amps[i], amps[i | stride]);
            amps[i] = u[(0, 0)] * a0 + u[(0, 1)] * a1;
            amps[i | stride] = u[(1, 0)] * a0 + u[(1, 1)] * a1;
        }
    }
    PureState::new(n, amps)
}
