use nalgebra::{DMatrix, DVector, Matrix2};

use crate::qubit::{ProductState, Qubit};
use crate::rotation::apply_local_unitaries;
use crate::state::PureState;
use crate::C64;

/// A state written as `e^{i chi} (diag(1, e^{i phi_1}) (x) ... ) |real>` with
/// `|real>` having non-negative real amplitudes.
#[derive(Clone, Debug, PartialEq)]
pub struct RealForm {
    pub state: PureState,
    pub phases: Vec<f64>,
    pub global: f64,
}

impl RealForm {
    /// Maps a product state of the real form back to the original frame.
    pub fn lift_product(&self, p: &ProductState) -> ProductState {
        let factors = p
            .factors
            .iter()
            .zip(&self.phases)
            .map(|(q, ph)| Qubit { alpha: q.alpha, beta: q.beta * C64::from_polar(1.0, *ph) })
            .collect();
        ProductState { factors }
    }

    pub fn phase_unitaries(&self) -> Vec<Matrix2<C64>> {
        self.phases
            .iter()
            .map(|ph| {
                Matrix2::new(C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::from_polar(1.0, *ph))
            })
            .collect()
    }
}

fn wrap(x: f64) -> f64 {
    let t = std::f64::consts::TAU;
    x - t * (x / t).round()
}

/// Removes amplitude phases with diagonal local unitaries when possible.
///
/// Amplitudes below `threshold` are treated as zero. Returns `None` when the
/// phase pattern carries a local-unitary invariant that cannot be removed.
pub fn real_form_by_local_phases(psi: &PureState, threshold: f64) -> Option<RealForm> {
    let n = psi.n_qubits();
    let support = psi.support(threshold);
    if support.is_empty() {
        return None;
    }
    let m = support.len();
    let a = DMatrix::from_fn(m, n + 1, |r, c| if c == 0 || (support[r] >> (n - c)) & 1 == 1 { 1.0 } else { 0.0 });
    let alpha: Vec<f64> = support.iter().map(|&b| psi.amplitude(b).arg()).collect();
    let svd = a.clone().svd(true, true);
    let try_solve = |shift: &[i32]| -> Option<DVector<f64>> {
        let rhs = DVector::from_fn(m, |r, _| alpha[r] + std::f64::consts::TAU * f64::from(shift[r]));
        let x = svd.solve(&rhs, 1e-12).ok()?;
        let res = &a * &x - &rhs;
        res.iter().all(|r| wrap(*r).abs() < 1e-9).then_some(x)
    };
    let mut shift = vec![0i32; m];
    let mut x = try_solve(&shift);
    if x.is_none() && m <= 6 {
        let combos = 3usize.pow(m as u32);
        for code in 1..combos {
            let mut c = code;
            for s in shift.iter_mut() {
                *s = (c % 3) as i32 - 1;
                c /= 3;
            }
            x = try_solve(&shift);
            if x.is_some() {
                break;
            }
        }
    }
    let x = x?;
    let mut amps = vec![C64::new(0.0, 0.0); psi.dim()];
    for &b in &support {
        amps[b] = C64::new(psi.amplitude(b).norm(), 0.0);
    }
    let state = PureState::new(n, amps).ok()?;
    let form = RealForm { state, phases: x.iter().skip(1).copied().collect(), global: x[0] };
    let back = apply_local_unitaries(&form.state, &form.phase_unitaries()).ok()?;
    (back.distance_up_to_phase(psi) < 1e-9).then_some(form)
}
