//! Haar-random single-qubit states, local unitaries and dense states.

use nalgebra::Matrix2;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::qubit::{ProductState, Qubit};
use crate::state::PureState;
use crate::C64;

fn gaussian_c64<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn haar_qubit<R: Rng + ?Sized>(rng: &mut R) -> Qubit {
    loop {
        if let Ok(q) = Qubit::new(gaussian_c64(rng), gaussian_c64(rng)) {
            return q;
        }
    }
}

pub fn haar_product<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ProductState {
    ProductState { factors: (0..n).map(|_| haar_qubit(rng)).collect() }
}

/// Haar-distributed element of U(2).
pub fn haar_unitary<R: Rng + ?Sized>(rng: &mut R) -> Matrix2<C64> {
    let q = haar_qubit(rng);
    let phase = C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
    Matrix2::new(q.alpha, -q.beta.conj() * phase, q.beta, q.alpha.conj() * phase)
}

/// Haar-distributed element of SU(2).
pub fn haar_special_unitary<R: Rng + ?Sized>(rng: &mut R) -> Matrix2<C64> {
    let q = haar_qubit(rng);
    Matrix2::new(q.alpha, -q.beta.conj(), q.beta, q.alpha.conj())
}

pub fn local_unitaries<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Matrix2<C64>> {
    (0..n).map(|_| haar_unitary(rng)).collect()
}

/// Uniformly random dense pure state.
pub fn random_state<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PureState {
    loop {
        let amps = (0..1usize << n).map(|_| gaussian_c64(rng)).collect();
        if let Ok(s) = PureState::new(n, amps) {
            return s;
        }
    }
}

/// Random point on the positive orthant of the unit sphere in `dim` dimensions.
pub fn positive_unit_vector<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.sample::<f64, _>(StandardNormal).abs()).collect();
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-8 {
            return v.into_iter().map(|x| x / n).collect();
        }
    }
}
