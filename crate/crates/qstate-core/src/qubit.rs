use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::{tol, Result, StateError, C64};

/// Real 3-vector of Pauli expectation values.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub const fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0)
    }

    pub fn from_vector(v: &Vector3<f64>) -> Self {
        Self::new(v[0], v[1], v[2])
    }

    pub fn to_vector(self) -> Vector3<f64> {
        Vector3::new(self.x, self.y, self.z)
    }

    pub fn norm(self) -> f64 {
        self.to_vector().norm()
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn as_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

/// Normalized single-qubit state `alpha|0> + beta|1>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Qubit {
    pub alpha: C64,
    pub beta: C64,
}

impl Qubit {
    /// Builds a qubit from unnormalized amplitudes.
    pub fn new(alpha: C64, beta: C64) -> Result<Self> {
        let norm = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(StateError::ZeroNorm);
        }
        Ok(Self { alpha: alpha / norm, beta: beta / norm })
    }

    pub fn from_real(alpha: f64, beta: f64) -> Result<Self> {
        Self::new(C64::new(alpha, 0.0), C64::new(beta, 0.0))
    }

    pub fn zero() -> Self {
        Self { alpha: C64::new(1.0, 0.0), beta: C64::new(0.0, 0.0) }
    }

    pub fn one() -> Self {
        Self { alpha: C64::new(0.0, 0.0), beta: C64::new(1.0, 0.0) }
    }

    /// `cos(theta)|0> + e^{i phi} sin(theta)|1>`.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        Self { alpha: C64::new(theta.cos(), 0.0), beta: C64::from_polar(theta.sin(), phi) }
    }

    /// The pure state whose Bloch vector points along `v`.
    pub fn from_bloch(v: BlochVector) -> Result<Self> {
        let n = v.norm();
        if !(n > 0.0) {
            return Err(StateError::ZeroNorm);
        }
        let z = (v.z / n).clamp(-1.0, 1.0);
        let polar = z.acos();
        let azim = v.y.atan2(v.x);
        Ok(Self { alpha: C64::new((polar / 2.0).cos(), 0.0), beta: C64::from_polar((polar / 2.0).sin(), azim) })
    }

    pub fn bloch(&self) -> BlochVector {
        let c = self.alpha.conj() * self.beta;
        BlochVector::new(2.0 * c.re, 2.0 * c.im, self.alpha.norm_sqr() - self.beta.norm_sqr())
    }

    /// The state orthogonal to `self`, `-conj(beta)|0> + conj(alpha)|1>`.
    pub fn orthogonal(&self) -> Self {
        Self { alpha: -self.beta.conj(), beta: self.alpha.conj() }
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> C64 {
        self.alpha.conj() * other.alpha + self.beta.conj() * other.beta
    }

    pub fn with_phase(&self, phase: f64) -> Self {
        let p = C64::from_polar(1.0, phase);
        Self { alpha: self.alpha * p, beta: self.beta * p }
    }

    pub fn amplitude(&self, bit: usize) -> C64 {
        if bit == 0 {
            self.alpha
        } else {
            self.beta
        }
    }

    pub fn as_array(&self) -> [C64; 2] {
        [self.alpha, self.beta]
    }

    pub fn is_normalized(&self) -> bool {
        ((self.alpha.norm_sqr() + self.beta.norm_sqr()) - 1.0).abs() <= tol::REPR
    }
}

/// A fully separable n-qubit state stored as its single-qubit factors.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductState {
    pub factors: Vec<Qubit>,
}

impl ProductState {
    pub fn new(factors: Vec<Qubit>) -> Result<Self> {
        if factors.is_empty() {
            return Err(StateError::InvalidParameter("product state needs at least one factor".into()));
        }
        if let Some(q) = factors.iter().find(|q| !q.is_normalized()) {
            return Err(StateError::InvalidParameter(format!("factor {q:?} is not normalized")));
        }
        Ok(Self { factors })
    }

    /// Computational basis product `|b1 ... bn>` for the bits of `index`.
    pub fn basis(n: usize, index: usize) -> Self {
        let factors =
            (0..n).map(|k| if (index >> (n - 1 - k)) & 1 == 1 { Qubit::one() } else { Qubit::zero() }).collect();
        Self { factors }
    }

    pub fn n_qubits(&self) -> usize {
        self.factors.len()
    }

    /// Amplitude `<i|q1 ... qn>`.
    pub fn amplitude(&self, index: usize) -> C64 {
        let n = self.factors.len();
        self.factors
            .iter()
            .enumerate()
            .fold(C64::new(1.0, 0.0), |acc, (k, q)| acc * q.amplitude((index >> (n - 1 - k)) & 1))
    }

    pub fn to_amplitudes(&self) -> Vec<C64> {
        let mut amps = vec![C64::new(1.0, 0.0)];
        for q in &self.factors {
            let mut next = Vec::with_capacity(amps.len() * 2);
            for a in &amps {
                next.push(a * q.alpha);
                next.push(a * q.beta);
            }
            amps = next;
        }
        amps
    }

    pub fn bloch_vectors(&self) -> Vec<BlochVector> {
        self.factors.iter().map(Qubit::bloch).collect()
    }
}
