use qstate_core::PureState;
use serde::{Deserialize, Serialize};

use crate::{DualityError, Result};

const NORM_TOL: f64 = 1e-10;

/// W-state coefficients kept in input order and in non-decreasing order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WStateN {
    original: Vec<f64>,
    sorted: Vec<f64>,
    /// `perm[i]` is the input index of `sorted[i]`.
    perm: Vec<usize>,
}

impl WStateN {
    /// Accepts `n >= 3` non-negative coefficients whose squares sum to one within `1e-10`.
    ///
    /// Among equal coefficients the lowest input index is sorted last, so it
    /// carries the largest coefficient.
    pub fn new(c: Vec<f64>) -> Result<Self> {
        if c.len() < 3 {
            return Err(DualityError::Invalid(format!("need at least 3 qubits, got {}", c.len())));
        }
        if let Some(x) = c.iter().find(|x| !(**x >= 0.0) || !x.is_finite()) {
            return Err(DualityError::Invalid(format!("coefficient {x} is negative or not finite")));
        }
        let norm_sq: f64 = c.iter().map(|x| x * x).sum();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(DualityError::Invalid(format!("squared coefficients sum to {norm_sq}, expected 1")));
        }
        let scale = norm_sq.sqrt().recip();
        let original: Vec<f64> = c.iter().map(|x| x * scale).collect();
        let mut perm: Vec<usize> = (0..original.len()).collect();
        perm.sort_by(|&i, &j| original[i].total_cmp(&original[j]).then(j.cmp(&i)));
        let sorted = perm.iter().map(|&i| original[i]).collect();
        Ok(Self { original, sorted, perm })
    }

    /// Normalizes a non-zero coefficient vector first.
    pub fn normalized(c: &[f64]) -> Result<Self> {
        let n = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(n > 0.0) || !n.is_finite() {
            return Err(DualityError::Invalid("coefficient vector has zero norm".into()));
        }
        Self::new(c.iter().map(|x| x / n).collect())
    }

    /// `m` coefficients `cos(theta)/sqrt(m)` followed by `k` coefficients `sin(theta)/sqrt(k)`.
    pub fn two_block(m: usize, k: usize, theta: f64) -> Result<Self> {
        if m == 0 || k == 0 {
            return Err(DualityError::Invalid("both blocks need at least one qubit".into()));
        }
        let a = theta.cos().abs() / (m as f64).sqrt();
        let b = theta.sin().abs() / (k as f64).sqrt();
        Self::new(std::iter::repeat_n(a, m).chain(std::iter::repeat_n(b, k)).collect())
    }

    /// The state whose last coefficient sits exactly on its first critical value,
    /// with the remaining coefficients proportional to `others`.
    pub fn on_first_boundary(others: &[f64]) -> Result<Self> {
        let n = others.iter().map(|x| x * x).sum::<f64>().sqrt();
        if others.len() < 2 || !(n > 0.0) {
            return Err(DualityError::Invalid("need at least two coefficients with non-zero norm".into()));
        }
        let unit: Vec<f64> = others.iter().map(|x| x / n).collect();
        let rho = crate::region::first_critical(&unit);
        let t_sq = rho * rho / (1.0 + rho * rho);
        let s = (1.0 - t_sq).sqrt();
        let mut c: Vec<f64> = unit.iter().map(|x| x * s).collect();
        c.push(t_sq.sqrt());
        Self::new(c)
    }

    pub fn n(&self) -> usize {
        self.original.len()
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.original
    }

    pub fn sorted(&self) -> &[f64] {
        &self.sorted
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn largest(&self) -> f64 {
        self.sorted[self.n() - 1]
    }

    /// Input index of the qubit carrying the largest coefficient.
    pub fn largest_index(&self) -> usize {
        self.perm[self.n() - 1]
    }

    /// `z` component of the Bloch vector of the largest-coefficient qubit, `1 - 2 c_n^2`.
    pub fn bz(&self) -> f64 {
        1.0 - 2.0 * self.largest().powi(2)
    }

    /// Reorders sorted-position values back to input order.
    pub(crate) fn unsort<T: Copy + Default>(&self, v: &[T]) -> Vec<T> {
        let mut out = vec![T::default(); self.n()];
        for (i, &p) in self.perm.iter().enumerate() {
            out[p] = v[i];
        }
        out
    }

    pub fn to_state(&self) -> PureState {
        PureState::w_type(&self.original).expect("normalized W coefficients")
    }
}
