use qstate_core::{BlochVector, ProductState, PureState, Qubit};

use crate::Result;

/// Completes unit Bloch vectors of qubits 0 and 1 to the best product state:
/// the third factor is the normalized contraction `<q_1 q_2|psi>`.
pub fn product_from_bloch_pair(psi: &PureState, s1: &BlochVector, s2: &BlochVector) -> Result<ProductState> {
    let q1 = Qubit::from_bloch(*s1)?;
    let q2 = Qubit::from_bloch(*s2)?;
    let c = psi.contract_except(&[q1, q2, Qubit::zero()], 2);
    let q3 = Qubit::new(c[0], c[1]).unwrap_or_else(|_| Qubit::zero());
    Ok(ProductState::new(vec![q1, q2, q3])?)
}
