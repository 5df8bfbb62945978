use qstate_core::{PureState, Qubit, C64};

/// Evaluates `<q_1 ... q_{k-1} q_{k+1} ... q_n | psi>` either densely or over
/// the nonzero amplitudes only, whichever is cheaper.
#[derive(Clone, Debug)]
pub struct Contractor<'a> {
    psi: &'a PureState,
    sparse: Option<Vec<(usize, C64)>>,
}

impl<'a> Contractor<'a> {
    pub fn new(psi: &'a PureState) -> Self {
        let n = psi.n_qubits();
        let nonzero: Vec<(usize, C64)> =
            psi.amplitudes().iter().enumerate().filter(|(_, a)| a.norm_sqr() > 0.0).map(|(i, a)| (i, *a)).collect();
        let sparse = (nonzero.len() * n <= 2 * psi.dim()).then_some(nonzero);
        Self { psi, sparse }
    }

    pub fn is_sparse(&self) -> bool {
        self.sparse.is_some()
    }

    pub fn n_qubits(&self) -> usize {
        self.psi.n_qubits()
    }

    pub fn contract(&self, factors: &[Qubit], k: usize) -> [C64; 2] {
        let Some(entries) = &self.sparse else {
            return self.psi.contract_except(factors, k);
        };
        let n = self.psi.n_qubits();
        let mut out = [C64::new(0.0, 0.0); 2];
        for &(i, a) in entries {
            let mut w = a;
            for (j, q) in factors.iter().enumerate() {
                if j != k {
                    w *= q.amplitude((i >> (n - 1 - j)) & 1).conj();
                }
            }
            out[(i >> (n - 1 - k)) & 1] += w;
        }
        out
    }

    /// `<q_1 ... q_n | psi>`.
    pub fn overlap(&self, factors: &[Qubit]) -> C64 {
        let c = self.contract(factors, 0);
        factors[0].alpha.conj() * c[0] + factors[0].beta.conj() * c[1]
    }
}
