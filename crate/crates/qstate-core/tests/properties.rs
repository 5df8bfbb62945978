use proptest::prelude::*;
use qstate_core::random::{haar_product, local_unitaries, random_state};
use qstate_core::{
    apply_local_unitaries, bloch_decomposition3, partial_trace, real_form_by_local_phases, two_qubit_bloch_data,
    PureState, C64,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn states_are_normalized(seed in any::<u64>(), n in 1usize..7) {
        let psi = random_state(n, &mut ChaCha8Rng::seed_from_u64(seed));
        let norm: f64 = psi.amplitudes().iter().map(|a| a.norm_sqr()).sum();
        prop_assert!((norm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn reduced_states_are_valid(seed in any::<u64>(), n in 2usize..6) {
        let psi = random_state(n, &mut ChaCha8Rng::seed_from_u64(seed));
        let rho = partial_trace(&psi.density(), n, &[n - 1]).unwrap();
        prop_assert!((rho.trace().re - 1.0).abs() < 1e-12);
        prop_assert!(rho.min_eigenvalue() > -1e-10);
    }

    #[test]
    fn bloch_reconstruction(seed in any::<u64>()) {
        let psi = random_state(3, &mut ChaCha8Rng::seed_from_u64(seed));
        let b = bloch_decomposition3(&psi).unwrap();
        prop_assert!(b.reconstruct().max_abs_diff(&psi.density()) < 1e-10);
    }

    #[test]
    fn lu_invariant_norms(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psi = random_state(3, &mut rng);
        let out = apply_local_unitaries(&psi, &local_unitaries(3, &mut rng)).unwrap();
        let (a, b) = (bloch_decomposition3(&psi).unwrap(), bloch_decomposition3(&out).unwrap());
        for i in 0..3 {
            prop_assert!((a.v_norms_sq()[i] - b.v_norms_sq()[i]).abs() < 1e-10);
            prop_assert!((a.h_norms_sq()[i] - b.h_norms_sq()[i]).abs() < 1e-10);
        }
        prop_assert!((a.g_norm_sq() - b.g_norm_sq()).abs() < 1e-10);
        prop_assert!((a.h3_v1_v2() - b.h3_v1_v2()).abs() < 1e-10);
    }

    #[test]
    fn product_overlap_from_contraction(seed in any::<u64>(), n in 2usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psi = random_state(n, &mut rng);
        let p = haar_product(n, &mut rng);
        let full = psi.overlap_with_product(&p);
        for k in 0..n {
            let c = psi.contract_except(&p.factors, k);
            let via = p.factors[k].alpha.conj() * c[0] + p.factors[k].beta.conj() * c[1];
            prop_assert!((via - full).norm() < 1e-12);
        }
    }

    #[test]
    fn two_qubit_data_is_bounded(seed in any::<u64>()) {
        let psi = random_state(3, &mut ChaCha8Rng::seed_from_u64(seed));
        let (r1, r2, _) = two_qubit_bloch_data(&psi.reduced_density(&[2]).unwrap()).unwrap();
        prop_assert!(r1.norm() <= 1.0 + 1e-12 && r2.norm() <= 1.0 + 1e-12);
    }

    #[test]
    fn diagonal_phases_are_removed(seed in any::<u64>(), phases in prop::array::uniform3(-3.0f64..3.0)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base: Vec<f64> = qstate_core::random::positive_unit_vector(4, &mut rng);
        let real = PureState::from_real(3, &[0.0, base[0], base[1], 0.0, base[2], 0.0, 0.0, base[3]]).unwrap();
        let us: Vec<_> = phases.iter().map(|p| nalgebra::Matrix2::new(C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::from_polar(1.0, *p))).collect();
        let psi = apply_local_unitaries(&real, &us).unwrap();
        let form = real_form_by_local_phases(&psi, 1e-12).unwrap();
        prop_assert!(form.state.approx_eq_up_to_phase(&real, 1e-9));
    }
}
