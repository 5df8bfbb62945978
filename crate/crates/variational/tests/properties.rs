use proptest::prelude::*;
use qstate_core::random::{haar_product, local_unitaries, random_state};
use qstate_core::{apply_local_unitaries, product_overlap};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use variational::{oracle_lambda_max, pmax_from_reduced, stationary_iterate, OracleConfig};

fn config() -> OracleConfig {
    OracleConfig { n_starts: 24, ..OracleConfig::default() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn overlap_never_drops_below_start(seed in any::<u64>(), n in 2usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psi = random_state(n, &mut rng);
        let start = haar_product(n, &mut rng);
        let p = stationary_iterate(&psi, &start, &config()).unwrap();
        prop_assert!(p.lambda >= product_overlap(&psi, &start).unwrap() - 1e-12);
        prop_assert!(p.lambda <= 1.0);
    }

    #[test]
    fn lambda_is_local_unitary_invariant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psi = random_state(3, &mut rng);
        let rotated = apply_local_unitaries(&psi, &local_unitaries(3, &mut rng)).unwrap();
        let a = oracle_lambda_max(&psi, &config()).unwrap().lambda;
        let b = oracle_lambda_max(&rotated, &config()).unwrap().lambda;
        prop_assert!((a - b).abs() < 1e-9, "{} vs {}", a, b);
    }

    #[test]
    fn reduced_maximum_is_an_upper_bound_for_products(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psi = random_state(3, &mut rng);
        let pmax = pmax_from_reduced(&psi.reduced_density(&[2]).unwrap()).unwrap();
        for _ in 0..50 {
            let q = haar_product(3, &mut rng);
            prop_assert!(product_overlap(&psi, &q).unwrap().powi(2) <= pmax + 1e-12);
        }
    }
}
