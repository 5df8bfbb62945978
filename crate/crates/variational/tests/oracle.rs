use qstate_core::random::{haar_product, random_state};
use qstate_core::{product_overlap, PureState, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use variational::{oracle_lambda_max, oracle_report, stationarity_residual, OracleConfig, StartKind};

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

#[test]
fn w_state_lambda_sq_is_four_ninths() {
    let p = oracle_lambda_max(&PureState::w(3).unwrap(), &cfg()).unwrap();
    assert!(p.converged);
    assert!((p.lambda_sq() - 4.0 / 9.0).abs() < 1e-9, "{}", p.lambda_sq());
}

#[test]
fn equal_four_term_state_lambda_sq_is_half() {
    let psi = PureState::from_real(3, &[0.0, 0.5, 0.5, 0.0, 0.5, 0.0, 0.0, 0.5]).unwrap();
    let p = oracle_lambda_max(&psi, &cfg()).unwrap();
    assert!((p.lambda_sq() - 0.5).abs() < 1e-9, "{}", p.lambda_sq());
}

#[test]
fn ghz_lambda_sq_is_half() {
    let p = oracle_lambda_max(&PureState::ghz(3).unwrap(), &cfg()).unwrap();
    assert!((p.lambda_sq() - 0.5).abs() < 1e-9);
}

#[test]
fn symmetric_five_term_state_regression() {
    let s = 11f64.sqrt();
    let psi = PureState::from_real(3, &[2.0 / s, 0.0, 0.0, 1.0 / s, 0.0, 1.0 / s, 1.0 / s, 2.0 / s]).unwrap();
    let p = oracle_lambda_max(&psi, &cfg()).unwrap();
    assert!((p.lambda_sq() - 36.0 / 55.0).abs() < 1e-9, "{}", p.lambda_sq());
    let ratios: Vec<f64> = p.product.factors.iter().map(|q| (q.beta / q.alpha).norm()).collect();
    for r in ratios {
        assert!((r - 2.0).abs() < 1e-6, "tan theta = {r}");
    }
}

#[test]
fn product_state_overlap_is_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let prod = haar_product(4, &mut rng);
    let psi = PureState::product(&prod);
    let p = oracle_lambda_max(&psi, &cfg()).unwrap();
    assert!((p.lambda - 1.0).abs() < 1e-12);
}

#[test]
fn dominates_random_product_overlaps() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [3usize, 4] {
        for _ in 0..3 {
            let psi = random_state(n, &mut rng);
            let best = oracle_lambda_max(&psi, &cfg()).unwrap();
            for _ in 0..1000 {
                let q = haar_product(n, &mut rng);
                assert!(product_overlap(&psi, &q).unwrap() <= best.lambda + 1e-12);
            }
        }
    }
}

#[test]
fn result_is_stationary_and_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let psi = random_state(4, &mut rng);
    let config = OracleConfig { seed: 42, ..cfg() };
    let a = oracle_report(&psi, &config).unwrap();
    let b = oracle_report(&psi, &config).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.starts.len(), 4 + 64);
    assert_eq!(a.starts[0].kind, StartKind::Basis(0));
    assert_eq!(a.starts[4].kind, StartKind::Haar);
    let (lambda, residual) = stationarity_residual(&psi, &a.best.product).unwrap();
    assert!((lambda - a.best.lambda).abs() < 1e-12);
    assert!(residual < 1e-9);
}

#[test]
fn w_state_factors_are_real_direction_cosines() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in [3usize, 5, 8] {
        let coeffs: Vec<f64> = (0..n).map(|_| rng.random_range(0.5..1.0)).collect();
        let psi = PureState::w_type(&coeffs).unwrap();
        let p = oracle_lambda_max(&psi, &cfg()).unwrap();
        let phase0 = (p.product.factors[0].beta / p.product.factors[0].alpha).arg();
        let mut sum = 0.0;
        for q in &p.product.factors {
            let ratio: C64 = q.beta / q.alpha;
            let d = (ratio.arg() - phase0).rem_euclid(std::f64::consts::TAU);
            assert!(d.min(std::f64::consts::TAU - d) < 1e-8);
            sum += q.beta.norm_sqr();
        }
        assert!((sum - 1.0).abs() < 1e-9, "n = {n}: {sum}");
    }
}

#[test]
fn three_qubit_range() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let psi = random_state(3, &mut rng);
        let l2 = oracle_lambda_max(&psi, &OracleConfig { n_starts: 16, ..cfg() }).unwrap().lambda_sq();
        assert!(l2 > 0.25 && l2 <= 1.0 + 1e-12);
    }
}

#[test]
fn sparse_and_dense_paths_agree() {
    let psi = PureState::w(6).unwrap();
    let sparse = oracle_lambda_max(&psi, &cfg()).unwrap();
    let mut amps = psi.amplitudes().to_vec();
    amps[0] = C64::new(1e-300, 0.0);
    for a in amps.iter_mut().skip(40).take(6) {
        *a = C64::new(1e-300, 0.0);
    }
    let dense_psi = PureState::new(6, amps).unwrap();
    let dense = oracle_lambda_max(&dense_psi, &cfg()).unwrap();
    assert!((sparse.lambda - dense.lambda).abs() < 1e-12);
}
