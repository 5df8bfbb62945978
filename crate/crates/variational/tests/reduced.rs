use nalgebra::Matrix3;
use qstate_core::random::random_state;
use qstate_core::{two_qubit_bloch_data, BlochVector, PureState};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use variational::{
    oracle_lambda_max, pmax_from_reduced, solve_lagrange_from_reduced, solve_lagrange_general, OracleConfig,
};

fn rho_ab(psi: &PureState) -> qstate_core::DensityMatrix {
    psi.reduced_density(&[2]).unwrap()
}

#[test]
fn reference_reduced_values() {
    assert!((pmax_from_reduced(&rho_ab(&PureState::ghz(3).unwrap())).unwrap() - 0.5).abs() < 1e-12);
    assert!((pmax_from_reduced(&rho_ab(&PureState::w(3).unwrap())).unwrap() - 4.0 / 9.0).abs() < 1e-12);
    assert!((pmax_from_reduced(&rho_ab(&PureState::basis(3, 0).unwrap())).unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn reduced_maximum_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..25 {
        let psi = random_state(3, &mut rng);
        let oracle = oracle_lambda_max(&psi, &OracleConfig::default()).unwrap().lambda_sq();
        let reduced = pmax_from_reduced(&rho_ab(&psi)).unwrap();
        assert!((oracle - reduced).abs() < 1e-6, "{oracle} vs {reduced}");
    }
}

#[test]
fn lagrange_product_state() {
    let sys = solve_lagrange_from_reduced(&rho_ab(&PureState::basis(3, 0).unwrap())).unwrap();
    let best = sys.best().unwrap();
    assert!((best.value - 1.0).abs() < 1e-10);
    assert!((best.s1.z - 1.0).abs() < 1e-9 && (best.s2.z - 1.0).abs() < 1e-9);
}

#[test]
fn lagrange_solutions_satisfy_the_system() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..5 {
        let psi = random_state(3, &mut rng);
        let (r1, r2, g) = two_qubit_bloch_data(&rho_ab(&psi)).unwrap();
        let sys = solve_lagrange_general(&r1, &r2, &g);
        assert!(!sys.solutions.is_empty());
        for s in &sys.solutions {
            let (v1, v2) = (s.s1.to_vector(), s.s2.to_vector());
            assert!((v1.norm() - 1.0).abs() < 1e-10 && (v2.norm() - 1.0).abs() < 1e-10);
            let e1 = r1.to_vector() + g * v2 - v1 * s.lambda1;
            let e2 = r2.to_vector() + g.transpose() * v1 - v2 * s.lambda2;
            assert!(e1.norm() < 1e-10 && e2.norm() < 1e-10);
        }
        let best = sys.best().unwrap().value;
        let reduced = pmax_from_reduced(&rho_ab(&psi)).unwrap();
        assert!((best - reduced).abs() < 1e-9);
    }
}

#[test]
fn wtype_acute_branch_multipliers() {
    let (a, b) = (0.5f64, 0.6f64);
    let c = (1.0 - a * a - b * b).sqrt();
    let psi = PureState::w_type(&[a, b, c]).unwrap();
    let sys = solve_lagrange_from_reduced(&rho_ab(&psi)).unwrap();
    let best = sys.best().unwrap();
    assert!(best.free_family);
    let (r1, r2, r3) = (b * b + c * c - a * a, a * a + c * c - b * b, a * a + b * b - c * c);
    let w = 2.0 * a * b;
    let l1 = w * ((w * w + r1 * r1 - r3 * r3) / (w * w + r2 * r2 - r3 * r3)).sqrt();
    let l2 = w * ((w * w + r2 * r2 - r3 * r3) / (w * w + r1 * r1 - r3 * r3)).sqrt();
    assert!((best.lambda1 - l1).abs() < 1e-9, "{} vs {l1}", best.lambda1);
    assert!((best.lambda2 - l2).abs() < 1e-9, "{} vs {l2}", best.lambda2);
    assert!((best.lambda1 * best.lambda2 - w * w).abs() < 1e-9);
}

fn cubic_real_roots(theta: f64) -> Vec<f64> {
    let (a, b, c, d) = (theta.sin(), 2.0 * theta.cos(), -2.0 * theta.sin(), -theta.cos());
    let companion = Matrix3::new(-b / a, -c / a, -d / a, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0);
    companion.complex_eigenvalues().iter().filter(|z| z.im.abs() < 1e-9).map(|z| z.re).collect()
}

#[test]
fn w_flipped_w_cubic_roots_are_solutions() {
    for theta in [0.3f64, std::f64::consts::FRAC_PI_8, 1.1] {
        let (ct, st) = (theta.cos() / 3f64.sqrt(), theta.sin() / 3f64.sqrt());
        let psi = PureState::from_real(3, &[0.0, ct, ct, st, ct, st, st, 0.0]).unwrap();
        let (r1, r2, g) = two_qubit_bloch_data(&rho_ab(&psi)).unwrap();
        let sys = solve_lagrange_general(&r1, &r2, &g);
        let roots = cubic_real_roots(theta);
        assert!(!roots.is_empty());
        for t in roots {
            let phi = t.atan();
            let s = nalgebra::Vector3::new((2.0 * phi).sin(), 0.0, (2.0 * phi).cos());
            let found = sys
                .solutions
                .iter()
                .any(|x| (x.s1.to_vector() - s).norm() < 1e-7 && (x.s2.to_vector() - s).norm() < 1e-7);
            assert!(found, "theta {theta}: root {t} missing");
        }
    }
}

#[test]
fn maximizer_handles_zero_data() {
    let sys = solve_lagrange_general(&BlochVector::zero(), &BlochVector::zero(), &Matrix3::identity());
    assert!((sys.best().unwrap().value - 0.5).abs() < 1e-10);
}
