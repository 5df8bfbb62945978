use qstate_core::random::positive_unit_vector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use variational::{oracle_lambda_max, OracleConfig};
use w_duality::*;

/// Half uniform on the positive sphere, half with one coefficient pushed toward the asymmetric region.
fn random_w(rng: &mut ChaCha8Rng) -> WStateN {
    let n = rng.random_range(3..=12);
    if rng.random_bool(0.5) {
        return WStateN::normalized(&positive_unit_vector(n, rng)).unwrap();
    }
    let big_sq: f64 = rng.random_range(0.2..0.5);
    let rest = positive_unit_vector(n - 1, rng);
    let mut c: Vec<f64> = rest.iter().map(|x| x * (1.0 - big_sq).sqrt()).collect();
    c.insert(rng.random_range(0..n), big_sq.sqrt());
    WStateN::normalized(&c).unwrap()
}

#[test]
fn agrees_with_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(401);
    let mut seen = std::collections::HashSet::new();
    for _ in 0..500 {
        let w = random_w(&mut rng);
        let o = lambda_max_w(&w).unwrap();
        seen.insert(o.region.label);
        let num = oracle_lambda_max(&w.to_state(), &OracleConfig::default()).unwrap();
        assert!((o.lambda - num.lambda).abs() < 1e-6, "{:?}: {} vs {}", w.coefficients(), o.lambda, num.lambda);
        let ov = qstate_core::product_overlap(&w.to_state(), &o.nearest).unwrap();
        assert!((ov - o.lambda).abs() < 1e-10);
    }
    for label in [RegionLabel::SymmetricHigh, RegionLabel::AsymmetricHigh, RegionLabel::SlightlyEntangled] {
        assert!(seen.contains(&label), "{label} not sampled");
    }
}
