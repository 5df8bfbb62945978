use gemkit::methods::gsd_pattern;
use gemkit::{compute, CliError, Evaluation, LambdaMaxMethod, MethodChoice, Registry};
use qstate_core::random::{local_unitaries, positive_unit_vector, random_state};
use qstate_core::{apply_local_unitaries, product_overlap, PureState};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use variational::OracleConfig;

fn registry() -> Registry {
    Registry::standard(OracleConfig::default())
}

fn rotated(psi: &PureState, rng: &mut ChaCha8Rng) -> PureState {
    apply_local_unitaries(psi, &local_unitaries(psi.n_qubits(), rng)).unwrap()
}

#[test]
fn standard_order() {
    assert_eq!(registry().names(), ["wtype", "symmetric", "fourterm", "w-n", "acin-type", "two-qubit", "oracle"]);
}

#[test]
fn dispatch_by_family() {
    let r = registry();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let four = PureState::from_real(3, &[0.0, 0.5, 0.5, 0.0, 0.5, 0.0, 0.0, 0.5]).unwrap();
    let cases = [
        (PureState::w(3).unwrap(), Some("wtype")),
        (PureState::ghz(3).unwrap(), Some("symmetric")),
        (four, Some("fourterm")),
        (PureState::w(6).unwrap(), Some("w-n")),
        (rotated(&PureState::ghz(3).unwrap(), &mut rng), Some("acin-type")),
        (random_state(2, &mut rng), Some("two-qubit")),
        (random_state(3, &mut rng), None),
        (random_state(4, &mut rng), None),
    ];
    for (psi, want) in cases {
        assert_eq!(r.analytic_for(&psi).map(|m| m.name()), want);
    }
}

#[test]
fn auto_falls_back_to_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let psi = random_state(3, &mut rng);
    let rep = compute(&registry(), &psi, MethodChoice::Auto).unwrap();
    assert_eq!(rep.method, "oracle");
    assert!(rep.oracle.as_ref().unwrap().converged);
    let err = compute(&registry(), &psi, MethodChoice::Analytic).unwrap_err();
    assert!(matches!(err, CliError::Unavailable(_)));
    assert_eq!(err.exit_code(), 3);
}

struct Fixed;

impl LambdaMaxMethod for Fixed {
    fn name(&self) -> &'static str {
        "fixed"
    }

    fn detect(&self, psi: &PureState) -> bool {
        psi.n_qubits() == 3
    }

    fn evaluate(&self, _psi: &PureState) -> gemkit::Result<Evaluation> {
        Ok(Evaluation { lambda_sq: 0.25, region: "test".into(), nearest: None, converged: true, residual: None })
    }
}

#[test]
fn registered_methods_take_part_in_dispatch() {
    let mut r = Registry::empty();
    r.register(Box::new(Fixed));
    let rep = compute(&r, &PureState::w(3).unwrap(), MethodChoice::Auto).unwrap();
    assert_eq!(rep.method, "analytic(fixed)");
    assert_eq!(rep.lambda_sq, 0.25);
    assert!(matches!(compute(&r, &PureState::w(4).unwrap(), MethodChoice::Auto), Err(CliError::Unavailable(_))));
}

#[test]
fn report_values() {
    let rep = compute(&registry(), &PureState::w(3).unwrap(), MethodChoice::Auto).unwrap();
    assert!((rep.lambda_sq - 4.0 / 9.0).abs() < 1e-12);
    assert_eq!(rep.method, "analytic(wtype)");
    assert!((rep.entanglement + rep.lambda_sq.ln()).abs() < 1e-15);
    assert!((rep.lambda * rep.lambda - rep.lambda_sq).abs() < 1e-15);
    let rep = compute(&registry(), &PureState::basis(3, 0).unwrap(), MethodChoice::Auto).unwrap();
    assert_eq!(rep.lambda_sq, 1.0);
    assert_eq!(rep.region, "product");
    assert_eq!(rep.entanglement, 0.0);
}

fn family_states(rng: &mut ChaCha8Rng) -> Vec<PureState> {
    let v = |n: usize, rng: &mut ChaCha8Rng| positive_unit_vector(n, rng);
    let mut out = Vec::new();
    for _ in 0..8 {
        let a = v(3, rng);
        out.push(PureState::from_real(3, &[0.0, a[2], a[1], 0.0, a[0], 0.0, 0.0, 0.0]).unwrap());
        let s = v(4, rng);
        out.push(PureState::from_real(3, &[s[0], s[2], 0.0, 0.0, 0.0, 0.0, s[3], s[1]]).unwrap());
        let f = v(4, rng);
        out.push(PureState::from_real(3, &[0.0, f[2], f[1], 0.0, f[0], 0.0, 0.0, f[3]]).unwrap());
        out.push(PureState::w_type(&v(5, rng)).unwrap());
        let g = v(2, rng);
        out.push(rotated(&PureState::from_real(3, &[g[0], 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, g[1]]).unwrap(), rng));
        out.push(random_state(2, rng));
    }
    out
}

#[test]
fn both_reports_small_gap_on_every_analytic_family() {
    let r = registry();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for psi in family_states(&mut rng) {
        let rep = compute(&r, &psi, MethodChoice::Both).unwrap();
        let gap = rep.gap.unwrap();
        assert!(gap < 1e-6, "{} gap {gap}", rep.method);
        assert!(rep.analytic_lambda_sq.is_some());
    }
}

#[test]
fn nearest_products_attain_the_value() {
    let r = registry();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut seen = 0;
    for psi in family_states(&mut rng) {
        let rep = compute(&r, &psi, MethodChoice::Analytic).unwrap();
        let m = r.analytic_for(&psi).unwrap();
        if let Some(p) = m.evaluate(&psi).unwrap().nearest {
            let o = product_overlap(&psi, &p).unwrap();
            assert!((o * o - rep.lambda_sq).abs() < 1e-8);
            seen += 1;
        }
    }
    assert!(seen >= 30, "{seen}");
}

#[test]
fn both_on_a_five_term_input_reports_the_leading_coefficient_gap() {
    let s = 11f64.sqrt();
    let psi = PureState::from_real(3, &[2.0 / s, 0.0, 0.0, 1.0 / s, 0.0, 1.0 / s, 1.0 / s, 2.0 / s]).unwrap();
    assert!(gsd_pattern(&psi).is_some());
    let rep = compute(&registry(), &psi, MethodChoice::Both).unwrap();
    let cand = rep.candidate.unwrap();
    assert!((cand.lambda_sq - 4.0 / 11.0).abs() < 1e-12);
    assert!((rep.lambda_sq - 36.0 / 55.0).abs() < 1e-10);
    assert!((rep.gap.unwrap() - (36.0 / 55.0 - 4.0 / 11.0)).abs() < 1e-10);
}

#[test]
fn loads_shorthands_and_rejects_garbage() {
    use gemkit::input::load_state;
    assert_eq!(load_state("w:3").unwrap(), PureState::w(3).unwrap());
    assert_eq!(load_state("ghz:4").unwrap(), PureState::ghz(4).unwrap());
    assert_eq!(load_state("basis:3:5").unwrap(), PureState::basis(3, 5).unwrap());
    let w = load_state("w:3,4,0").unwrap();
    assert!((w.amplitude(4).re - 0.6).abs() < 1e-15 && (w.amplitude(2).re - 0.8).abs() < 1e-15);
    let inline = load_state(r#"{"amplitudes": [[1, 0], [0, 0], [0, 0], [1, 0]]}"#).unwrap();
    assert!((inline.amplitude(3).re - 0.5f64.sqrt()).abs() < 1e-15);
    for bad in ["nope", "w:0,0,0", "ghz:x", "basis:3", "basis:2:9", r#"{"amplitudes": [[0, 0], [0, 0]]}"#] {
        let e = load_state(bad).unwrap_err();
        assert_eq!(e.exit_code(), 2, "{bad}");
    }
}
