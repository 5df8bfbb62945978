use std::f64::consts::{FRAC_1_SQRT_2, PI};

use lu_invariants::*;
use qstate_core::{AcinParams, PureState, StateError};
use three_qubit_analytic::{lambda_sq_fourterm, FourTerm, RegionLabel3};

const TOL: f64 = 1e-10;

fn acin(l: [f64; 5], phi: f64) -> AcinParams {
    AcinParams::new(l, phi).unwrap()
}

fn normalized(l: [f64; 5]) -> [f64; 5] {
    let n = l.iter().map(|x| x * x).sum::<f64>().sqrt();
    l.map(|x| x / n)
}

fn assert_j(ji: &LuInvariants, expected: [f64; 5], tol: f64) {
    let d = ji.as_array().iter().zip(expected).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    assert!(d <= tol, "{ji:?} vs {expected:?}");
}

#[test]
fn ghz_invariants() {
    let p = acin([FRAC_1_SQRT_2, 0.0, 0.0, 0.0, FRAC_1_SQRT_2], 0.0);
    assert_j(&invariants_from_acin(&p), [0.0, 0.0, 0.0, 0.25, 0.0], TOL);
    let from_state = invariants_from_state(&PureState::ghz(3).unwrap()).unwrap();
    assert_j(&from_state, [0.0, 0.0, 0.0, 0.25, 0.0], 1e-12);
}

#[test]
fn basis_state_invariants_vanish() {
    let p = acin([1.0, 0.0, 0.0, 0.0, 0.0], 0.0);
    assert_j(&invariants_from_acin(&p), [0.0; 5], 0.0);
    let psi = PureState::basis(3, 0).unwrap();
    assert_j(&invariants_from_state(&psi).unwrap(), [0.0; 5], 1e-12);
}

#[test]
fn type3a_relation() {
    let l = normalized([0.7, 0.0, 0.4, 0.55, 0.0]);
    let j = invariants_from_acin(&acin(l, 0.3));
    let s = (j.j1 * j.j2 * j.j3).sqrt();
    assert!((j.j1 * j.j2 + j.j1 * j.j3 + j.j2 * j.j3 - s).abs() < TOL);
    assert!((s - j.j5 / 2.0).abs() < TOL);
}

#[test]
fn w_embedding_has_equal_invariants() {
    let t = 1.0 / 3f64.sqrt();
    let expected = [1.0 / 9.0, 1.0 / 9.0, 1.0 / 9.0, 0.0, 2.0 / 27.0];
    assert_j(&invariants_from_acin(&acin([t, 0.0, t, t, 0.0], 0.0)), expected, TOL);
    assert_j(&invariants_from_state(&PureState::w(3).unwrap()).unwrap(), expected, 1e-12);
}

#[test]
fn state_route_matches_acin_route() {
    let cases = [
        ([0.5, 0.3, 0.4, 0.6, 0.2], 0.7),
        ([0.8, 0.1, 0.2, 0.3, 0.4], PI),
        ([0.3, 0.6, 0.1, 0.5, 0.5], 0.0),
        ([0.2, 0.2, 0.2, 0.2, 0.9], 2.5),
    ];
    for (l, phi) in cases {
        let p = acin(normalized(l), phi);
        let fit = fit_invariants(&p.to_state()).unwrap();
        assert!(fit.residual < 1e-12);
        assert!(fit.invariants.max_abs_diff(&invariants_from_acin(&p)) < 1e-9);
    }
}

#[test]
fn hyperdeterminant_of_standard_form_is_l0_l4_squared() {
    let p = acin(normalized([0.5, 0.3, 0.4, 0.6, 0.2]), 1.2);
    let [l0, .., l4] = p.lambda;
    let d = hyperdeterminant(&p.to_state()).unwrap();
    assert!((d.norm() - l0 * l0 * l4 * l4).abs() < 1e-14);
    assert!(matches!(
        hyperdeterminant(&PureState::w(4).unwrap()),
        Err(LuError::State(StateError::QubitCount { expected: 3, got: 4 }))
    ));
}

#[test]
fn lambda0_roots() {
    let ghz = LuInvariants::new(0.0, 0.0, 0.0, 0.25, 0.0);
    let r = lambda0_candidates(&ghz);
    assert_eq!(r.roots.len(), 1);
    assert!((r.roots[0] - 0.5).abs() < 1e-12);
    assert!(!r.degenerate);

    let zero = lambda0_candidates(&LuInvariants::ZERO);
    assert!(zero.roots.is_empty());
    assert!(zero.degenerate);
}

#[test]
fn generic_real_form_has_two_admissible_roots() {
    let p = acin(normalized([0.45, 0.35, 0.5, 0.4, 0.5]), 0.0);
    let ji = invariants_from_acin(&p);
    assert_eq!(lambda0_candidates(&ji).roots.len(), 2);
    let forms = acin_from_invariants(&ji);
    assert_eq!(forms.len(), 2);
    assert!(forms.iter().any(|f| (f.lambda[0] - p.lambda[0]).abs() < 1e-9));
    for f in &forms {
        let rebuilt = invariants_from_state(&f.to_state()).unwrap();
        assert!(rebuilt.max_abs_diff(&ji) < 1e-9);
    }
}

#[test]
fn classification_examples() {
    let l = FRAC_1_SQRT_2;
    assert_eq!(classify_type(&acin([l, 0.0, 0.0, 0.0, l], 0.0)), StateType::Type2b);
    assert_eq!(classify_type(&acin(normalized([0.6, 0.0, 0.5, 0.4, 0.0]), 0.0)), StateType::Type3a);
    assert_eq!(classify_type(&acin(normalized([0.6, 0.3, 0.5, 0.4, 0.2]), 0.0)), StateType::Type5);
    assert_eq!(classify_type(&acin(normalized([0.6, 0.3, 0.5, 0.4, 0.2]), PI)), StateType::Type5);
    assert_eq!(classify_type(&acin(normalized([0.6, 0.3, 0.5, 0.4, 0.2]), 1.0)), StateType::Generic);
    assert_eq!(classify_type(&acin([1.0, 0.0, 0.0, 0.0, 0.0], 0.0)), StateType::Type1);
    assert_eq!(classify_type(&acin([0.6, 0.8, 0.0, 0.0, 0.0], 0.4)), StateType::Type1);
    assert_eq!(classify_type(&acin([0.0, 0.6, 0.0, 0.0, 0.8], 0.0)), StateType::Type2aJ1);
    assert_eq!(classify_type(&acin([0.6, 0.0, 0.8, 0.0, 0.0], 0.0)), StateType::Type2aJ2);
    assert_eq!(classify_type(&acin(normalized([0.6, 0.5, 0.0, 0.7, 0.0]), 0.0)), StateType::Type2aJ3);
    assert_eq!(classify_type(&acin(normalized([0.6, 0.0, 0.0, 0.7, 0.3]), 0.0)), StateType::Type3b12);
    assert_eq!(classify_type(&acin(normalized([0.6, 0.0, 0.7, 0.0, 0.3]), 0.0)), StateType::Type3b13);
    assert_eq!(classify_type(&acin(normalized([0.6, 0.4, 0.0, 0.0, 0.3]), 0.5)), StateType::Type3b23);
    assert_eq!(classify_type(&acin(normalized([0.6, 0.4, 0.3, 0.5, 0.0]), 0.5)), StateType::Type4a);
    assert_eq!(classify_type(&acin(normalized([0.6, 0.4, 0.0, 0.5, 0.3]), 0.5)), StateType::Type4bL2);
    assert_eq!(classify_type(&acin(normalized([0.6, 0.4, 0.3, 0.0, 0.3]), 0.5)), StateType::Type4bL3);
    assert_eq!(classify_type(&acin(normalized([0.6, 0.0, 0.3, 0.5, 0.3]), 0.0)), StateType::Type4c);
}

#[test]
fn classify_state_recovers_type() {
    let (t, _, form) = classify_state(&PureState::w(3).unwrap()).unwrap();
    assert_eq!(t, StateType::Type3a);
    assert!(form.is_some());
    let (t, ..) = classify_state(&PureState::ghz(3).unwrap()).unwrap();
    assert_eq!(t, StateType::Type2b);
    let (t, ..) = classify_state(&PureState::basis(3, 5).unwrap()).unwrap();
    assert_eq!(t, StateType::Type1);
}

#[test]
fn table_values() {
    let ghz = LuInvariants::new(0.0, 0.0, 0.0, 0.25, 0.0);
    assert_eq!(pmax_by_type(StateType::Type2b, &ghz), Pmax::Closed(0.5));
    let w = LuInvariants::new(1.0 / 9.0, 1.0 / 9.0, 1.0 / 9.0, 0.0, 2.0 / 27.0);
    assert!((pmax_by_type(StateType::Type3a, &w).value().unwrap() - 4.0 / 9.0).abs() < 1e-14);
    assert_eq!(pmax_by_type(StateType::Type1, &LuInvariants::ZERO), Pmax::Closed(1.0));
    for t in [StateType::Type4a, StateType::Type4bL2, StateType::Type4bL3, StateType::Type4c, StateType::Type5] {
        assert_eq!(pmax_by_type(t, &w), Pmax::Unavailable);
    }
}

#[test]
fn table_limits() {
    // Tri-Bell large-coefficient branch reduces to the biseparable forms.
    for j in [0.0, 0.05, 0.2, 0.25] {
        let only = |k: usize| {
            let mut a = [0.0; 5];
            a[k] = j;
            LuInvariants::new(a[0], a[1], a[2], a[3], a[4])
        };
        let t3 = pmax_by_type(StateType::Type3a, &only(0)).value().unwrap();
        assert!((t3 - pmax_by_type(StateType::Type2aJ1, &only(0)).value().unwrap()).abs() < 1e-14);
        let t3 = pmax_by_type(StateType::Type3a, &only(1)).value().unwrap();
        assert!((t3 - pmax_by_type(StateType::Type2aJ2, &only(1)).value().unwrap()).abs() < 1e-14);
        for (t, k) in [(StateType::Type3b12, 2), (StateType::Type3b13, 1), (StateType::Type3b23, 0)] {
            let v = pmax_by_type(t, &only(3)).value().unwrap();
            assert!((v - pmax_by_type(StateType::Type2b, &only(3)).value().unwrap()).abs() < 1e-14);
            let v = pmax_by_type(t, &only(k)).value().unwrap();
            assert!((v - 0.5 * (1.0 + (1.0 - 4.0 * j).sqrt())).abs() < 1e-14);
        }
    }
}

#[test]
fn two_qubit_values() {
    let bell = PureState::from_real(2, &[FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2]).unwrap();
    assert!((two_qubit_pmax(&bell).unwrap() - 0.5).abs() < 1e-15);
    assert!((two_qubit_invariant(&bell).unwrap().j - 0.25).abs() < 1e-15);
    assert!((two_qubit_pmax(&PureState::basis(2, 2).unwrap()).unwrap() - 1.0).abs() < 1e-15);
    let schmidt = PureState::from_real(2, &[0.8, 0.0, 0.0, 0.6]).unwrap();
    assert!((two_qubit_pmax(&schmidt).unwrap() - 0.64).abs() < 1e-14);
    assert!(two_qubit_pmax(&PureState::w(3).unwrap()).is_err());
}

#[test]
fn newtype_examples() {
    let f = newtype_standard_form(0.5, 0.5, 0.5, 0.5).unwrap();
    let [l0, l1, l2, l3, l4] = f.acin.lambda;
    assert!(l1.abs() < 1e-15 && l2.abs() < 1e-15 && l3.abs() < 1e-15);
    assert!((l0 - FRAC_1_SQRT_2).abs() < 1e-15 && (l4 - FRAC_1_SQRT_2).abs() < 1e-15);
    assert!(f.extra_constraint_residual < 1e-12);

    let t = 1.0 / 3f64.sqrt();
    let f = newtype_standard_form(t, t, t, 0.0).unwrap();
    let [l0, l1, l2, l3, l4] = f.acin.lambda;
    assert!((l0 - t).abs() < 1e-15 && (l2 - t).abs() < 1e-15 && (l3 - t).abs() < 1e-15);
    assert!(l1 == 0.0 && l4 == 0.0);
    assert_eq!(classify_type(&f.acin), StateType::Type3a);
    assert!(f.extra_constraint_residual < 1e-12);

    let q = (1.0f64 - 0.77).sqrt();
    let f = newtype_standard_form(0.6, 0.5, 0.4, q).unwrap();
    assert!(f.extra_constraint_residual < 1e-9);
    assert!((f.acin.lambda.iter().map(|l| l * l).sum::<f64>() - 1.0).abs() < 1e-10);

    assert!(matches!(newtype_standard_form(0.0, 1.0, 0.0, 0.0), Err(LuError::DegenerateTransform)));
    assert!(newtype_standard_form(0.5, 0.5, 0.5, 0.6).is_err());
}

#[test]
fn newtype_invariants_examples() {
    let ji = newtype_invariants(0.5, 0.5, 0.5, 0.5).unwrap();
    assert_j(&ji, [0.0, 0.0, 0.0, 0.25, 0.0], 1e-15);
    let t = 1.0 / 3f64.sqrt();
    let ji = newtype_invariants(t, t, t, 0.0).unwrap();
    assert_j(&ji, [1.0 / 9.0, 1.0 / 9.0, 1.0 / 9.0, 0.0, 2.0 / 27.0], 1e-15);
    let q = (1.0f64 - 0.77).sqrt();
    let s = FourTerm::new(0.6, 0.5, 0.4, q).unwrap();
    let direct = invariants_from_state(&s.to_state()).unwrap();
    assert!(newtype_invariants(0.6, 0.5, 0.4, q).unwrap().max_abs_diff(&direct) < 1e-9);
}

#[test]
fn newtype_pmax_examples() {
    let t = 1.0 / 3f64.sqrt();
    let w = newtype_invariants(t, t, t, 0.0).unwrap();
    let v = pmax_newtype_invariant_form(&w, RegionLabel3::ConvexQuadrangle).unwrap();
    assert!((v - 4.0 / 9.0).abs() < 1e-14);
    let cross = pmax_newtype_invariant_form(&w, RegionLabel3::CrossedQuadrangle).unwrap();
    assert!((cross - 4.0 / 9.0).abs() < 1e-14);

    let half = newtype_invariants(0.5, 0.5, 0.5, 0.5).unwrap();
    let v = pmax_newtype_invariant_form(&half, RegionLabel3::SharedSurfaceR0).unwrap();
    assert!((v - 0.5).abs() < 1e-14);

    let s = FourTerm::new(0.9, 0.3, 0.2, (1.0f64 - 0.94).sqrt()).unwrap();
    let (value, label) = lambda_sq_fourterm(&s);
    assert_eq!(label, RegionLabel3::LargestCoefficient);
    let ji = newtype_invariants(s.a, s.b, s.c, s.d).unwrap();
    assert!((pmax_newtype_invariant_form(&ji, label).unwrap() - value).abs() < 1e-12);
}
