use w_duality::*;

const THIRD: f64 = 1.0 / 3.0;

fn equal(n: usize) -> WStateN {
    WStateN::new(vec![(1.0 / n as f64).sqrt(); n]).unwrap()
}

#[test]
fn equal_three_qubit_critical_values() {
    let reg = critical_values(&equal(3));
    assert!((reg.r2 * reg.r2 - 2.0 / 3.0).abs() < 1e-12);
    assert!((reg.r1 - 2.0 / 3.0).abs() < 1e-12);
    assert_eq!(reg.label, RegionLabel::SymmetricHigh);
}

#[test]
fn equal_three_qubit_diameter_and_overlap() {
    let w = equal(3);
    let sol = solve_diameter(&w).unwrap();
    assert_eq!(sol.branch, Branch::SymmetricPlus);
    assert!((sol.r * sol.r - 0.375).abs() < 1e-12);
    for t in &sol.thetas {
        assert!((t.cos().powi(2) - THIRD).abs() < 1e-12);
    }
    let o = lambda_max_w(&w).unwrap();
    assert!((o.lambda_sq() - 4.0 / 9.0).abs() < 1e-12);
    let ov = qstate_core::product_overlap(&w.to_state(), &o.nearest).unwrap();
    assert!((ov - o.lambda).abs() < 1e-12);
}

#[test]
fn slightly_entangled_uses_largest_coefficient() {
    let w = WStateN::normalized(&[0.3, 0.4, 0.75f64.sqrt()]).unwrap();
    let reg = critical_values(&w);
    assert_eq!(reg.label, RegionLabel::SlightlyEntangled);
    let o = lambda_max_w(&w).unwrap();
    assert!((o.lambda - 0.75f64.sqrt()).abs() < 1e-12);
    assert_eq!(o.nearest, qstate_core::ProductState::basis(3, 0b001));
    assert!(matches!(solve_diameter(&w), Err(DualityError::SlightlyEntangled(_))));
    let w = WStateN::normalized(&[0.2, 0.2, 0.6f64.sqrt()]).unwrap();
    assert_eq!(critical_values(&w).label, RegionLabel::SlightlyEntangled);
}

#[test]
fn ties_pick_lowest_index() {
    let w = WStateN::normalized(&[0.0, 1.0, 1.0]).unwrap();
    assert_eq!(w.largest_index(), 1);
    let o = lambda_max_w(&w).unwrap();
    assert_eq!(o.nearest, qstate_core::ProductState::basis(3, 0b010));
}

#[test]
fn shared_surface_gives_one_half() {
    let w = WStateN::new(vec![0.5, 0.5, 0.5f64.sqrt()]).unwrap();
    assert_eq!(critical_values(&w).label, RegionLabel::BoundaryShared);
    let o = lambda_max_w(&w).unwrap();
    assert!((o.lambda_sq() - 0.5).abs() < 1e-12);
    let sol = o.diameter.unwrap();
    assert_eq!(sol.branch, Branch::None);
    assert!(sol.r.is_infinite());
    assert_eq!(sol.thetas[2], 0.0);
    assert!(pyramid_geometry(&w, &sol).is_err());
}

#[test]
fn near_shared_surface_is_continuous() {
    for eps in [1e-3, 1e-5, 1e-7, 1e-9] {
        let cn_sq: f64 = 0.5 - eps;
        let rest = ((1.0 - cn_sq) / 2.0).sqrt();
        let w = WStateN::new(vec![rest, rest, cn_sq.sqrt()]).unwrap();
        let o = lambda_max_w(&w).unwrap();
        let sol = o.diameter.as_ref().unwrap();
        assert_eq!(sol.branch, Branch::AsymmetricMinus);
        assert!(o.lambda_sq() < 0.5 && o.lambda_sq() >= cn_sq);
        assert!((o.lambda_sq() - 0.5).abs() < 10.0 * eps);
        let p = pyramid_geometry(&w, sol).unwrap();
        assert!((p.adjacent[2] / p.hypotenuse - 1.0).abs() < 10.0 * eps.sqrt());
    }
}

#[test]
fn first_boundary_shares_the_root() {
    let w = WStateN::on_first_boundary(&[0.2, 0.3, 0.4, 0.5]).unwrap();
    let reg = critical_values(&w);
    assert_eq!(reg.label, RegionLabel::BoundaryFirst);
    let sol = solve_diameter(&w).unwrap();
    assert!((sol.r - w.largest()).abs() < 1e-12);
    let o = lambda_max_w(&w).unwrap();
    let ov = qstate_core::product_overlap(&w.to_state(), &o.nearest).unwrap();
    assert!((ov - o.lambda).abs() < 1e-12);
}

#[test]
fn pyramid_for_equal_three_qubits() {
    let w = equal(3);
    let sol = solve_diameter(&w).unwrap();
    let p = pyramid_geometry(&w, &sol).unwrap();
    assert!((p.hypotenuse - 0.375f64.sqrt()).abs() < 1e-12);
    for (l, a) in p.legs.iter().zip(&p.adjacent) {
        assert!((l - THIRD.sqrt()).abs() < 1e-12);
        assert!((a - (1.0f64 / 24.0).sqrt()).abs() < 1e-12);
    }
}

#[test]
fn two_block_matches_root_finder() {
    for (m, k) in [(2, 2), (10, 10), (12, 18), (3, 7)] {
        for i in 0..=50 {
            let theta = std::f64::consts::FRAC_PI_2 * i as f64 / 50.0;
            let closed = two_block_closed_form(m, k, theta).unwrap();
            let r = solve_diameter(&WStateN::two_block(m, k, theta).unwrap()).unwrap().r;
            assert!((closed - r * r).abs() < 1e-10, "m={m} k={k} theta={theta}: {closed} vs {}", r * r);
        }
    }
}

#[test]
fn two_block_edges() {
    let at_zero = two_block_closed_form(10, 10, 0.0).unwrap();
    assert!((at_zero - 10.0 / 36.0).abs() < 1e-12);
    let big = two_block_closed_form(100_000, 100_000, std::f64::consts::FRAC_PI_4).unwrap();
    assert!((big - 0.25).abs() < 1e-5);
    let one = two_block_closed_form(1, 5, 1.2).unwrap();
    let r = solve_diameter(&WStateN::two_block(1, 5, 1.2).unwrap()).unwrap().r;
    assert_eq!(one, r * r);
}

#[test]
fn asymmetric_large_n_diameter() {
    for c_sq in [0.36, 0.4, 0.45, 0.49] {
        let n = 400;
        let rest = ((1.0 - c_sq) / (n - 1) as f64).sqrt();
        let mut c = vec![rest; n - 1];
        c.push(f64::sqrt(c_sq));
        let w = WStateN::new(c).unwrap();
        let sol = solve_diameter(&w).unwrap();
        assert_eq!(sol.branch, Branch::AsymmetricMinus);
        let approx = asymmetric_r_approx(c_sq.sqrt()).unwrap();
        assert!((sol.r / approx - 1.0).abs() < 1e-2, "{c_sq}: {} vs {approx}", sol.r);
    }
}

#[test]
fn interpolating_formula_values() {
    assert_eq!(large_n_lambda_sq(0.0).unwrap(), 0.5);
    assert_eq!(large_n_lambda_sq(-1.0).unwrap(), 1.0);
    let v = large_n_lambda_sq(THIRD).unwrap();
    assert!((v - 2.0 / 3.0 * (-0.5f64).exp()).abs() < 1e-15);
    assert!((large_n_lambda_sq(1e-12).unwrap() - 0.5).abs() < 1e-11);
    assert!(matches!(large_n_lambda_sq(0.4), Err(DualityError::OutsideDomain(_))));
    let c = 0.6f64;
    let via_c = asymmetric_lambda_sq_approx(c).unwrap();
    assert!((via_c - large_n_lambda_sq(1.0 - 2.0 * c * c).unwrap()).abs() < 1e-15);
}

#[test]
fn invalid_inputs() {
    assert!(WStateN::new(vec![0.6, 0.8]).is_err());
    assert!(WStateN::new(vec![0.5, 0.5, 0.5]).is_err());
    assert!(WStateN::new(vec![-0.6, 0.8, 0.0]).is_err());
    assert!(WStateN::normalized(&[0.0, 0.0, 0.0]).is_err());
}

#[test]
fn product_state_is_slightly_entangled() {
    let w = WStateN::new(vec![0.0, 0.0, 1.0]).unwrap();
    let o = lambda_max_w(&w).unwrap();
    assert_eq!(o.region.label, RegionLabel::SlightlyEntangled);
    assert_eq!(o.lambda, 1.0);
}
