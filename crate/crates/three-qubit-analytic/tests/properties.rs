use proptest::prelude::*;
use three_qubit_analytic::*;

fn unit4() -> impl Strategy<Value = [f64; 4]> {
    prop::array::uniform4(0.01f64..1.0).prop_map(|v| {
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v.map(|x| x / n)
    })
}

fn permutations(v: [f64; 4]) -> Vec<[f64; 4]> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    if i != j && i != k && i != l && j != k && j != l && k != l {
                        out.push([v[i], v[j], v[k], v[l]]);
                    }
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn fourterm_permutation_invariant(v in unit4()) {
        let base = lambda_sq_fourterm(&FourTerm::new(v[0], v[1], v[2], v[3]).unwrap()).0;
        for p in permutations(v) {
            let x = lambda_sq_fourterm(&FourTerm::new(p[0], p[1], p[2], p[3]).unwrap()).0;
            prop_assert!((x - base).abs() < 1e-12, "{:?}: {} vs {}", p, x, base);
        }
    }

    #[test]
    fn convex_identity(v in unit4()) {
        let [a, b, c, d] = v;
        let q = fourterm_quantities(&FourTerm::new(a, b, c, d).unwrap());
        let den = 4.0 * q.omega * q.omega - q.r3 * q.r3;
        prop_assume!(den.abs() > 1e-6);
        let lhs = 1.0 - q.r() / den;
        let rhs = 8.0 * (a * b + c * d) * (a * c + b * d) * (a * d + b * c) / den;
        prop_assert!((lhs - rhs).abs() < 1e-10 * (1.0 + rhs.abs()));
        prop_assert!((den - 16.0 * q.sq_sq).abs() < 1e-12);
    }

    #[test]
    fn fourterm_value_in_range(v in unit4()) {
        let (value, label) = lambda_sq_fourterm(&FourTerm::new(v[0], v[1], v[2], v[3]).unwrap());
        prop_assert!(value > 0.25 && value <= 1.0 + 1e-12);
        if label == RegionLabel3::SharedSurfaceHighLow {
            prop_assert!((0.5 - 1e-9..=4.0 / 7.0 + 1e-9).contains(&value));
        }
    }

    #[test]
    fn symmetric_value_in_range(v in unit4()) {
        let x = lambda_sq_symmetric(&SymState::new(v[0], v[1], v[2], v[3]).unwrap());
        prop_assert!((0.5..=1.0 + 1e-12).contains(&x));
    }
}

/// Moves `d` across the boundary `l^2 = 1/2 + abcd/l^2` with `a = b = c`.
#[test]
fn continuous_across_high_low_boundary() {
    let value = |d: f64| {
        let a = ((1.0 - d * d) / 3.0).sqrt();
        lambda_sq_fourterm(&FourTerm::new(a, a, a, d).unwrap())
    };
    let d0 = (4.0f64 / 7.0).sqrt();
    let (left, ll) = value(d0 - 1e-9);
    let (right, rl) = value(d0 + 1e-9);
    assert_eq!(ll, RegionLabel3::ConvexQuadrangle);
    assert_eq!(rl, RegionLabel3::LargestCoefficient);
    assert!((left - right).abs() < 1e-8, "{left} vs {right}");
}

#[test]
fn continuous_across_r_zero_surface() {
    let value = |d: f64| {
        let a = ((1.0 - d * d) / 3.0).sqrt();
        lambda_sq_fourterm(&FourTerm::new(a, a, a, d).unwrap()).0
    };
    assert!((value(0.5 - 1e-9) - value(0.5 + 1e-9)).abs() < 1e-8);
    assert!((value(0.5) - 0.5).abs() < 1e-12);
}
