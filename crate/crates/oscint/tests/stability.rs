use oscint::coefficients::{classical_coefficients, coefficients, MethodId};
use oscint::stability::{
    characteristic_polynomial, is_stable, periodicity_endpoint, polynomial_roots, reduced_roots,
    scan_region, z_from_w, GridSpec, C64,
};
use proptest::prelude::*;

/// Endpoint of the classical interval of periodicity, bisected independently
/// on the full degree-14 polynomial with 50-digit arithmetic.
const CLASSICAL_S0: f64 = 0.110_677_285_894_053;

#[test]
fn every_method_is_stable_at_the_origin() {
    for m in MethodId::ALL {
        let c = if m == MethodId::Classical {
            classical_coefficients().to_f64()
        } else {
            coefficients(m, 0.5).unwrap()
        };
        assert!(is_stable(&c, 0.0).unwrap(), "{m}");
    }
}

#[test]
fn classical_interval_of_periodicity() {
    let c = classical_coefficients().to_f64();
    let s0 = periodicity_endpoint(&c, 2.0, 0.01, 1e-12).unwrap();
    assert!((s0 - CLASSICAL_S0).abs() < 1e-6, "{s0}");
    assert!(is_stable(&c, 0.11).unwrap());
    assert!(!is_stable(&c, 0.12).unwrap());
}

#[test]
fn fitted_methods_are_stable_on_the_diagonal_inside_the_classical_interval() {
    for m in MethodId::FITTED {
        for k in 1..=20 {
            let s = 0.11 * k as f64 / 20.0;
            assert!(
                is_stable(&coefficients(m, s).unwrap(), s).unwrap(),
                "{m} {s}"
            );
        }
    }
}

#[test]
fn classical_scan_is_constant_in_v() {
    let spec = GridSpec {
        s_max: 2.0,
        v_max: 2.0,
        n_s: 30,
        n_v: 7,
        ..GridSpec::default()
    };
    let g = scan_region(MethodId::Classical, spec).unwrap();
    assert_eq!(g.flags.len(), 210);
    for i in 0..spec.n_s {
        for j in 1..spec.n_v {
            assert_eq!(g.get(i, j), g.get(i, 0));
        }
    }
    assert!(g.get(0, 0) && !g.get(29, 3));
}

#[test]
fn scan_marks_pole_columns_unstable_and_reports_them() {
    let pi = std::f64::consts::PI;
    let spec = GridSpec {
        s_min: 0.0,
        s_max: 0.1,
        v_min: pi - 1.0,
        v_max: pi + 1.0,
        n_s: 3,
        n_v: 3,
    };
    let g = scan_region(MethodId::PFD2, spec).unwrap();
    assert!(!g.failures.is_empty());
    assert!((0..3).all(|i| !g.get(i, 1)));
}

fn sorted(mut r: Vec<C64>) -> Vec<C64> {
    r.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    r
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn characteristic_polynomial_is_palindromic(i in 0usize..7, v in 0.06f64..2.5, s in 0.0f64..5.0) {
        let c = coefficients(MethodId::fitted(i).unwrap(), v).unwrap();
        let p = characteristic_polynomial(&c, s).unwrap();
        for k in 0..15 {
            prop_assert_eq!(p.c[k], p.c[14 - k]);
        }
    }

    #[test]
    fn both_root_routes_agree(s in 0.2f64..6.0) {
        // away from s = 0, where the double root at z = 1 is ill conditioned
        let c = coefficients(MethodId::PFD1, 0.9).unwrap();
        let direct = sorted(polynomial_roots(&characteristic_polynomial(&c, s).unwrap()).unwrap());
        let via_w = sorted(
            reduced_roots(&c, s).unwrap().into_iter().flat_map(z_from_w).collect(),
        );
        prop_assert_eq!(direct.len(), 14);
        for (a, b) in direct.iter().zip(&via_w) {
            prop_assert!((a - b).norm() < 1e-6, "{} vs {}", a, b);
        }
    }

    #[test]
    fn roots_come_in_reciprocal_pairs(s in 0.2f64..6.0) {
        let c = coefficients(MethodId::PFD4, 1.3).unwrap();
        let r = polynomial_roots(&characteristic_polynomial(&c, s).unwrap()).unwrap();
        for z in &r {
            let inv = z.inv();
            prop_assert!(r.iter().any(|w| (w - inv).norm() < 1e-6 * inv.norm().max(1.0)));
        }
    }
}
