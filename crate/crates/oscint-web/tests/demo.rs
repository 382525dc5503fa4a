use oscint_web::demo;

#[test]
fn lag_curve_interleaves_s_and_lag() {
    let c = demo::phase_lag_curve("pfd2", 1.0, 0.5, 1.5, 11).unwrap();
    assert_eq!(c.len(), 22);
    assert_eq!(c[0], 0.5);
    // s = 1 is the sixth sample, where the lag is fitted away
    assert!((c[10] - 1.0).abs() < 1e-15);
    assert!(c[11].abs() < 1e-13, "{}", c[11]);
    assert!(demo::phase_lag_curve("pfd2", 1.0, 1.5, 0.5, 11).is_err());
    assert!(demo::phase_lag_curve("rk4", 1.0, 0.5, 1.5, 11).is_err());
}

#[test]
fn grid_marks_the_origin_stable() {
    let g = demo::stability_grid("classical", 0.5, 1.0, 20, 10).unwrap();
    assert_eq!(g.len(), 200);
    assert!(g[..10].iter().all(|&f| f == 1));
    assert!(g[190..].iter().all(|&f| f == 0));
    assert!(demo::stability_grid("pfd0", 1.0, 1.0, 1000, 1000).is_err());
}

#[test]
fn phase_shift_view_is_thinned_and_normalised() {
    let r = demo::phase_shift("pfd4", 163.215341, 15.0 / 4000.0, 500).unwrap();
    assert!(r.digits > 5.0);
    assert!(r.x.len() <= 500 && r.x.len() == r.y.len());
    let peak = r.y.iter().fold(0.0f64, |a, y| a.max(y.abs()));
    assert!(peak <= 1.0 && peak > 0.5, "{peak}");
    let err = demo::phase_shift("pfd4", 989.701916, 15.0 / 2000.0, 500).unwrap_err();
    assert!(err.contains("interval of periodicity"), "{err}");
}

#[test]
fn every_method_is_listed() {
    assert_eq!(demo::methods().len(), 8);
    assert_eq!(demo::methods()[0], "classical");
}
