//! Acceptance suite. Each test prints one `[PASS]` or `[FAIL]` line with the
//! measured quantities, then asserts the verdict.

use std::f64::consts::{FRAC_PI_2, PI};
use std::io::Write;
use std::time::Instant;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_traits::Zero;
use oscint::coefficients::{
    branch_gap, classical_coefficients, closed_form_b, coefficients, precision_budget,
    series_coefficients, taylor_b, MethodId, Rational, ERROR_CONSTANT,
};
use oscint::integrator::{integrate, FrequencySchedule, SecondOrderIvp, Start};
use oscint::phaselag::{order_conditions_exact, phase_lag, phase_lag_derivative};
use oscint::schrodinger::{
    candidate_pairs, solve_phase_shift, solve_radial, Potential, RadialScatteringProblem,
};
use oscint::stability::{is_stable, periodicity_endpoint};
use oscint::CoeffOptions;

const RM: RoundingMode = RoundingMode::ToEven;

/// Interval-of-periodicity endpoint of the classical method, frozen after
/// the first measurement.
const CLASSICAL_S0: f64 = 0.110_677_285_894_053;

fn report(n: u32, ok: bool, detail: &str) {
    let tag = if ok { "PASS" } else { "FAIL" };
    // written to the handle directly so the line survives output capture
    let line = format!("[{tag}] criterion {n}: {detail}\n");
    let _ = std::io::stdout().lock().write_all(line.as_bytes());
}

fn to_f64(x: &BigFloat) -> f64 {
    x.to_string().parse().unwrap_or(f64::NAN)
}

fn sci(xs: &[f64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| format!("{x:.3e}")).collect();
    format!("[{}]", parts.join(", "))
}

fn rational(r: &Rational, p: usize, cc: &mut Consts) -> BigFloat {
    let n = BigFloat::parse(&r.numer().to_string(), Radix::Dec, p, RM, cc);
    let d = BigFloat::parse(&r.denom().to_string(), Radix::Dec, p, RM, cc);
    n.div(&d, p, RM)
}

#[test]
fn criterion_1_exact_order_conditions() {
    let t = Instant::now();
    let oc = order_conditions_exact(&classical_coefficients(), 16);
    let secs = t.elapsed().as_secs_f64();
    let zeros = (0..16).all(|q| oc.c[q].is_zero());
    let want = Rational::new(ERROR_CONSTANT.0.into(), ERROR_CONSTANT.1.into());
    let ok = zeros && oc.c[16] == want && secs < 1.0;
    report(
        1,
        ok,
        &format!(
            "C_0..C_15 all zero: {zeros}, C_16 = {}, {secs:.3} s",
            oc.c[16]
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_2_phase_fitting() {
    let t = Instant::now();
    let mut worst_pl = 0.0f64;
    let mut worst_d = Vec::new();
    let mut ok = true;
    for m in MethodId::FITTED {
        let i = m.derivative_count() as u32;
        for v in [0.1, 0.5, 1.0, 2.0] {
            let pl = phase_lag(&coefficients(m, v).unwrap(), v).unwrap().abs();
            worst_pl = worst_pl.max(pl);
            ok &= pl <= 1e-12;
            for k in 1..=i {
                let d = phase_lag_derivative(m, v, k).unwrap();
                let tol = if k <= 2 { 1e-6 } else { 1e-4 };
                if d.value.abs() > tol {
                    ok = false;
                    worst_d.push(format!("{m} v={v} k={k}: {:.2e}", d.value));
                }
            }
        }
        let next = phase_lag_derivative(m, 0.8, i + 1).unwrap();
        if !(next.value.abs() > 10.0 * next.error) {
            ok = false;
            worst_d.push(format!("{m} order {} at 0.8 not resolved: {next:?}", i + 1));
        }
    }
    let secs = t.elapsed().as_secs_f64();
    ok &= secs < 30.0;
    report(
        2,
        ok,
        &format!("max |PL| = {worst_pl:.2e}, derivative misses: {worst_d:?}, {secs:.1} s"),
    );
    assert!(ok);
}

#[test]
fn criterion_3_classical_limit() {
    let classical = classical_coefficients().to_f64().b_half();
    let v = 1e-4;
    let mut worst_match = 0.0f64;
    let mut predicted = 0.0f64;
    let mut worst_slope = 0.0f64;
    for m in MethodId::FITTED {
        let series = series_coefficients(m);
        let c1: Vec<f64> = series
            .iter()
            .map(|c| {
                c[1].numer().to_string().parse::<f64>().unwrap()
                    / c[1].denom().to_string().parse::<f64>().unwrap()
            })
            .collect();
        // both branches at the tiny frequency
        let t = coefficients(m, v).unwrap().b_half();
        let cf = closed_form_b(m, v, precision_budget(m, v, 64)).unwrap().b;
        for j in 0..7 {
            for b in [t[j], cf[j]] {
                worst_match = worst_match.max(((b - classical[j]) / classical[j]).abs());
            }
            // what the exact v^2 term alone contributes
            predicted = predicted.max((c1[j] * v * v / classical[j]).abs());
        }
        // slope of the closed form against the tabulated v^2 term
        let vs = 0.01;
        let cf = closed_form_b(m, vs, precision_budget(m, vs, 64)).unwrap().b;
        for j in 0..7 {
            let got = (cf[j] - classical[j]) / (vs * vs);
            worst_slope = worst_slope.max(((got - c1[j]) / c1[j]).abs());
        }
    }
    let ok = worst_match <= 1e-8 && worst_slope <= 0.01;
    report(
        3,
        ok,
        &format!(
            "worst relative gap to classical at v = 1e-4: {worst_match:.3e} \
             (the exact v^2 term alone gives {predicted:.3e}); worst v^2 slope error: {worst_slope:.2e}"
        ),
    );
    assert!(ok, "the v^2 correction itself exceeds the tolerance");
}

#[test]
fn criterion_4_branch_agreement() {
    let mut g05 = 0.0f64;
    let mut g20 = 0.0f64;
    for m in MethodId::FITTED {
        g05 = g05.max(branch_gap(m, 0.05).unwrap());
        g20 = g20.max(branch_gap(m, 0.2).unwrap());
    }
    // the classical method has a single branch; its Taylor evaluation is exact
    let c = taylor_b(MethodId::Classical, 0.2).unwrap();
    let exact = classical_coefficients().to_f64().b_half();
    let ok = g05 <= 1e-8 && g20 <= 1e-6 && c == exact;
    report(
        4,
        ok,
        &format!("worst gap at 0.05: {g05:.2e}, at 0.2: {g20:.2e}"),
    );
    assert!(ok);
}

#[test]
fn criterion_5_fitted_frequency_exactness() {
    let rhs = |_: f64, y: f64| -4.0 * y;
    let exact = |t: f64| (2.0 * t).cos();
    let p = SecondOrderIvp {
        rhs: &rhs,
        t0: 0.0,
        y0: 1.0,
        start: Start::Exact(&exact),
    };
    let h = 0.05;
    let tr = integrate(
        &p,
        MethodId::PFD0,
        h,
        1000.0 * h,
        &FrequencySchedule::constant(2.0),
    )
    .unwrap();
    let err =
        tr.t.iter()
            .zip(&tr.y)
            .map(|(t, y)| (y - exact(*t)).abs())
            .fold(0.0, f64::max);
    let ok = err <= 1e-10 && tr.t.len() == 1001;
    report(5, ok, &format!("max error over 1000 steps: {err:.2e}"));
    assert!(ok);
}

/// Classical method on `y'' = -y`, `y = sin t`, in `p`-bit arithmetic with
/// exact weights and an exact start. Returns the max nodal error.
fn classical_sine_error(n: usize, p: usize, cc: &mut Consts) -> f64 {
    let e = classical_coefficients();
    let a: Vec<BigFloat> = e.a.iter().map(|r| rational(r, p, cc)).collect();
    let b: Vec<BigFloat> = e.b.iter().map(|r| rational(r, p, cc)).collect();
    let pi = cc.pi(p, RM);
    let end = pi.mul(&BigFloat::from_u64(10, p), p, RM);
    let h = end.div(&BigFloat::from_u64(n as u64, p), p, RM);
    let h2 = h.mul(&h, p, RM);
    let t = |k: usize| h.mul(&BigFloat::from_u64(k as u64, p), p, RM);
    let mut y: Vec<BigFloat> = (0..14).map(|k| t(k).sin(p, RM, cc)).collect();
    let mut worst = 0.0f64;
    for k in 14..=n {
        let base = k - 14;
        let mut acc = BigFloat::from_u64(0, p);
        let mut force = BigFloat::from_u64(0, p);
        for j in 0..14 {
            acc = acc.sub(&a[j].mul(&y[base + j], p, RM), p, RM);
            // f = -y
            force = force.sub(&b[j].mul(&y[base + j], p, RM), p, RM);
        }
        let next = acc.add(&h2.mul(&force, p, RM), p, RM);
        let err = next.sub(&t(k).sin(p, RM, cc), p, RM);
        worst = worst.max(to_f64(&err).abs());
        y.push(next);
    }
    worst
}

#[test]
fn criterion_6_convergence_order() {
    // at h <= 0.1 the truncation error is below 1e-16, so doubles only see
    // roundoff; the order is measured with 256-bit arithmetic instead
    let mut cc = Consts::new().unwrap();
    let ns = [315usize, 630, 1260];
    let errs: Vec<f64> = ns
        .iter()
        .map(|&n| classical_sine_error(n, 256, &mut cc))
        .collect();
    let ratios: Vec<f64> = errs.windows(2).map(|w| (w[0] / w[1]).log2()).collect();

    let rhs = |_: f64, y: f64| -y;
    let p = SecondOrderIvp {
        rhs: &rhs,
        t0: 0.0,
        y0: 0.0,
        start: Start::Exact(&f64::sin),
    };
    let end = 10.0 * PI;
    let doubles: Vec<f64> = ns
        .iter()
        .map(|&n| {
            let tr = integrate(
                &p,
                MethodId::Classical,
                end / n as f64,
                end,
                &FrequencySchedule::constant(1.0),
            )
            .unwrap();
            tr.t.iter()
                .zip(&tr.y)
                .map(|(t, y)| (y - t.sin()).abs())
                .fold(0.0, f64::max)
        })
        .collect();

    let ok = ratios.iter().all(|r| (13.0..=15.0).contains(r));
    report(
        6,
        ok,
        &format!(
            "256-bit errors {} at h = 10pi/{ns:?}, log2 ratios {ratios:.2?}; f64 errors {} (roundoff)",
            sci(&errs),
            sci(&doubles)
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_7_benchmark_ordering() {
    let t = Instant::now();
    let e = 341.495874;
    let h = 15.0 / 2000.0;
    let mut digits = Vec::new();
    let mut notes = Vec::new();
    for m in MethodId::ALL {
        match solve_phase_shift(&RadialScatteringProblem::benchmark(e, h), m) {
            Ok(r) => digits.push(r.digits),
            Err(err) => {
                digits.push(f64::NAN);
                notes.push(format!("{m}: {err}"));
            }
        }
    }
    // the same ordering one rung down the ladder, where every method is stable
    let fine: Vec<f64> = MethodId::ALL
        .iter()
        .map(|&m| {
            solve_phase_shift(&RadialScatteringProblem::benchmark(e, h / 2.0), m)
                .map(|r| r.digits)
                .unwrap_or(f64::NAN)
        })
        .collect();
    let secs = t.elapsed().as_secs_f64();

    let d = &digits;
    let ladder = (1..7).all(|k| d[k + 1] >= d[k] - 0.3);
    let ok = d[0] < d[1] && d[0] + 1.0 <= d[1] && d[0] + 1.0 <= d[7] && ladder && secs < 120.0;
    report(
        7,
        ok,
        &format!(
            "digits at h = 15/2000 {digits:.2?}; refused: {notes:?}; at h = 15/4000 {fine:.2?}; {secs:.1} s"
        ),
    );
    assert!(ok, "ordering not observed");
}

fn fold(num: f64, den: f64) -> f64 {
    let d = num.atan2(den);
    if d <= 0.0 {
        d + PI
    } else if d > PI {
        d - PI
    } else {
        d
    }
}

#[test]
fn criterion_8_phase_shift_oracles() {
    let h = 15.0 / 4000.0;
    let e = 341.495874;
    let m = MethodId::PFD6;

    let mut free = 0.0f64;
    for method in MethodId::ALL {
        let mut p = RadialScatteringProblem::benchmark(e, h);
        p.potential = Potential::Free;
        let d = solve_phase_shift(&p, method).unwrap().delta;
        let d = if d > FRAC_PI_2 { d - PI } else { d };
        free = free.max(d.abs());
    }

    let base = RadialScatteringProblem::benchmark(e, h);
    let d0 = solve_phase_shift(&base, m).unwrap();
    let mut scale_gap = 0.0f64;
    let mut tan_gap = 0.0f64;
    for scale in [1e-6, 3.0, 1e8] {
        let mut p = base.clone();
        p.initial_scale = scale;
        let r = solve_phase_shift(&p, m).unwrap();
        scale_gap = scale_gap.max((r.delta - d0.delta).abs());
        tan_gap = tan_gap.max(((r.tan_delta - d0.tan_delta) / d0.tan_delta).abs());
    }

    // spread of delta over every well-conditioned pair in the window
    let tr = solve_radial(&base, m, &CoeffOptions::default()).unwrap();
    let deltas: Vec<f64> = candidate_pairs(&base, &tr.t, &tr.y)
        .iter()
        .filter(|p| p.det >= 0.5)
        .map(|p| fold(p.num, p.den))
        .collect();
    let lo = deltas.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = deltas.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let spread = hi - lo;
    let half = solve_phase_shift(&RadialScatteringProblem::benchmark(e, h / 2.0), m).unwrap();
    let conv = (half.delta - d0.delta).abs();

    let ok = free <= 1e-10 && scale_gap <= 1e-13 && spread <= 10.0 * conv;
    report(
        8,
        ok,
        &format!(
            "free particle |delta| {free:.1e}; scale change moves delta by {scale_gap:.1e} (tan by {tan_gap:.1e} rel); \
             pair spread {spread:.2e} over {} pairs vs h-convergence {conv:.2e}",
            deltas.len()
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_9_stability_sanity() {
    let mut origin = true;
    for m in MethodId::ALL {
        let c = if m == MethodId::Classical {
            classical_coefficients().to_f64()
        } else {
            coefficients(m, 1e-3).unwrap()
        };
        origin &= is_stable(&c, 0.0).unwrap();
    }

    let mut first_unstable = Vec::new();
    for m in MethodId::FITTED {
        let hit = (1..=100)
            .map(|k| k as f64 * 0.01)
            .find(|&s| !is_stable(&coefficients(m, s).unwrap(), s).unwrap());
        if let Some(s) = hit {
            first_unstable.push(format!("{m} at s = {s:.2}"));
        }
    }

    let c = classical_coefficients().to_f64();
    let s0 = periodicity_endpoint(&c, 2.0, 0.01, 1e-12).unwrap();
    let frozen = (s0 - CLASSICAL_S0).abs() < 1e-6;

    let ok = origin && first_unstable.is_empty() && s0 > 0.1 && frozen;
    report(
        9,
        ok,
        &format!(
            "stable at s = 0: {origin}; diagonal failures: {first_unstable:?}; classical s0 = {s0:.9}"
        ),
    );
    assert!(ok, "diagonal stability does not hold on (0, 1]");
}
