use oscint::coefficients::{coefficients, MethodId};
use oscint::phaselag::phase_lag;
use oscint::schrodinger::{solve_phase_shift, solve_radial, RadialScatteringProblem};
use oscint::stability::{scan_region, GridSpec};
use oscint::CoeffOptions;
use serde::Serialize;

const MAX_POINTS: usize = 4096;
const MAX_CELLS: usize = 250_000;

fn parse(method: &str) -> Result<MethodId, String> {
    method.parse().map_err(|e: oscint::Error| e.to_string())
}

pub fn methods() -> Vec<String> {
    MethodId::ALL.iter().map(|m| m.slug().to_string()).collect()
}

pub fn phase_lag_curve(
    method: &str,
    v: f64,
    s_min: f64,
    s_max: f64,
    n: usize,
) -> Result<Vec<f64>, String> {
    let m = parse(method)?;
    if !(2..=MAX_POINTS).contains(&n) || !(s_min < s_max) {
        return Err(format!("need s_min < s_max and 2 to {MAX_POINTS} points"));
    }
    let c = coefficients(m, v).map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let s = s_min + (s_max - s_min) * i as f64 / (n - 1) as f64;
        out.push(s);
        out.push(phase_lag(&c, s).unwrap_or(f64::NAN));
    }
    Ok(out)
}

pub fn stability_grid(
    method: &str,
    s_max: f64,
    v_max: f64,
    n_s: usize,
    n_v: usize,
) -> Result<Vec<u8>, String> {
    let m = parse(method)?;
    if n_s.saturating_mul(n_v) > MAX_CELLS {
        return Err(format!("at most {MAX_CELLS} cells"));
    }
    let spec = GridSpec {
        s_min: 0.0,
        s_max,
        v_min: 0.0,
        v_max,
        n_s,
        n_v,
    };
    let g = scan_region(m, spec).map_err(|e| e.to_string())?;
    Ok(g.flags.iter().map(|&f| f as u8).collect())
}

#[derive(Debug, Serialize)]
pub struct PhaseShiftView {
    pub delta: f64,
    pub tan_delta: f64,
    pub digits: f64,
    pub pair: (f64, f64),
    pub steps: usize,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
}

pub fn phase_shift(
    method: &str,
    energy: f64,
    h: f64,
    samples: usize,
) -> Result<PhaseShiftView, String> {
    let m = parse(method)?;
    let prob = RadialScatteringProblem::benchmark(energy, h);
    let r = solve_phase_shift(&prob, m).map_err(|e| e.to_string())?;
    let tr = solve_radial(&prob, m, &CoeffOptions::default()).map_err(|e| e.to_string())?;
    let stride = tr.t.len().div_ceil(samples.clamp(2, MAX_POINTS));
    let peak =
        tr.y.iter()
            .fold(0.0f64, |a, y| a.max(y.abs()))
            .max(f64::MIN_POSITIVE);
    Ok(PhaseShiftView {
        delta: r.delta,
        tan_delta: r.tan_delta,
        digits: r.digits,
        pair: r.pair_used,
        steps: r.steps,
        x: tr.t.iter().step_by(stride).copied().collect(),
        y: tr.y.iter().step_by(stride).map(|y| y / peak).collect(),
    })
}
