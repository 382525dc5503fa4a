//! Radial Schrodinger scattering with a Woods-Saxon well:
//! `y'' = (l(l+1)/x^2 + V(x) - E) y`, `y(0) = 0`, phase shift read off the
//! asymptotic region against Riccati-Bessel functions.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::coefficients::{coefficients_with, CoeffOptions, MethodId};
use crate::error::{Error, Result};
use crate::integrator::{integrate_with, FrequencySchedule, SecondOrderIvp, Start};
use crate::stability::is_stable;

/// Energies at which the benchmark phase shift is exactly pi/2.
pub const RESONANCE_ENERGIES: [f64; 3] = [989.701916, 341.495874, 163.215341];

/// Largest reported accuracy, in digits.
pub const DIGITS_CAP: f64 = 16.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WoodsSaxonParams {
    pub u0: f64,
    pub a: f64,
    pub x0: f64,
    pub u1: f64,
}

impl WoodsSaxonParams {
    pub fn new(u0: f64, a: f64, x0: f64) -> Self {
        WoodsSaxonParams {
            u0,
            a,
            x0,
            u1: -u0 / a,
        }
    }
}

impl Default for WoodsSaxonParams {
    fn default() -> Self {
        WoodsSaxonParams::new(-50.0, 0.6, 7.0)
    }
}

/// `u0/(1+q) + u1 q/(1+q)^2` with `q = exp((x - x0)/a)`.
pub fn woods_saxon(x: f64, p: &WoodsSaxonParams) -> f64 {
    let z = (x - p.x0) / p.a;
    if z > 0.0 {
        // written in r = 1/q so nothing overflows
        let r = (-z).exp();
        let d = 1.0 + r;
        p.u0 * r / d + p.u1 * r / (d * d)
    } else {
        let q = z.exp();
        let d = 1.0 + q;
        p.u0 / d + p.u1 * q / (d * d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OmegaConvention {
    /// `sqrt(E - 50)` inside the well.
    Paper,
    /// `sqrt(E + 50)`, the local wavenumber at the well bottom.
    Physical,
}

impl OmegaConvention {
    pub fn name(self) -> &'static str {
        match self {
            OmegaConvention::Paper => "paper",
            OmegaConvention::Physical => "physical",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Potential {
    WoodsSaxon(WoodsSaxonParams),
    Free,
}

impl Potential {
    pub fn at(&self, x: f64) -> f64 {
        match self {
            Potential::WoodsSaxon(p) => woods_saxon(x, p),
            Potential::Free => 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialScatteringProblem {
    pub l: u32,
    pub energy: f64,
    pub x_end: f64,
    pub h: f64,
    pub potential: Potential,
    pub omega_convention: OmegaConvention,
    /// Where the inner fitted frequency gives way to `sqrt(E)`.
    pub switch_point: f64,
    /// Pairs are drawn from grid points in `[pair_window, x_end]`.
    pub pair_window: f64,
    /// `y(h)`; the solution is scaled by it and nothing else depends on it.
    pub initial_scale: f64,
}

impl RadialScatteringProblem {
    pub fn benchmark(energy: f64, h: f64) -> Self {
        RadialScatteringProblem {
            l: 0,
            energy,
            x_end: 15.0,
            h,
            potential: Potential::WoodsSaxon(WoodsSaxonParams::default()),
            omega_convention: OmegaConvention::Paper,
            switch_point: 6.5,
            pair_window: 13.5,
            initial_scale: 1.0,
        }
    }

    pub fn k(&self) -> f64 {
        self.energy.sqrt()
    }

    /// Two-segment fitted-frequency schedule.
    pub fn schedule(&self) -> Result<FrequencySchedule> {
        let depth = match self.potential {
            Potential::WoodsSaxon(p) => -p.u0,
            Potential::Free => 0.0,
        };
        let inner = match self.omega_convention {
            OmegaConvention::Paper => self.energy - depth,
            OmegaConvention::Physical => self.energy + depth,
        };
        if !(inner > 0.0) {
            return Err(Error::InvalidInput(format!(
                "inner fitted frequency is imaginary at E = {}",
                self.energy
            )));
        }
        FrequencySchedule::new(vec![self.switch_point], vec![inner.sqrt(), self.k()])
    }
}

pub fn schrodinger_rhs(x: f64, y: f64, prob: &RadialScatteringProblem) -> Result<f64> {
    let cent = if prob.l == 0 {
        0.0
    } else if x == 0.0 {
        return Err(Error::SingularOrigin { l: prob.l });
    } else {
        (prob.l * (prob.l + 1)) as f64 / (x * x)
    };
    Ok((cent + prob.potential.at(x) - prob.energy) * y)
}

/// Spherical Bessel function `j_l(x)` by upward recurrence.
pub fn spherical_bessel_j(l: u32, x: f64) -> f64 {
    let j0 = x.sin() / x;
    if l == 0 {
        return j0;
    }
    let mut prev = j0;
    let mut cur = x.sin() / (x * x) - x.cos() / x;
    for n in 1..l {
        let next = (2 * n + 1) as f64 / x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Spherical Neumann function `n_l(x)` by upward recurrence.
pub fn spherical_neumann_n(l: u32, x: f64) -> f64 {
    let n0 = -x.cos() / x;
    if l == 0 {
        return n0;
    }
    let mut prev = n0;
    let mut cur = -x.cos() / (x * x) - x.sin() / x;
    for n in 1..l {
        let next = (2 * n + 1) as f64 / x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `S = kx j_l(kx)` and `C = -kx n_l(kx)`, asymptotically `sin` and `cos` of
/// `kx - l pi/2`. With this sign of `C` the two-point formula returns `tan(delta)`
/// for `y ~ sin(kx - l pi/2 + delta)`.
fn riccati(l: u32, k: f64, x: f64) -> (f64, f64) {
    let kx = k * x;
    (
        kx * spherical_bessel_j(l, kx),
        -kx * spherical_neumann_n(l, kx),
    )
}

/// Numerator and denominator of `tan(delta)` from two samples.
fn tan_parts(y0: f64, y1: f64, x0: f64, x1: f64, k: f64, l: u32) -> (f64, f64, f64) {
    let (s0, c0) = riccati(l, k, x0);
    let (s1, c1) = riccati(l, k, x1);
    let num = y0 * s1 - y1 * s0;
    let den = y1 * c0 - y0 * c1;
    // determinant of the sample system; zero when k (x1 - x0) hits a multiple of pi
    let det = (s0 * c1 - s1 * c0).abs() / ((s0.hypot(c0)) * (s1.hypot(c1)));
    (num, den, det)
}

/// `tan(delta_l)` from the solution at two asymptotic points.
pub fn tan_delta(y_i: f64, y_ip1: f64, x_i: f64, x_ip1: f64, k: f64, l: u32) -> Result<f64> {
    if !(x_i < x_ip1) {
        return Err(Error::InvalidInput("sample points must ascend".into()));
    }
    let (num, den, det) = tan_parts(y_i, y_ip1, x_i, x_ip1, k, l);
    if det < 1e-8 || (num == 0.0 && den == 0.0) {
        return Err(Error::IllConditionedPair { x0: x_i, x1: x_ip1 });
    }
    Ok(num / den)
}

/// Angle with the given tangent parts, folded into `(0, pi]`.
fn fold(num: f64, den: f64) -> f64 {
    let d = num.atan2(den);
    if d <= 0.0 {
        d + std::f64::consts::PI
    } else if d > std::f64::consts::PI {
        d - std::f64::consts::PI
    } else {
        d
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseShiftResult {
    pub tan_delta: f64,
    pub delta: f64,
    pub digits: f64,
    pub pair_used: (f64, f64),
    pub steps: usize,
    pub rhs_evals: usize,
}

/// `-log10 |delta - target|`, capped at [`DIGITS_CAP`]; zero for a NaN phase.
pub fn accuracy_digits(delta: f64, target: f64) -> f64 {
    let e = (delta - target).abs();
    if !e.is_finite() {
        0.0
    } else if e == 0.0 {
        DIGITS_CAP
    } else {
        (-e.log10()).min(DIGITS_CAP)
    }
}

/// Refuse steps that put the local `s = h sqrt(E - V)` of any segment outside
/// the interval of periodicity of the weights used there; such runs grow
/// parasitic roots into garbage long before they overflow.
fn check_periodicity(
    prob: &RadialScatteringProblem,
    method: MethodId,
    schedule: &FrequencySchedule,
    opts: &CoeffOptions,
) -> Result<()> {
    let mut edges = vec![0.0];
    edges.extend(schedule.breakpoints.iter().copied());
    edges.push(prob.x_end);
    for (seg, w) in edges.windows(2).enumerate() {
        let n = 64;
        let v_min = (0..=n)
            .map(|i| {
                prob.potential
                    .at(w[0] + (w[1] - w[0]) * i as f64 / n as f64)
            })
            .fold(f64::INFINITY, f64::min)
            .min(0.0);
        let s = prob.h * (prob.energy - v_min).sqrt();
        let coeffs = coefficients_with(method, schedule.omegas[seg] * prob.h, opts)?;
        if !is_stable(&coeffs, s)? {
            return Err(Error::OutsidePeriodicity { method, s, x: w[0] });
        }
    }
    Ok(())
}

/// A trajectory of the scattering problem.
pub fn solve_radial(
    prob: &RadialScatteringProblem,
    method: MethodId,
    opts: &CoeffOptions,
) -> Result<crate::integrator::Trajectory> {
    if !(prob.energy > 0.0) {
        return Err(Error::InvalidInput("energy must be positive".into()));
    }
    let steps = (prob.x_end / prob.h).round();
    if !(steps >= 200.0) {
        return Err(Error::InvalidInput(format!(
            "h = {} gives {} steps; at least 200 are required",
            prob.h, steps
        )));
    }
    if prob.l > 0 {
        // the starter samples f at the origin, which is singular for l > 0
        return Err(Error::SingularOrigin { l: prob.l });
    }
    let schedule = prob.schedule()?;
    check_periodicity(prob, method, &schedule, opts)?;
    let p = prob.clone();
    let rhs = move |x: f64, y: f64| schrodinger_rhs(x, y, &p).unwrap_or(f64::NAN);
    let ivp = SecondOrderIvp {
        rhs: &rhs,
        t0: 0.0,
        y0: 0.0,
        start: Start::Value(prob.initial_scale * prob.h.powi(prob.l as i32 + 1)),
    };
    integrate_with(&ivp, method, prob.h, prob.x_end, &schedule, opts)
}

/// A sample pair `(x_i, x_j)` with the parts of `tan(delta)` it yields.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SamplePair {
    pub i: usize,
    pub j: usize,
    pub num: f64,
    pub den: f64,
    /// Normalized determinant of the sample system, in `[0, 1]`.
    pub det: f64,
}

/// Every pair formed by the last grid point and an earlier point in the
/// window. Pairing with the outermost point keeps the sample as far into the
/// asymptotic region as the grid allows.
pub fn candidate_pairs(prob: &RadialScatteringProblem, t: &[f64], y: &[f64]) -> Vec<SamplePair> {
    let k = prob.k();
    let Some(j) = t.len().checked_sub(1) else {
        return Vec::new();
    };
    (0..j)
        .filter(|&i| t[i] >= prob.pair_window - 1e-12)
        .map(|i| {
            let (num, den, det) = tan_parts(y[i], y[j], t[i], t[j], k, prob.l);
            SamplePair {
                i,
                j,
                num,
                den,
                det,
            }
        })
        .collect()
}

/// The candidate with the largest determinant.
pub fn best_pair(pairs: &[SamplePair]) -> Option<SamplePair> {
    pairs
        .iter()
        .filter(|p| p.det >= 1e-8)
        .max_by(|a, b| a.det.total_cmp(&b.det).then(a.i.cmp(&b.i)))
        .copied()
}

/// Phase shift of `prob` computed with `method`.
pub fn solve_phase_shift(
    prob: &RadialScatteringProblem,
    method: MethodId,
) -> Result<PhaseShiftResult> {
    solve_phase_shift_with(prob, method, &CoeffOptions::default(), FRAC_PI_2)
}

/// As [`solve_phase_shift`], with explicit options and reference value.
pub fn solve_phase_shift_with(
    prob: &RadialScatteringProblem,
    method: MethodId,
    opts: &CoeffOptions,
    target: f64,
) -> Result<PhaseShiftResult> {
    let traj = solve_radial(prob, method, opts)?;
    if let Some(i) = traj.y.iter().position(|y| !y.is_finite()) {
        return Err(Error::Diverged { x: traj.t[i] });
    }
    let pairs = candidate_pairs(prob, &traj.t, &traj.y);
    let SamplePair { i, j, num, den, .. } = best_pair(&pairs).ok_or(Error::IllConditionedPair {
        x0: prob.pair_window,
        x1: prob.x_end,
    })?;
    let delta = fold(num, den);
    Ok(PhaseShiftResult {
        tan_delta: num / den,
        delta,
        digits: accuracy_digits(delta, target),
        pair_used: (traj.t[i], traj.t[j]),
        steps: traj.t.len() - 1,
        rhs_evals: traj.rhs_evals,
    })
}

/// One benchmark measurement.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub energy: f64,
    pub method: MethodId,
    pub h: f64,
    pub steps: usize,
    pub rhs_evals: usize,
    pub tan_delta: f64,
    pub delta: f64,
    pub digits: f64,
    pub omega_convention: OmegaConvention,
}

/// The default step ladder `15 / (250 * 2^k)`.
pub fn h_ladder(levels: usize) -> Vec<f64> {
    (0..levels)
        .map(|k| 15.0 / (250.0 * 2f64.powi(k as i32)))
        .collect()
}

/// Every `(energy, method, h)` combination, in that nesting order. A run whose
/// step is outside the interval of periodicity, or whose solution overflows,
/// is reported with NaN phase and zero digits.
pub fn bench(
    energies: &[f64],
    methods: &[MethodId],
    hs: &[f64],
    convention: OmegaConvention,
    opts: &CoeffOptions,
) -> Result<Vec<BenchRow>> {
    let mut jobs = Vec::new();
    for &e in energies {
        for &m in methods {
            for &h in hs {
                jobs.push((e, m, h));
            }
        }
    }
    let run = |&(energy, method, h): &(f64, MethodId, f64)| -> Result<BenchRow> {
        let mut prob = RadialScatteringProblem::benchmark(energy, h);
        prob.omega_convention = convention;
        let r = match solve_phase_shift_with(&prob, method, opts, FRAC_PI_2) {
            Err(Error::Diverged { .. } | Error::OutsidePeriodicity { .. }) => PhaseShiftResult {
                tan_delta: f64::NAN,
                delta: f64::NAN,
                digits: 0.0,
                pair_used: (f64::NAN, f64::NAN),
                steps: (prob.x_end / h).round() as usize,
                rhs_evals: 0,
            },
            other => other?,
        };
        Ok(BenchRow {
            energy,
            method,
            h,
            steps: r.steps,
            rhs_evals: r.rhs_evals,
            tan_delta: r.tan_delta,
            delta: r.delta,
            digits: r.digits,
            omega_convention: convention,
        })
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        jobs.par_iter().map(run).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        jobs.iter().map(run).collect()
    }
}
