//! Fixed-step driver for the explicit 14-step recurrence
//! `sum_j a_j y_{n+j} = h^2 sum_j b_j f_{n+j}` on `y'' = f(t, y)`.

use std::cell::Cell;

use serde::Serialize;

use crate::coefficients::{coefficients_with, CoeffOptions, CoefficientSet, MethodId, STEPS};
use crate::error::{Error, Result};

/// Right-hand side `f(t, y)` of `y'' = f(t, y)`.
pub type Rhs<'a> = &'a (dyn Fn(f64, f64) -> f64 + Sync);

/// How the values after `y(t0)` are obtained.
#[derive(Clone, Copy)]
pub enum Start<'a> {
    /// Initial slope `y'(t0)`.
    Slope(f64),
    /// The value `y(t0 + h)`; the slope is found by shooting.
    Value(f64),
    /// A known local solution, sampled directly at the starting nodes.
    Exact(&'a (dyn Fn(f64) -> f64 + Sync)),
}

#[derive(Clone, Copy)]
pub struct SecondOrderIvp<'a> {
    pub rhs: Rhs<'a>,
    pub t0: f64,
    pub y0: f64,
    pub start: Start<'a>,
}

/// Piecewise-constant fitted frequency: `omegas[i]` applies on
/// `[breakpoints[i-1], breakpoints[i])`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrequencySchedule {
    pub breakpoints: Vec<f64>,
    pub omegas: Vec<f64>,
}

impl FrequencySchedule {
    pub fn constant(omega: f64) -> Self {
        FrequencySchedule {
            breakpoints: Vec::new(),
            omegas: vec![omega],
        }
    }

    pub fn new(breakpoints: Vec<f64>, omegas: Vec<f64>) -> Result<Self> {
        if omegas.len() != breakpoints.len() + 1 {
            return Err(Error::InvalidInput(
                "a schedule needs one more frequency than breakpoints".into(),
            ));
        }
        if breakpoints.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidInput("breakpoints must ascend".into()));
        }
        if omegas.iter().any(|w| !(*w > 0.0 && w.is_finite())) {
            return Err(Error::InvalidInput("frequencies must be positive".into()));
        }
        Ok(FrequencySchedule {
            breakpoints,
            omegas,
        })
    }

    /// Index of the segment containing `t`.
    pub fn segment(&self, t: f64) -> usize {
        self.breakpoints.iter().take_while(|b| t >= **b).count()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    pub t: Vec<f64>,
    pub y: Vec<f64>,
    pub f: Vec<f64>,
    pub method: MethodId,
    pub h: f64,
    pub rhs_evals: usize,
}

/// Extrapolation depth of the starter, and the largest `omega * dt` it takes
/// per substep; `omega` is estimated from `df/dy` at the start of every step.
const BOOT_LEVELS: usize = 6;
const BOOT_PHASE: f64 = 0.05;
const BOOT_MAX_SUBSTEPS: usize = 4096;

/// One extrapolated modified-midpoint step of size `big_h` for `(y, y')`.
/// Order `2 * BOOT_LEVELS`.
fn gbs_step(rhs: Rhs, t: f64, y: f64, yp: f64, big_h: f64, evals: &Cell<usize>) -> (f64, f64) {
    let mut table: Vec<[f64; 2]> = Vec::with_capacity(BOOT_LEVELS);
    let mut hs: Vec<f64> = Vec::with_capacity(BOOT_LEVELS);
    for level in 0..BOOT_LEVELS {
        let n = 2 * (level + 1);
        let h = big_h / n as f64;
        let f = |tt: f64, yy: f64| {
            evals.set(evals.get() + 1);
            rhs(tt, yy)
        };
        // modified midpoint on u = (y, y'), u' = (y', f)
        let (mut y0, mut p0) = (y, yp);
        let (mut y1, mut p1) = (y + h * yp, yp + h * f(t, y));
        for m in 1..n {
            let tm = t + m as f64 * h;
            let y2 = y0 + 2.0 * h * p1;
            let p2 = p0 + 2.0 * h * f(tm, y1);
            y0 = y1;
            p0 = p1;
            y1 = y2;
            p1 = p2;
        }
        let fe = f(t + big_h, y1);
        let est = [0.5 * (y1 + y0 + h * p1), 0.5 * (p1 + p0 + h * fe)];
        hs.push(h * h);
        table.push(est);
        // Neville extrapolation to h = 0 in powers of h^2
        let k = table.len() - 1;
        for i in (0..k).rev() {
            let r = hs[i] / hs[k];
            for c in 0..2 {
                table[i][c] = table[i + 1][c] + (table[i + 1][c] - table[i][c]) / (r - 1.0);
            }
        }
    }
    (table[0][0], table[0][1])
}

fn run_starter(
    rhs: Rhs,
    t0: f64,
    y0: f64,
    yp0: f64,
    h: f64,
    count: usize,
    evals: &Cell<usize>,
) -> Vec<f64> {
    let mut ys = vec![y0];
    let (mut y, mut yp) = (y0, yp0);
    for k in 0..count {
        let tk = t0 + k as f64 * h;
        let dy = 1e-6 * y.abs().max(1e-3);
        evals.set(evals.get() + 2);
        let omega = ((rhs(tk, y + dy) - rhs(tk, y)) / dy).abs().sqrt();
        let n = if omega.is_finite() {
            ((omega * h / BOOT_PHASE).ceil() as usize).clamp(2, BOOT_MAX_SUBSTEPS)
        } else {
            BOOT_MAX_SUBSTEPS
        };
        let sub = h / n as f64;
        for m in 0..n {
            let t = tk + m as f64 * sub;
            (y, yp) = gbs_step(rhs, t, y, yp, sub, evals);
        }
        ys.push(y);
    }
    ys
}

/// Slope `y'(t0)` that carries `y0` to `y1` after one step, by secant iteration
/// (exact after one update for linear equations).
fn shoot_slope(rhs: Rhs, t0: f64, y0: f64, y1: f64, h: f64, evals: &Cell<usize>) -> f64 {
    let reach = |sigma: f64| run_starter(rhs, t0, y0, sigma, h, 1, evals)[1] - y1;
    let mut s0 = (y1 - y0) / h;
    let mut r0 = reach(s0);
    let mut s1 = if s0 == 0.0 { 1e-3 } else { s0 * (1.0 + 1e-3) };
    let mut r1 = reach(s1);
    for _ in 0..30 {
        if r1 == r0 {
            break;
        }
        let s2 = s1 - r1 * (s1 - s0) / (r1 - r0);
        s0 = s1;
        r0 = r1;
        s1 = s2;
        r1 = reach(s1);
        if r1.abs() <= 1e-16 * y1.abs().max(f64::MIN_POSITIVE)
            || (s1 - s0).abs() <= 1e-16 * s1.abs()
        {
            break;
        }
    }
    s1
}

/// `y(t0), y(t0 + h), ..., y(t0 + count h)`.
pub fn bootstrap(problem: &SecondOrderIvp, h: f64, count: usize) -> Result<Vec<f64>> {
    bootstrap_counted(problem, h, count, &Cell::new(0))
}

fn bootstrap_counted(
    problem: &SecondOrderIvp,
    h: f64,
    count: usize,
    evals: &Cell<usize>,
) -> Result<Vec<f64>> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidInput("step must be positive".into()));
    }
    let t0 = problem.t0;
    Ok(match problem.start {
        Start::Exact(sol) => (0..=count).map(|k| sol(t0 + k as f64 * h)).collect(),
        Start::Slope(yp) => run_starter(problem.rhs, t0, problem.y0, yp, h, count, evals),
        Start::Value(y1) => {
            let yp = shoot_slope(problem.rhs, t0, problem.y0, y1, h, evals);
            let mut ys = run_starter(problem.rhs, t0, problem.y0, yp, h, count, evals);
            ys[1] = y1;
            ys
        }
    })
}

/// `y_{n+14}` from `y_n..y_{n+13}` and `f_{n+1}..f_{n+13}`.
pub fn step(y: &[f64], f: &[f64], coeffs: &CoefficientSet, h: f64) -> f64 {
    debug_assert_eq!(y.len(), STEPS);
    debug_assert_eq!(f.len(), STEPS - 1);
    let mut acc = 0.0;
    for j in 0..STEPS {
        if coeffs.a[j] != 0.0 {
            acc -= coeffs.a[j] * y[j];
        }
    }
    let mut force = 0.0;
    for j in 1..STEPS {
        force += coeffs.b[j] * f[j - 1];
    }
    acc + h * h * force
}

/// Advance from `t0` to `t_end` with step `h`.
pub fn integrate(
    problem: &SecondOrderIvp,
    method: MethodId,
    h: f64,
    t_end: f64,
    schedule: &FrequencySchedule,
) -> Result<Trajectory> {
    integrate_with(
        problem,
        method,
        h,
        t_end,
        schedule,
        &CoeffOptions::default(),
    )
}

pub fn integrate_with(
    problem: &SecondOrderIvp,
    method: MethodId,
    h: f64,
    t_end: f64,
    schedule: &FrequencySchedule,
    opts: &CoeffOptions,
) -> Result<Trajectory> {
    let span = (t_end - problem.t0) / h;
    if !(span.is_finite() && span.round() >= STEPS as f64) {
        return Err(Error::InvalidInput(format!(
            "need at least {STEPS} steps between t0 and t_end"
        )));
    }
    let n = span.round() as usize;
    let evals = Cell::new(0usize);
    let rhs = |t: f64, y: f64| {
        evals.set(evals.get() + 1);
        (problem.rhs)(t, y)
    };
    let t: Vec<f64> = (0..=n).map(|k| problem.t0 + k as f64 * h).collect();
    let mut y = bootstrap_counted(problem, h, STEPS - 1, &evals)?;
    y.reserve(n + 1 - y.len());
    let mut f: Vec<f64> = (0..STEPS).map(|k| rhs(t[k], y[k])).collect();

    let mut cache: Vec<Option<CoefficientSet>> = vec![None; schedule.omegas.len()];
    let mut weights = |tk: f64| -> Result<CoefficientSet> {
        if method == MethodId::Classical {
            return coefficients_with(method, 0.0, opts);
        }
        let seg = schedule.segment(tk).min(schedule.omegas.len() - 1);
        if cache[seg].is_none() {
            cache[seg] = Some(coefficients_with(method, schedule.omegas[seg] * h, opts)?);
        }
        Ok(cache[seg].clone().expect("filled above"))
    };
    let mut current = weights(t[STEPS - 1])?;
    for k in STEPS..=n {
        // weights follow the segment of the newest known node
        if method != MethodId::Classical {
            current = weights(t[k - 1])?;
        }
        let next = step(&y[k - STEPS..k], &f[k - STEPS + 1..k], &current, h);
        y.push(next);
        f.push(rhs(t[k], next));
    }
    Ok(Trajectory {
        t,
        y,
        f,
        method,
        h,
        rhs_evals: evals.get(),
    })
}
