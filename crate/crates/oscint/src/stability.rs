//! Stability of the methods applied to `y'' = -omega^2 y`, via the roots of
//! the characteristic polynomial `sum_k A_{|k-7|} z^k`.
//!
//! The polynomial is self-reciprocal, so `w = z + 1/z` turns it into a degree-7
//! polynomial `Q(w) = A_0 + sum_j A_j V_j(w)` with `V_j(z + 1/z) = z^j + z^-j`.
//! A root pair lies on the unit circle exactly when its `w` is real in
//! `[-2, 2]`. Classifying in `w` keeps the consistency double root at `z = 1`
//! (a simple root `w = 2`) well conditioned.

use nalgebra::{Complex, DMatrix};
use serde::Serialize;

use crate::coefficients::{coefficients_with, CoeffOptions, CoefficientSet, MethodId};
use crate::error::{Error, Result};

/// Modulus tolerance for "on the unit circle".
pub const TOL_MOD: f64 = 1e-8;

pub type C64 = Complex<f64>;

/// Coefficients `c_0..c_14` of `z^7 * (A_0 + sum_j A_j (z^j + z^-j))`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharacteristicPolynomial {
    pub c: [f64; 15],
}

pub fn characteristic_polynomial(
    coeffs: &CoefficientSet,
    s: f64,
) -> Result<CharacteristicPolynomial> {
    let w = crate::phaselag::stencil_weights(coeffs, s).a;
    if w[7].abs() < 1e-14 {
        return Err(Error::LeadingCoefficientZero);
    }
    Ok(CharacteristicPolynomial {
        c: std::array::from_fn(|k| w[(k as i64 - 7).unsigned_abs() as usize]),
    })
}

fn horner(c: &[f64], z: C64) -> (C64, C64) {
    let mut p = C64::new(0.0, 0.0);
    let mut dp = C64::new(0.0, 0.0);
    for x in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + C64::new(*x, 0.0);
    }
    (p, dp)
}

/// Roots of `sum_k c[k] z^k` as eigenvalues of the companion matrix, each
/// polished by Newton steps that are kept only while the residual shrinks.
pub fn roots_of(c: &[f64]) -> Result<Vec<C64>> {
    let n = c.len() - 1;
    let lead = c[n];
    if lead == 0.0 || !lead.is_finite() {
        return Err(Error::LeadingCoefficientZero);
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut m = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        m[(0, k)] = -c[n - 1 - k] / lead;
    }
    for k in 1..n {
        m[(k, k - 1)] = 1.0;
    }
    let schur = nalgebra::linalg::Schur::try_new(m, f64::EPSILON, 10_000)
        .ok_or(Error::ConvergenceFailure)?;
    let mut roots: Vec<C64> = schur.complex_eigenvalues().iter().copied().collect();
    for z in roots.iter_mut() {
        let mut best = *z;
        let mut best_res = horner(c, *z).0.norm();
        let mut cur = *z;
        for _ in 0..8 {
            let (p, dp) = horner(c, cur);
            if dp.norm() == 0.0 {
                break;
            }
            cur -= p / dp;
            let r = horner(c, cur).0.norm();
            if !(r < best_res) {
                break;
            }
            best = cur;
            best_res = r;
        }
        *z = best;
    }
    if roots.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::ConvergenceFailure);
    }
    Ok(roots)
}

/// All 14 roots of the characteristic polynomial.
pub fn polynomial_roots(poly: &CharacteristicPolynomial) -> Result<Vec<C64>> {
    roots_of(&poly.c)
}

/// Coefficients of `Q(w)` in the monomial basis.
fn reduced_polynomial(a: &[f64; 8]) -> [f64; 8] {
    // V_0 = 2, V_1 = w, V_{j+1} = w V_j - V_{j-1}
    let mut v_prev = [0.0; 8];
    v_prev[0] = 2.0;
    let mut v_cur = [0.0; 8];
    v_cur[1] = 1.0;
    let mut q = [0.0; 8];
    q[0] = a[0];
    for (j, aj) in a.iter().enumerate().skip(1) {
        for k in 0..8 {
            q[k] += aj * v_cur[k];
        }
        if j < 7 {
            let mut next = [0.0; 8];
            for k in 0..7 {
                next[k + 1] += v_cur[k];
            }
            for k in 0..8 {
                next[k] -= v_prev[k];
            }
            v_prev = v_cur;
            v_cur = next;
        }
    }
    q
}

/// Roots `w` of the reduced polynomial at `s`.
pub fn reduced_roots(coeffs: &CoefficientSet, s: f64) -> Result<Vec<C64>> {
    let a = crate::phaselag::stencil_weights(coeffs, s).a;
    if a[7].abs() < 1e-14 {
        return Err(Error::LeadingCoefficientZero);
    }
    roots_of(&reduced_polynomial(&a))
}

/// The two roots of `z^2 - w z + 1`.
pub fn z_from_w(w: C64) -> [C64; 2] {
    let d = (w * w - C64::new(4.0, 0.0)).sqrt();
    [(w + d) * 0.5, (w - d) * 0.5]
}

/// Periodic stability at `s`: every root on the closed unit disc within
/// [`TOL_MOD`], i.e. every reduced root real in `[-2, 2]`.
pub fn is_stable(coeffs: &CoefficientSet, s: f64) -> Result<bool> {
    let ws = reduced_roots(coeffs, s)?;
    let tol = 2.0 * TOL_MOD;
    Ok(ws
        .iter()
        .all(|w| w.im.abs() <= tol && w.re.abs() <= 2.0 + tol))
}

/// A rectangle in the (s, v) plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub s_min: f64,
    pub s_max: f64,
    pub v_min: f64,
    pub v_max: f64,
    pub n_s: usize,
    pub n_v: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            s_min: 0.0,
            s_max: 10.0,
            v_min: 0.0,
            v_max: 10.0,
            n_s: 400,
            n_v: 400,
        }
    }
}

impl GridSpec {
    pub fn s_at(&self, i: usize) -> f64 {
        lerp(self.s_min, self.s_max, i, self.n_s)
    }

    pub fn v_at(&self, j: usize) -> f64 {
        lerp(self.v_min, self.v_max, j, self.n_v)
    }
}

fn lerp(lo: f64, hi: f64, i: usize, n: usize) -> f64 {
    if n < 2 {
        lo
    } else {
        lo + (hi - lo) * i as f64 / (n - 1) as f64
    }
}

/// Stability flags over a grid, `flags[i * n_v + j]` for `(s_i, v_j)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityGrid {
    pub method: MethodId,
    pub spec: GridSpec,
    pub flags: Vec<bool>,
    /// Grid points where coefficients or roots could not be computed; they are
    /// reported unstable.
    pub failures: Vec<(f64, f64, String)>,
}

impl StabilityGrid {
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.flags[i * self.spec.n_v + j]
    }
}

/// Coefficients for one column of a scan. At `v = 0` the phase-fitted weights
/// take their classical limit.
fn column_coeffs(method: MethodId, v: f64, opts: &CoeffOptions) -> Result<CoefficientSet> {
    if v == 0.0 {
        return coefficients_with(MethodId::Classical, 0.0, opts).map(|mut c| {
            c.method = method;
            c
        });
    }
    coefficients_with(method, v, opts)
}

type Column = (Vec<bool>, Vec<(f64, f64, String)>);

fn scan_column(method: MethodId, spec: &GridSpec, j: usize, opts: &CoeffOptions) -> Column {
    let v = spec.v_at(j);
    let mut fails = Vec::new();
    let coeffs = match column_coeffs(method, v, opts) {
        Ok(c) => Some(c),
        Err(e) => {
            fails.push((f64::NAN, v, e.to_string()));
            None
        }
    };
    let flags = (0..spec.n_s)
        .map(|i| {
            let s = spec.s_at(i);
            match &coeffs {
                None => false,
                Some(c) => match is_stable(c, s) {
                    Ok(f) => f,
                    Err(e) => {
                        fails.push((s, v, e.to_string()));
                        false
                    }
                },
            }
        })
        .collect();
    (flags, fails)
}

/// Classify every grid point. Columns of constant v run in parallel.
pub fn scan_region(method: MethodId, spec: GridSpec) -> Result<StabilityGrid> {
    scan_region_with(method, spec, &CoeffOptions::default())
}

pub fn scan_region_with(
    method: MethodId,
    spec: GridSpec,
    opts: &CoeffOptions,
) -> Result<StabilityGrid> {
    if spec.n_s < 2 || spec.n_v < 2 {
        return Err(Error::InvalidInput("grid sizes must be at least 2".into()));
    }
    if !(spec.v_min >= 0.0 && spec.v_max >= spec.v_min && spec.s_max >= spec.s_min) {
        return Err(Error::InvalidInput("grid bounds are not ordered".into()));
    }
    // the window may extend past the default frequency ceiling
    let opts = CoeffOptions {
        v_max: opts.v_max.max(spec.v_max),
        ..opts.clone()
    };
    let columns: Vec<Column> = {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            (0..spec.n_v)
                .into_par_iter()
                .map(|j| scan_column(method, &spec, j, &opts))
                .collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            (0..spec.n_v)
                .map(|j| scan_column(method, &spec, j, &opts))
                .collect()
        }
    };
    let mut flags = vec![false; spec.n_s * spec.n_v];
    let mut failures = Vec::new();
    for (j, (col, fails)) in columns.into_iter().enumerate() {
        for (i, f) in col.into_iter().enumerate() {
            flags[i * spec.n_v + j] = f;
        }
        failures.extend(fails);
    }
    Ok(StabilityGrid {
        method,
        spec,
        flags,
        failures,
    })
}

/// Largest `s` such that the method is stable on all of `(0, s]`, scanning
/// with `step` and refining the first transition by bisection to `tol`.
pub fn periodicity_endpoint(
    coeffs: &CoefficientSet,
    s_max: f64,
    step: f64,
    tol: f64,
) -> Result<f64> {
    let mut lo = 0.0;
    let mut s = step;
    while s <= s_max {
        if !is_stable(coeffs, s)? {
            let mut hi = s;
            while hi - lo > tol {
                let mid = 0.5 * (lo + hi);
                if is_stable(coeffs, mid)? {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return Ok(lo);
        }
        lo = s;
        s += step;
    }
    Ok(s_max)
}
