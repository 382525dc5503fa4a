//! wasm-bindgen bindings behind `www/index.html`.
//!
//! Each export has a plain Rust counterpart in [`demo`] so the logic can be
//! tested natively.

use wasm_bindgen::prelude::*;

pub mod demo;

fn js(e: String) -> JsError {
    JsError::new(&e)
}

/// Phase lag of `method` fitted at `v`, sampled at `n` points on `[s_min, s_max]`.
/// Returns `[s_0, lag_0, s_1, lag_1, ...]`; NaN marks a degenerate point.
#[wasm_bindgen(js_name = phaseLagCurve)]
pub fn phase_lag_curve(
    method: &str,
    v: f64,
    s_min: f64,
    s_max: f64,
    n: usize,
) -> Result<Vec<f64>, JsError> {
    demo::phase_lag_curve(method, v, s_min, s_max, n).map_err(js)
}

/// Row-major stability flags over an `n_s` by `n_v` grid, 1 for stable.
#[wasm_bindgen(js_name = stabilityGrid)]
pub fn stability_grid(
    method: &str,
    s_max: f64,
    v_max: f64,
    n_s: usize,
    n_v: usize,
) -> Result<Vec<u8>, JsError> {
    demo::stability_grid(method, s_max, v_max, n_s, n_v).map_err(js)
}

/// Phase shift and a thinned wavefunction as a JSON string.
#[wasm_bindgen(js_name = phaseShift)]
pub fn phase_shift(method: &str, energy: f64, h: f64, samples: usize) -> Result<String, JsError> {
    let r = demo::phase_shift(method, energy, h, samples).map_err(js)?;
    serde_json::to_string(&r).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = methods)]
pub fn methods() -> Vec<String> {
    demo::methods()
}
