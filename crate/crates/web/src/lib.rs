//! WebAssembly bindings for the single-page demo in `www/`.
//!
//! The page calls three operations, each returning a JSON string:
//! [`trace`] (animate one sort's swaps), [`curve`] (operation counts against
//! n, with a growth-model fit) and [`compare`] (ExpoSort, CubeSort and
//! InsertionSort side by side on one input). The logic lives in [`demo`] so
//! it can be tested natively.

pub mod demo;

use wasm_bindgen::prelude::*;

fn js(result: Result<String, String>) -> Result<String, JsError> {
    result.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn trace(algorithm: &str, input: &str, seed: u32) -> Result<String, JsError> {
    js(demo::trace(algorithm, input, u64::from(seed)))
}

#[wasm_bindgen]
pub fn curve(
    algorithm: &str,
    case: &str,
    n_min: u32,
    n_max: u32,
    seed: u32,
) -> Result<String, JsError> {
    js(demo::curve(
        algorithm,
        case,
        n_min as usize,
        n_max as usize,
        u64::from(seed),
    ))
}

#[wasm_bindgen]
pub fn compare(input: &str) -> Result<String, JsError> {
    js(demo::compare(input))
}

/// Largest n [`curve`] accepts for `algorithm`, so the page can clamp its slider.
#[wasm_bindgen]
pub fn curve_limit(algorithm: &str) -> Result<u32, JsError> {
    demo::parse_algorithm(algorithm)
        .map(|alg| demo::curve_limit(alg) as u32)
        .map_err(|e| JsError::new(&e))
}
