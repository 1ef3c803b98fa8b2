//! Browser bindings: three JSON-returning operations for the demo page in
//! `www/`. The plain functions are usable natively; the `wasm_*` exports wrap
//! them for JavaScript.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use nilcone::character::{expected_invariant_dim, invariant_dims};
use nilcone::oracle::{
    default_radius, invariance_residual, odd_section_obstruction, QuadratureGrid, TestFunction,
};
use nilcone::rational::to_text;
use nilcone::sl2::Generator;
use nilcone::solver::{casimir_orbit, change_of_basis, expected_kernel_dim, kernel_basis};
use nilcone::TransversalDist;

const MAX_N: u32 = 16;
const MAX_ORDER: u32 = 12;
const MAX_DEGREE: u32 = 40;
const MAX_POINTS: usize = 512;

fn term_list(psi: &TransversalDist) -> Value {
    let terms: Vec<Value> = psi
        .terms()
        .map(|((i, k), c)| json!({ "i": i, "k": k, "coeff": to_text(c) }))
        .collect();
    json!({ "text": psi.to_string(), "terms": terms })
}

/// Casimir orbit of `δ ⊗ v_n`, the normalized kernel basis, and the
/// triangular matrix between them.
pub fn orbit_explorer(n: u32, max_order: u32) -> Result<String, String> {
    if n > MAX_N || max_order > MAX_ORDER {
        return Err(format!("demo limits: n ≤ {MAX_N}, order ≤ {MAX_ORDER}"));
    }
    let basis = kernel_basis(n, max_order).map_err(|e| e.to_string())?;
    let orbit = casimir_orbit(n, max_order).map_err(|e| e.to_string())?;
    let size = if n % 2 == 0 { max_order } else { max_order.min((n - 1) / 2) };
    let change = change_of_basis(n, size).map_err(|e| e.to_string())?;
    let change: Vec<Vec<String>> = change
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect();
    Ok(json!({
        "n": n,
        "max_order": max_order,
        "dimension": basis.len(),
        "expected_dimension": expected_kernel_dim(n, max_order),
        "basis": basis.iter().map(term_list).collect::<Vec<_>>(),
        "orbit": orbit.iter().map(term_list).collect::<Vec<_>>(),
        "change_of_basis": change,
    })
    .to_string())
}

/// Multiplicity of `V_n` in `S^m(g)` for `m ≤ max_degree`, from characters and
/// from the closed form.
pub fn graded_dims(n: u32, max_degree: u32) -> Result<String, String> {
    if n > 2 * MAX_DEGREE || max_degree > MAX_DEGREE {
        return Err(format!("demo limit: degree ≤ {MAX_DEGREE}"));
    }
    let dims = invariant_dims(n, max_degree);
    let closed: Vec<u64> = (0..=max_degree).map(|m| expected_invariant_dim(n, m)).collect();
    Ok(json!({ "n": n, "dims": dims, "agrees": dims == closed }).to_string())
}

/// Quadrature residuals for grids of 8, 16, … up to `max_points` points per
/// axis: the invariance residual for `Z = H, X, Y` when `n` is even, the
/// section obstruction when `n` is odd.
pub fn residual_study(n: u32, sigma: f64, max_points: usize) -> Result<String, String> {
    if n > 6 || !(8..=MAX_POINTS).contains(&max_points) {
        return Err(format!("demo limits: n ≤ 6, 8 ≤ points ≤ {MAX_POINTS}"));
    }
    let f = TestFunction::gaussian([0.0, 1.0, 0.0], sigma).map_err(|e| e.to_string())?;
    let radius = default_radius(sigma);
    let mut rows = Vec::new();
    let mut m = 8;
    while m <= max_points {
        let grid = QuadratureGrid::gauss_legendre(radius, m).map_err(|e| e.to_string())?;
        let row = if n % 2 == 0 {
            let mut series = serde_json::Map::new();
            for z in Generator::ALL {
                let r = invariance_residual(n, z, &f, &grid).map_err(|e| e.to_string())?;
                series.insert(z.label().into(), json!(r.relative));
            }
            json!({ "points": m, "series": series })
        } else {
            let r = odd_section_obstruction(n, &f, &grid).map_err(|e| e.to_string())?;
            json!({ "points": m, "series": { "obstruction": r.relative } })
        };
        rows.push(row);
        m *= 2;
    }
    Ok(json!({
        "n": n,
        "sigma": sigma,
        "radius": radius,
        "kind": if n % 2 == 0 { "invariance" } else { "obstruction" },
        "rows": rows,
    })
    .to_string())
}

#[wasm_bindgen(js_name = orbitExplorer)]
pub fn wasm_orbit_explorer(n: u32, max_order: u32) -> Result<String, JsError> {
    orbit_explorer(n, max_order).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = gradedDims)]
pub fn wasm_graded_dims(n: u32, max_degree: u32) -> Result<String, JsError> {
    graded_dims(n, max_degree).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = residualStudy)]
pub fn wasm_residual_study(n: u32, sigma: f64, max_points: usize) -> Result<String, JsError> {
    residual_study(n, sigma, max_points).map_err(|e| JsError::new(&e))
}
