//! WebAssembly bindings behind `www/index.html`.
//!
//! Each export wraps a plain function returning `Result<String, String>`;
//! the plain functions are what the native tests call.

use harmonic_knots::chebgeom::HarmonicTriple;
use harmonic_knots::classify::{analyze, cf_report};
use harmonic_knots::render::{render_billiard, render_xy, RenderOptions};
use wasm_bindgen::prelude::*;

/// Largest `(a−1)(b−1)` the page accepts, to keep the UI responsive.
pub const MAX_CROSSING_PRODUCT: u64 = 240;

fn knot(a: u32, b: u32, c: u32) -> Result<HarmonicTriple, String> {
    let k = HarmonicTriple::new(a.into(), b.into(), c.into()).map_err(|e| e.to_string())?;
    if (k.a() - 1) * (k.b() - 1) > MAX_CROSSING_PRODUCT {
        return Err(format!("{k} has {} crossings; the demo stops at {}", k.crossing_count(), MAX_CROSSING_PRODUCT / 2));
    }
    Ok(k)
}

pub fn analysis_json(a: u32, b: u32, c: u32) -> Result<String, String> {
    let report = analyze(&knot(a, b, c)?).map_err(|e| e.to_string())?;
    let mut v = serde_json::to_value(&report).map_err(|e| e.to_string())?;
    // the page shows Δ as text
    v["alexander_text"] = report.alexander_poly().to_string().into();
    if let Some(f) = &report.fraction {
        v["fraction_text"] = f.canonical_up_to_mirror().to_string().into();
    }
    Ok(v.to_string())
}

pub fn diagram(a: u32, b: u32, c: u32, billiard: bool, signs: bool) -> Result<String, String> {
    let k = knot(a, b, c)?;
    let opts = RenderOptions { annotate_signs: signs, width: 420.0, ..Default::default() };
    let svg = if billiard { render_billiard(&k, &opts) } else { render_xy(&k, &opts) };
    svg.map_err(|e| e.to_string())
}

pub fn fraction_json(alpha: i32, beta: i32) -> Result<String, String> {
    let r = cf_report(alpha.into(), beta.into()).map_err(|e| e.to_string())?;
    serde_json::to_string(&r).map_err(|e| e.to_string())
}

/// Full analysis report of `H(a,b,c)` as JSON.
#[wasm_bindgen(js_name = analyze)]
pub fn analyze_js(a: u32, b: u32, c: u32) -> Result<String, JsError> {
    analysis_json(a, b, c).map_err(|e| JsError::new(&e))
}

/// SVG of the Chebyshev diagram, or of the billiard trajectory.
#[wasm_bindgen(js_name = render)]
pub fn render_js(a: u32, b: u32, c: u32, billiard: bool, signs: bool) -> Result<String, JsError> {
    diagram(a, b, c, billiard, signs).map_err(|e| JsError::new(&e))
}

/// Continued-fraction report of `alpha/beta` as JSON.
#[wasm_bindgen(js_name = continuedFraction)]
pub fn continued_fraction_js(alpha: i32, beta: i32) -> Result<String, JsError> {
    fraction_json(alpha, beta).map_err(|e| JsError::new(&e))
}
