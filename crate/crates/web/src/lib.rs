//! Browser bindings: render a line arrangement, census any construction,
//! and run one verification. Build with `wasm-pack build --target web`.

use arrangement_lab::constructions::ConstructionSpec;
use arrangement_lab::export::render_svg;
use arrangement_lab::statistics::{analyze, verify_proposition, PropId, VerifyParams};
use wasm_bindgen::prelude::*;

fn spec(family: &str, d: u32, n: u32, seed: u32) -> Result<ConstructionSpec, String> {
    let (d, n) = (d as usize, n as usize);
    match family {
        "cyclic" => Ok(ConstructionSpec::CyclicStar { d, n }),
        "ao2" => Ok(ConstructionSpec::Ao2 { n }),
        "ao3" => Ok(ConstructionSpec::Ao3 { n }),
        "random" => Ok(ConstructionSpec::Random { d, n, seed: seed as u64, bound: 100 }),
        other => Err(format!("unknown family {other:?}")),
    }
}

/// Guards the browser tab against runaway enumerations.
const MAX_N: u32 = 14;

fn analysis(family: &str, d: u32, n: u32, seed: u32) -> Result<arrangement_lab::statistics::ArrangementAnalysis, String> {
    if n > MAX_N {
        return Err(format!("n is capped at {MAX_N} in the browser"));
    }
    let arr = spec(family, d, n, seed)?.build().map_err(|e| e.to_string())?;
    analyze(&arr).map_err(|e| e.to_string())
}

pub fn svg_for(family: &str, n: u32, seed: u32) -> Result<String, String> {
    render_svg(&analysis(family, 2, n, seed)?).map_err(|e| e.to_string())
}

pub fn census_for(family: &str, d: u32, n: u32, seed: u32) -> Result<String, String> {
    let report = analysis(family, d, n, seed)?.census(true);
    serde_json::to_string_pretty(&report).map_err(|e| e.to_string())
}

pub fn verify_for(prop: &str, d: u32, n: u32) -> Result<String, String> {
    if n > MAX_N {
        return Err(format!("n is capped at {MAX_N} in the browser"));
    }
    let prop: PropId = prop.parse().map_err(|e: arrangement_lab::Error| e.to_string())?;
    let params = VerifyParams { d: (d > 0).then_some(d as usize), n: (n > 0).then_some(n as usize) };
    let result = verify_proposition(prop, params).map_err(|e| e.to_string())?;
    serde_json::to_string_pretty(&result).map_err(|e| e.to_string())
}

/// SVG of a planar arrangement (`family` is cyclic, ao2 or random).
#[wasm_bindgen(js_name = renderArrangement)]
pub fn render_arrangement(family: &str, n: u32, seed: u32) -> Result<String, JsError> {
    svg_for(family, n, seed).map_err(|e| JsError::new(&e))
}

/// Census report as JSON, with one record per bounded cell.
#[wasm_bindgen]
pub fn census(family: &str, d: u32, n: u32, seed: u32) -> Result<String, JsError> {
    census_for(family, d, n, seed).map_err(|e| JsError::new(&e))
}

/// One verification result as JSON; pass 0 for an unused parameter.
#[wasm_bindgen]
pub fn verify(prop: &str, d: u32, n: u32) -> Result<String, JsError> {
    verify_for(prop, d, n).map_err(|e| JsError::new(&e))
}
