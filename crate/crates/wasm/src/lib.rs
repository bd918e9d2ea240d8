//! Browser bindings. Every export returns a JSON string; the page renders it.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use kclass_core::autorbits::{element_order_spectrum, k_star, AmbientPair};
use kclass_core::bounds::{c2_limit, gamma, k_star_lower_bound, psl2_class_count, LieFamily, LieFamilySpec};
use kclass_core::construct::psl2_in_aut;
use kclass_core::corpus::parse_group_file;
use kclass_core::permcore::FiniteGroup;

/// Keeps the page responsive; the native tools go much higher.
pub const BROWSER_CAP: usize = 1_000_000;
pub const MAX_Q: u64 = 61;

pub fn gamma_curve_value(log2_aut: f64, k_min: u64, k_max: u64) -> Result<Value, String> {
    if !(log2_aut.is_finite() && log2_aut > 0.0) {
        return Err("log2|Aut| must be positive".into());
    }
    if k_min < 3 || k_max < k_min || k_max - k_min > 2000 {
        return Err("need 3 <= k_min <= k_max <= k_min + 2000".into());
    }
    let mut points = Vec::new();
    let mut first_generic = None;
    for k in k_min..=k_max {
        let g = gamma(log2_aut, k).map_err(|e| e.to_string())?.gamma;
        let (limit, inclusive, _) = c2_limit(log2_aut, k);
        let holds = if inclusive { g <= limit } else { g < limit };
        if holds && first_generic.is_none() {
            first_generic = Some(k);
        }
        points.push(json!({ "k": k, "gamma": g, "limit": limit, "holds": holds }));
    }
    Ok(json!({ "log2_aut": log2_aut, "first_k_within_bound": first_generic, "points": points }))
}

pub fn psl2_value(q: u64) -> Result<Value, String> {
    if q > MAX_Q {
        return Err(format!("q must be at most {MAX_Q} in the browser"));
    }
    let c = psl2_in_aut(q as usize).ok_or_else(|| format!("{q} is not a prime power >= 4"))?;
    let ambient = FiniteGroup::new(c.degree, c.ambient).map_err(|e| e.to_string())?;
    let pair = AmbientPair::new(ambient, c.socle).map_err(|e| e.to_string())?;
    let order_t = pair.socle().order_exact();
    let order_a = pair.ambient().order_exact();
    let k_t = pair.socle().classes(BROWSER_CAP).map_err(|e| e.to_string())?.k();
    let ks = k_star(&pair, BROWSER_CAP).map_err(|e| e.to_string())? as u64;
    let orders = element_order_spectrum(pair.socle(), BROWSER_CAP).map_err(|e| e.to_string())?;
    let spec = LieFamilySpec::with_q(LieFamily::Linear, 2, q).map_err(|e| e.to_string())?;
    let lower = k_star_lower_bound(&spec, Some(orders.len() as u64)).map_err(|e| e.to_string())?;
    let formula = psl2_class_count(q).map_err(|e| e.to_string())?;
    let g = gamma((order_a as f64).log2(), ks).map_err(|e| e.to_string())?.gamma;
    Ok(json!({
        "q": q,
        "degree": c.degree,
        "order_T": order_t.to_string(),
        "order_Aut": order_a.to_string(),
        "k_T": k_t,
        "k_T_formula": formula,
        "k_star": ks,
        "k_star_lower_bound": lower,
        "element_orders": orders.into_iter().collect::<Vec<_>>(),
        "gamma": g,
    }))
}

pub fn analyze_value(text: &str) -> Result<Value, String> {
    let file = parse_group_file(text).map_err(|e| e.to_string())?;
    let ambient = FiniteGroup::new(file.degree, file.ambient().to_vec()).map_err(|e| e.to_string())?;
    let pair = if file.has_socle_section() {
        AmbientPair::new(ambient, file.socle().to_vec()).map_err(|e| e.to_string())?
    } else {
        AmbientPair::trivial_extension(ambient)
    };
    let a = pair.ambient();
    let t = pair.socle();
    let mut out = json!({
        "name": file.name,
        "degree": file.degree,
        "order_A": a.order_exact().to_string(),
        "order_T": t.order_exact().to_string(),
        "index": pair.out_index().to_string(),
    });
    if a.order_exact() > BROWSER_CAP as u128 {
        out["note"] = json!(format!("|A| exceeds {BROWSER_CAP}; enumeration skipped"));
        return Ok(out);
    }
    let classes = t.classes(BROWSER_CAP).map_err(|e| e.to_string())?;
    out["k_T"] = json!(classes.k());
    out["class_sizes_T"] = json!(classes.size_multiset());
    out["k_A"] = json!(a.classes(BROWSER_CAP).map_err(|e| e.to_string())?.k());
    out["k_star"] = json!(k_star(&pair, BROWSER_CAP).map_err(|e| e.to_string())?);
    let orders = element_order_spectrum(t, BROWSER_CAP).map_err(|e| e.to_string())?;
    out["element_orders"] = json!(orders.into_iter().collect::<Vec<_>>());
    Ok(out)
}

fn finish(v: Result<Value, String>) -> Result<String, JsError> {
    v.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn gamma_curve(log2_aut: f64, k_min: u32, k_max: u32) -> Result<String, JsError> {
    finish(gamma_curve_value(log2_aut, k_min as u64, k_max as u64))
}

#[wasm_bindgen]
pub fn psl2(q: u32) -> Result<String, JsError> {
    finish(psl2_value(q as u64))
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsError> {
    finish(analyze_value(text))
}
