//! Browser bindings for the static demo page in `www/`.
//!
//! Every export takes plain strings/numbers and returns a JSON string, so the
//! page needs no bundler and no generated TypeScript types.

use lamplighter::metrics::{self, build_geodesic, canonical_trajectory, count_geodesics, length_report};
use lamplighter::phenomena::dead_end_depth;
use lamplighter::{BallLimits, BallTable, GenSet, Generator, GroupElement};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Geodesic counting in the page is capped lower than the library default to keep clicks snappy.
const PAGE_COUNT_BUDGET: u64 = 28;
/// Dead-end depth search is skipped above this length.
const PAGE_DEPTH_LIMIT: u64 = 24;
const PAGE_MAX_RADIUS: u32 = 14;

fn element(bulbs: &str, cursor: i64) -> Result<GroupElement, String> {
    let bulbs = lamplighter::element::parse_bulb_list(bulbs).map_err(|e| e.to_string())?;
    GroupElement::new(bulbs, cursor).map_err(|e| e.to_string())
}

fn state(e: &GroupElement) -> Value {
    json!({ "bulbs": e.bulbs(), "cursor": e.cursor() })
}

fn genset_view(e: &GroupElement, gs: GenSet) -> Value {
    let length = length_report(e, gs);
    let word = build_geodesic(e, gs);
    let count = if length.value <= PAGE_COUNT_BUDGET {
        count_geodesics(e, gs, PAGE_COUNT_BUDGET)
            .map(|r| json!({ "count": r.count.to_string(), "u": r.u }))
            .unwrap_or(Value::Null)
    } else {
        Value::Null
    };
    let dead_end = if length.value <= PAGE_DEPTH_LIMIT {
        serde_json::to_value(dead_end_depth(e, gs)).unwrap()
    } else {
        json!({ "is_dead_end": lamplighter::phenomena::is_dead_end(e, gs) })
    };
    json!({
        "length": length,
        "word": word.to_string(),
        "power_notation": word.to_power_notation(),
        "trajectory": canonical_trajectory(e, gs),
        "states": word.prefix_states().iter().map(state).collect::<Vec<_>>(),
        "geodesics": count,
        "dead_end": dead_end,
    })
}

/// Lengths, canonical geodesics with their prefix states, geodesic counts and
/// dead-end data for one element under both generating sets.
pub fn describe_json(bulbs: &str, cursor: i64) -> Result<String, String> {
    let e = element(bulbs, cursor)?;
    let view = json!({
        "element": e,
        "state": state(&e),
        "wreath": genset_view(&e, GenSet::Wreath),
        "automata": genset_view(&e, GenSet::Automata),
    });
    Ok(view.to_string())
}

/// Applies one letter of the compact alphabet (`a t T r R`) to an element.
pub fn apply_json(bulbs: &str, cursor: i64, letter: &str) -> Result<String, String> {
    let e = element(bulbs, cursor)?;
    let mut chars = letter.chars();
    let g = match (chars.next().and_then(Generator::from_symbol), chars.next()) {
        (Some(g), None) => g,
        _ => return Err(format!("unknown generator {letter:?}")),
    };
    let next = e.apply(g);
    Ok(json!({
        "element": next,
        "state": state(&next),
        "wreath": metrics::length(&next, GenSet::Wreath),
        "automata": metrics::length(&next, GenSet::Automata),
    })
    .to_string())
}

/// Sphere sizes of both Cayley graphs up to `radius`.
pub fn spheres_json(radius: u32) -> Result<String, String> {
    let limits = BallLimits {
        max_radius: PAGE_MAX_RADIUS,
        ..BallLimits::default()
    };
    let mut out = serde_json::Map::new();
    for gs in GenSet::ALL {
        let ball = BallTable::build(gs, radius, &limits).map_err(|e| e.to_string())?;
        out.insert(gs.to_string(), json!(ball.sphere_sizes()));
    }
    Ok(Value::Object(out).to_string())
}

#[wasm_bindgen]
pub fn describe(bulbs: &str, cursor: i32) -> Result<String, JsValue> {
    describe_json(bulbs, cursor as i64).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn apply(bulbs: &str, cursor: i32, letter: &str) -> Result<String, JsValue> {
    apply_json(bulbs, cursor as i64, letter).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn spheres(radius: u32) -> Result<String, JsValue> {
    spheres_json(radius).map_err(|e| JsValue::from_str(&e))
}
