//! Browser bindings. Each export returns a JSON string; the `*_json`
//! functions carry the logic and run natively in tests.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use dla_lab::closure::RankArithmetic;
use dla_lab::cycle::{self, CycleOrbit};
use dla_lab::graph::kn_formulas;
use dla_lab::linalg::DEFAULT_BUDGET;
use dla_lab::suite;
use dla_lab::{complete, purity, Error, Graph, Result};

/// Largest cycle the page will verify; the suite grows quickly with `n`.
pub const CYCLE_DEMO_MAX: usize = 12;
/// Largest complete graph the page will analyze.
pub const COMPLETE_DEMO_MAX: usize = 24;

fn round(x: f64) -> Value {
    format!("{x:.11e}").parse::<f64>().map(|v| json!(v)).unwrap_or(Value::Null)
}

fn cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("{what} needs n >= 3, got {n}")));
    }
    if n > cap {
        return Err(Error::SizeCap { what, cap, n });
    }
    Ok(())
}

/// Dimensions, verification checks and variance of the cycle on `n` vertices.
pub fn cycle_report_json(n: usize) -> Result<String> {
    cap("cycle demo", n, CYCLE_DEMO_MAX)?;
    let r = suite::analyze_graph(&Graph::cycle(n)?, true, RankArithmetic::Exact, DEFAULT_BUDGET)?;
    let checks = suite::verify_cycle(n, 1e-9, DEFAULT_BUDGET)?;
    let spectral = purity::cycle_closed_forms(n)?;
    Ok(json!({
        "n": n,
        "dim": r.dimension,
        "degree": r.degree,
        "center_dim": r.center_dim,
        "ideal_dim": r.ideal_dim,
        "expectation": round(spectral.expectation),
        "variance": round(spectral.variance),
        "variance_exact": purity::cycle_variance_exact(n)?.to_string(),
        "checks": checks
            .iter()
            .map(|c| json!({
                "tag": c.tag,
                "passed": c.passed,
                "residual": c.residual.map(round).unwrap_or(Value::Null),
            }))
            .collect::<Vec<_>>(),
    })
    .to_string())
}

/// Closure in `(p, q, r)` labels next to the closed-form dimensions.
pub fn complete_report_json(n: usize) -> Result<String> {
    cap("complete demo", n, COMPLETE_DEMO_MAX)?;
    let r = complete::complete_report(n, DEFAULT_BUDGET)?;
    let f = kn_formulas(n)?;
    Ok(json!({
        "n": n,
        "dim": r.dimension,
        "degree": r.degree,
        "ideal_dim": r.ideal_dimension,
        "center_dim": r.center_dimension,
        "formula": { "dim": f.dim, "ideal_dim": f.ideal_dim, "center_dim": f.center_dim },
        "yz_even_bound": f.yz_bound,
        "binomial_bound": f.binom_bound,
        "explicit_basis_ok": r.basis_matches_closure && r.ideal_basis_matches,
    })
    .to_string())
}

/// Labels of the `3n - 1` basis orbits of the cycle, in index order.
pub fn cycle_orbits_json(n: usize) -> Result<String> {
    cap("cycle demo", n, 64)?;
    let labels: Vec<String> = cycle::cycle_basis(n)?.iter().map(CycleOrbit::to_string).collect();
    Ok(json!(labels).to_string())
}

/// Bracket of basis orbits `i` and `j` of the cycle.
pub fn bracket_json(n: usize, i: usize, j: usize) -> Result<String> {
    cap("cycle demo", n, 64)?;
    let basis = cycle::cycle_basis(n)?;
    let pick = |k: usize| {
        basis
            .get(k)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("orbit index {k} out of range 0..{}", basis.len())))
    };
    let (a, b) = (pick(i)?, pick(j)?);
    let terms: Vec<Value> = cycle::orbit_bracket(n, a, b)?
        .terms()
        .map(|(o, c)| json!({ "orbit": o.to_string(), "coefficient": c }))
        .collect();
    Ok(json!({ "left": a.to_string(), "right": b.to_string(), "terms": terms }).to_string())
}

fn js(r: Result<String>) -> std::result::Result<String, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = cycleReport)]
pub fn cycle_report(n: usize) -> std::result::Result<String, JsError> {
    js(cycle_report_json(n))
}

#[wasm_bindgen(js_name = completeReport)]
pub fn complete_report(n: usize) -> std::result::Result<String, JsError> {
    js(complete_report_json(n))
}

#[wasm_bindgen(js_name = cycleOrbits)]
pub fn cycle_orbits(n: usize) -> std::result::Result<String, JsError> {
    js(cycle_orbits_json(n))
}

#[wasm_bindgen]
pub fn bracket(n: usize, i: usize, j: usize) -> std::result::Result<String, JsError> {
    js(bracket_json(n, i, j))
}
