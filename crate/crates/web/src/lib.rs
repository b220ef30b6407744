//! Browser bindings. Every entry point takes text and returns a JSON string;
//! failures come back as `{"error": "..."}` rather than exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use lienil::catalog::growth_law;
use lienil::fock::FockRep;
use lienil::format::{parse_algebra, parse_realization};
use lienil::report::{to_json, AlgebraReport};

/// Largest `m` or `k` accepted by [`corank_grid`].
pub const GRID_LIMIT: usize = 6;

fn error(msg: impl ToString) -> String {
    to_json(&json!({ "error": msg.to_string() }))
}

/// Invariant report for an algebra document.
#[wasm_bindgen]
pub fn analyze(text: &str) -> String {
    match parse_algebra(text) {
        Ok(l) => AlgebraReport::new(&l).to_json(None),
        Err(e) => error(e),
    }
}

/// Claimed and computed coranks of `h(m) ⊕ i^k` for `1 ≤ m ≤ max_m`,
/// `0 ≤ k ≤ max_k`.
#[wasm_bindgen]
pub fn corank_grid(max_m: usize, max_k: usize) -> String {
    if max_m == 0 || max_m > GRID_LIMIT || max_k > GRID_LIMIT {
        return error(format!("need 1 <= m <= {GRID_LIMIT} and k <= {GRID_LIMIT}"));
    }
    let mut cells = Vec::new();
    for m in 1..=max_m {
        for k in 0..=max_k {
            match growth_law(m, k) {
                Ok(g) => cells.push(serde_json::to_value(g).expect("serializes")),
                Err(e) => return error(e),
            }
        }
    }
    to_json(&cells)
}

/// Symbolic verification of a realization document, plus the Fock-matrix
/// cross-check at `levels` when the matrices stay small.
#[wasm_bindgen]
pub fn verify(text: &str, levels: usize) -> String {
    let r = match parse_realization(text) {
        Ok(r) => r,
        Err(e) => return error(e),
    };
    let report = match r.verify() {
        Ok(rep) => rep,
        Err(e) => return error(e),
    };
    let mismatches: Vec<Value> = report
        .mismatches
        .iter()
        .map(|m| json!({"i": m.i, "j": m.j, "difference": m.difference.to_string()}))
        .collect();
    let fock = match FockRep::bosonic(r.modes, levels) {
        Ok(rep) if rep.size() <= 400 => match rep.check_realization(&r) {
            Ok(pairs) => json!({ "agrees": pairs.iter().all(|p| p.agrees()), "levels": levels }),
            Err(e) => json!({ "refused": e.to_string() }),
        },
        Ok(_) => json!({ "refused": "matrices too large for the page" }),
        Err(e) => json!({ "refused": e.to_string() }),
    };
    to_json(&json!({
        "name": r.name,
        "is_homomorphism": report.is_homomorphism,
        "is_faithful": report.is_faithful,
        "mismatches": mismatches,
        "fock": fock,
    }))
}
