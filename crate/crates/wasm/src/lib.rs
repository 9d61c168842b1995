//! Browser bindings for the typeb library. Each exported function takes a
//! window such as `"-2 3 1"` and returns a JSON document, or an error message.

use serde::Serialize;
use typeb::patterns::{is_minimal_nonseparable_fast, is_separable, PatternSet};
use typeb::quotients::{interval_splitting, quotient_of_interval};
use typeb::weak_order::{interval_right, lower_ideal_left, reduced_word_count, reduced_words, Ideal};
use typeb::SignedPermutation;
use wasm_bindgen::prelude::*;

/// Largest rank the demo accepts.
pub const MAX_RANK: usize = 6;
/// Ideals with more elements are summarized without a Hasse diagram.
pub const MAX_DRAWN: usize = 400;

#[derive(Serialize)]
struct Classification {
    element: SignedPermutation,
    rank: usize,
    length: usize,
    inverse: SignedPermutation,
    separable: bool,
    forbidden_pattern: Option<SignedPermutation>,
    minimal_nonseparable: bool,
    reduced_word_count: String,
    reduced_word: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct Node {
    label: String,
    rank: usize,
}

#[derive(Serialize)]
struct HasseDiagram {
    element: SignedPermutation,
    side: &'static str,
    size: usize,
    polynomial: Vec<u64>,
    polynomial_text: String,
    symmetric: bool,
    unimodal: bool,
    drawn: bool,
    nodes: Vec<Node>,
    /// Pairs of node indices `(lower, upper)`.
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct SplittingSummary {
    element: SignedPermutation,
    separable: bool,
    is_splitting: bool,
    quotient_apex: SignedPermutation,
    quotient_size: usize,
    interval_size: usize,
    group_order: u64,
    witness: Option<String>,
}

fn parse(window: &str) -> Result<SignedPermutation, String> {
    let w: SignedPermutation = window.parse().map_err(|e: typeb::Error| e.to_string())?;
    if w.rank() > MAX_RANK {
        return Err(format!("rank {} is above the demo limit of {MAX_RANK}", w.rank()));
    }
    Ok(w)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

/// Separability, minimality and a reduced word.
pub fn classify(window: &str) -> Result<String, String> {
    let w = parse(window)?;
    let forbidden = PatternSet::named("sep-forbidden-6").map_err(|e| e.to_string())?;
    to_json(&Classification {
        rank: w.rank(),
        length: w.length(),
        inverse: w.inverse(),
        separable: is_separable(&w),
        forbidden_pattern: forbidden.first_contained(&w).cloned(),
        minimal_nonseparable: is_minimal_nonseparable_fast(&w),
        reduced_word_count: reduced_word_count(&w).to_string(),
        reduced_word: reduced_words(&w, 1).into_iter().next(),
        element: w,
    })
}

fn diagram(ideal: &Ideal, side: &'static str) -> HasseDiagram {
    let elements = ideal.elements();
    let poly = ideal.rank_polynomial();
    let drawn = elements.len() <= MAX_DRAWN;
    let (mut nodes, mut edges) = (Vec::new(), Vec::new());
    if drawn {
        nodes = elements.iter().map(|u| Node { label: u.to_string(), rank: u.length() }).collect();
        let n = ideal.apex().rank();
        for (k, u) in elements.iter().enumerate() {
            for i in 0..n {
                let up = if side == "left" { u.left_multiply_simple(i) } else { u.right_multiply_simple(i) };
                if up.length() > u.length() {
                    if let Ok(j) = elements.binary_search(&up) {
                        edges.push((k, j));
                    }
                }
            }
        }
    }
    HasseDiagram {
        element: ideal.apex().clone(),
        side,
        size: elements.len(),
        polynomial: poly.coeffs().to_vec(),
        polynomial_text: poly.to_string(),
        symmetric: poly.is_symmetric(),
        unimodal: poly.is_unimodal(),
        drawn,
        nodes,
        edges,
    }
}

/// The interval `[e, w]` in the left (`side = "left"`) or right weak order.
pub fn ideal(window: &str, side: &str) -> Result<String, String> {
    let w = parse(window)?;
    match side {
        "left" => to_json(&diagram(&lower_ideal_left(&w), "left")),
        "right" => to_json(&diagram(&interval_right(&w), "right")),
        other => Err(format!("unknown side {other:?}, expected \"left\" or \"right\"")),
    }
}

/// Whether `(W/[e,u]_R, [e,u]_R)` is a splitting of `B_n`.
pub fn splitting(window: &str) -> Result<String, String> {
    let u = parse(window)?;
    let report = interval_splitting(&u).map_err(|e| e.to_string())?;
    to_json(&SplittingSummary {
        separable: is_separable(&u),
        is_splitting: report.is_splitting,
        quotient_apex: quotient_of_interval(&u).apex().clone(),
        quotient_size: report.counts.x,
        interval_size: report.counts.y,
        group_order: report.counts.group,
        witness: report.witness.map(|w| serde_json::to_string(&w).unwrap_or_default()),
        element: u,
    })
}

#[wasm_bindgen(js_name = classify)]
pub fn classify_js(window: &str) -> Result<String, JsError> {
    classify(window).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = ideal)]
pub fn ideal_js(window: &str, side: &str) -> Result<String, JsError> {
    ideal(window, side).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = splitting)]
pub fn splitting_js(window: &str) -> Result<String, JsError> {
    splitting(window).map_err(|e| JsError::new(&e))
}
