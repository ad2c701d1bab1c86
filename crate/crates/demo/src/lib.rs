//! Browser bindings for the demo page. Each export is a thin wrapper around
//! a plain function returning `Result<String, String>` (JSON on success), so
//! the logic is testable without a browser.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use ptcolor::certificate::DEFAULT_CERT_CAP;
use ptcolor::closure::closure_f;
use ptcolor::generators::{multipartite, random_3colorable, random_3colorable_ptfree};
use ptcolor::graph::{parse_graph, write_graph};
use ptcolor::report::Report;
use ptcolor::{approx_color, bound, DriverResult, Graph, RootPolicy};

#[derive(Serialize)]
struct Drawing {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Drawing {
    fn of(g: &Graph) -> Self {
        Drawing { n: g.n(), edges: g.edges().collect() }
    }
}

#[derive(Serialize)]
struct Colored {
    graph: Drawing,
    report: Report,
}

/// Colors the graph given in the `n m` text format.
pub fn color_json(text: &str, t: usize, root: &str) -> Result<String, String> {
    let g = parse_graph(text).map_err(|e| e.to_string())?;
    let root: RootPolicy = root.parse()?;
    // no clock in the plain wasm target; the page times the call itself
    let result = approx_color(&g, t, root).map_err(|e| e.to_string())?;
    let tri = matches!(result, DriverResult::Colored { triangle: Some(_), .. });
    let b = bound(t, tri).map_err(|e| e.to_string())?;
    let report = Report::new(&result, t, b, 0.0, DEFAULT_CERT_CAP);
    serde_json::to_string(&Colored { graph: Drawing::of(&g), report }).map_err(|e| e.to_string())
}

/// Generates a graph in the text format. `family` is `tripartite`
/// (`a` = part size), `random-3col` or `random-3col-ptfree` (`a` = n).
pub fn generate_text(family: &str, a: usize, t: usize, p: f64, seed: u64) -> Result<String, String> {
    if !(0.0..=1.0).contains(&p) {
        return Err(format!("edge probability {p} outside [0, 1]"));
    }
    let g = match family {
        "tripartite" if (1..=200).contains(&a) => multipartite(&[a, a, a]),
        "random-3col" if a <= 500 => random_3colorable(a, p, seed),
        "random-3col-ptfree" if a <= 20 => random_3colorable_ptfree(a, t, p, seed, 500)
            .ok_or_else(|| format!("no P_{t}-free sample found in 500 tries; try a smaller size, a larger t or another p"))?,
        "tripartite" | "random-3col" | "random-3col-ptfree" => return Err(format!("size {a} out of range for {family}")),
        _ => return Err(format!("unknown family {family:?}")),
    };
    Ok(write_graph(&g))
}

#[derive(Serialize)]
struct Step {
    vertex: usize,
    witnesses: Option<(usize, usize)>,
}

#[derive(Serialize)]
struct Explored {
    graph: Drawing,
    closure: Vec<usize>,
    frontier: Vec<usize>,
    order: Vec<Step>,
}

/// Closure of a comma-separated seed set, with the order vertices entered.
pub fn closure_json(text: &str, seed: &str) -> Result<String, String> {
    let g = parse_graph(text).map_err(|e| e.to_string())?;
    let seed: Vec<usize> = seed
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| format!("bad vertex {s:?}")))
        .collect::<Result<_, _>>()?;
    if seed.is_empty() {
        return Err("seed set is empty".into());
    }
    if let Some(&u) = seed.iter().find(|&&u| u >= g.n()) {
        return Err(format!("vertex {u} is not in a graph on {} vertices", g.n()));
    }
    let cr = closure_f(&g, &seed);
    let order = cr.order.iter().map(|e| Step { vertex: e.vertex, witnesses: e.witnesses }).collect();
    let out = Explored { graph: Drawing::of(&g), closure: cr.closure, frontier: cr.frontier, order };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn color(text: &str, t: usize, root: &str) -> Result<String, JsValue> {
    color_json(text, t, root).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn generate(family: &str, a: usize, t: usize, p: f64, seed: u32) -> Result<String, JsValue> {
    generate_text(family, a, t, p, seed.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn closure(text: &str, seed: &str) -> Result<String, JsValue> {
    closure_json(text, seed).map_err(|e| JsValue::from_str(&e))
}
