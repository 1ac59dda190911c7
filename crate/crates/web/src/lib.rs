//! WebAssembly bindings behind the browser demo in `www/`. Every export
//! takes the graph as text (a family spec such as `cycle:6`, or a graph6
//! string) and answers in JSON.

use edom_core::eternal::{extract_strategy, safe_family_with, DefenseStrategy, Limits, Model};
use edom_core::families::parse_family;
use edom_core::harness::param_report;
use edom_core::reduction::{r2_reduces_to_small_star, reduce_tree, tree_clique_cover};
use edom_core::{parse_graph6, Graph, VertexSet};
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest graph the page accepts; the fixed points get slow beyond it.
pub const DEMO_MAX: usize = 16;

pub fn parse_input(text: &str) -> Result<Graph, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("enter a family like cycle:6 or a graph6 string".into());
    }
    let g = parse_family(text).or_else(|family_err| {
        parse_graph6(text).map_err(|g6_err| format!("not a family ({family_err}) nor graph6 ({g6_err})"))
    })?;
    if g.n() == 0 || g.n() > DEMO_MAX {
        return Err(format!("the demo takes 1 to {DEMO_MAX} vertices, got {}", g.n()));
    }
    Ok(g)
}

fn failure(msg: impl Into<String>) -> String {
    json!({ "ok": false, "error": msg.into() }).to_string()
}

fn edges(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().into_iter().map(|(u, v)| [u, v]).collect()
}

/// All parameters of the graph with witnesses, plus its edges for drawing.
#[wasm_bindgen]
pub fn params_json(text: &str) -> String {
    match parse_input(text) {
        Ok(g) => {
            let report = param_report(&g, &Limits::default());
            json!({ "ok": true, "n": g.n(), "edges": edges(&g), "report": report }).to_string()
        }
        Err(e) => failure(e),
    }
}

/// The R1/R2 reduction of a tree, step by step, with the R2-only verdict.
#[wasm_bindgen]
pub fn tree_json(text: &str) -> String {
    let g = match parse_input(text) {
        Ok(g) if g.is_tree() => g,
        Ok(_) => return failure("the graph is not a tree"),
        Err(e) => return failure(e),
    };
    let run = || -> Result<String, edom_core::SolveError> {
        let (value, trace) = reduce_tree(&g)?;
        let theta = tree_clique_cover(&g)?;
        let r2 = if g.n() >= 2 { r2_reduces_to_small_star(&g)?.0 } else { false };
        Ok(json!({
            "ok": true,
            "n": g.n(),
            "edges": edges(&g),
            "trace": trace,
            "value": value,
            "theta": theta,
            "r2_reducible": r2,
        })
        .to_string())
    };
    run().unwrap_or_else(|e| failure(e.to_string()))
}

#[derive(Serialize)]
struct Move {
    ok: bool,
    guards: VertexSet,
    attacked: usize,
}

/// A running guard game: the page attacks, the strategy answers.
#[wasm_bindgen]
pub struct Game {
    g: Graph,
    strategy: DefenseStrategy,
    guards: VertexSet,
}

impl Game {
    /// `k == 0` picks the smallest number of guards that wins.
    pub fn start(text: &str, model: &str, k: usize) -> Result<Game, String> {
        let g = parse_input(text)?;
        let model: Model = model.parse()?;
        let limits = Limits::default();
        let family = if k == 0 {
            edom_core::eternal::eternal_number(&g, model, &limits)
        } else if k > g.n() {
            return Err(format!("at most {} guards fit on this graph", g.n()));
        } else {
            safe_family_with(&g, k, model, &limits).map(|f| (k, f))
        }
        .map_err(|e| e.to_string())?
        .1;
        if family.is_empty() {
            let why = match family.first_removal {
                Some((d, r)) => format!("guards at {d} cannot answer an attack at {r}"),
                None => format!("no dominating set has {k} vertices"),
            };
            return Err(format!("{k} guards lose in the {model} model: {why}"));
        }
        let strategy = extract_strategy(&g, &family).map_err(|e| e.to_string())?;
        let guards = strategy.start;
        Ok(Game { g, strategy, guards })
    }

    pub fn attack_vertex(&mut self, r: usize) -> Result<VertexSet, String> {
        if r >= self.g.n() {
            return Err(format!("no vertex {r}"));
        }
        if self.guards.contains(r) {
            return Err(format!("vertex {r} is already guarded"));
        }
        self.guards = self.strategy.respond(self.guards, r).expect("strategy covers every member");
        Ok(self.guards)
    }
}

#[wasm_bindgen]
impl Game {
    #[wasm_bindgen(constructor)]
    pub fn new(text: &str, model: &str, k: usize) -> Result<Game, JsError> {
        Game::start(text, model, k).map_err(|e| JsError::new(&e))
    }

    pub fn k(&self) -> usize {
        self.strategy.k
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn edges_json(&self) -> String {
        serde_json::to_string(&edges(&self.g)).expect("edges serialize")
    }

    pub fn guards(&self) -> Vec<u32> {
        self.guards.iter().map(|v| v as u32).collect()
    }

    /// Attacks `r`; JSON with the new guard positions or an error.
    pub fn attack(&mut self, r: usize) -> String {
        match self.attack_vertex(r) {
            Ok(guards) => serde_json::to_string(&Move { ok: true, guards, attacked: r }).expect("serialize"),
            Err(e) => failure(e),
        }
    }
}
