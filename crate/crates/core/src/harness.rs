//! A registry of machine-checkable statements about the parameters, swept
//! over enumerated graphs, plus exhaustive searches for graphs answering
//! open questions.
//!
//! Proven statements double as regression tests for the solvers: a
//! violation means a solver bug. Open questions are exploratory and a hit
//! is a discovery.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::canon::{all_graphs, canonical_form, enumerate_trees, CANON_MAX};
use crate::characterize::{
    bipartite_gamma_eq_eternal, bipartite_two_characterization, triangle_free_two_characterization,
};
use crate::colonization::theta_c;
use crate::error::{GraphError, SolveError};
use crate::eternal::{
    epn_full_member, eternal_domination_number_with, m_eternal_domination_number_with, verify_fact_eds, Limits,
    SafeFamily,
};
use crate::families::{cycle, path};
use crate::graph::{cartesian_product, Graph, Members};
use crate::io::to_graph6;
use crate::params::{
    clique_cover_number, connected_domination_number, domination_number, has_dominating_set_of_size,
    independence_number, vertex_cover_and_matching, ParamReport,
};
use crate::reduction::{r2_reduces_to_small_star, reduce_tree, tree_clique_cover};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// a theorem; any violation is a solver bug
    Proven,
    /// an open question or conjecture; a hit is reported, not fatal
    Open,
}

/// The graphs a statement is swept over by default.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Graphs,
    Trees,
    /// pairs of graphs, bounded by the order of their product
    Products,
}

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub id: &'static str,
    pub kind: Kind,
    pub scope: Scope,
    /// default bound on the order of the graphs examined
    pub default_n_max: usize,
    pub statement: &'static str,
}

pub const REGISTRY: &[Entry] = &[
    Entry { id: "FACT1_CHAIN", kind: Kind::Proven, scope: Scope::Graphs, default_n_max: 6, statement: "γ ≤ α ≤ γ∞ ≤ θ" },
    Entry { id: "GHH1", kind: Kind::Proven, scope: Scope::Graphs, default_n_max: 6, statement: "γ ≤ γm∞ ≤ α" },
    Entry { id: "KM_BINOMIAL", kind: Kind::Proven, scope: Scope::Graphs, default_n_max: 6, statement: "γ∞ ≤ C(α+1, 2)" },
    Entry {
        id: "THETAC_BOUNDS",
        kind: Kind::Proven,
        scope: Scope::Graphs,
        default_n_max: 6,
        statement: "connected G: γm∞ ≤ θc ≤ γc + 1",
    },
    Entry {
        id: "TREES_THETAC",
        kind: Kind::Proven,
        scope: Scope::Trees,
        default_n_max: 12,
        statement: "trees: γm∞ = θc, with γm∞ from both the fixed point and the reductions",
    },
    Entry {
        id: "BIPARTITE_EQ",
        kind: Kind::Proven,
        scope: Scope::Graphs,
        default_n_max: 7,
        statement: "bipartite, no isolated vertices: γ = γ∞ iff γ = n/2",
    },
    Entry {
        id: "BIPARTITE_2",
        kind: Kind::Proven,
        scope: Scope::Graphs,
        default_n_max: 7,
        statement: "bipartite, no isolated vertices: γ = γm∞ = 2 iff G is K(m,n) minus an admissible matching",
    },
    Entry {
        id: "TFREE_2",
        kind: Kind::Proven,
        scope: Scope::Graphs,
        default_n_max: 7,
        statement: "triangle-free, no isolated vertices: γ = γm∞ = 2 iff G = C5 or G is K(m,n) minus an admissible matching",
    },
    Entry {
        id: "TREES_THETA",
        kind: Kind::Proven,
        scope: Scope::Trees,
        default_n_max: 12,
        statement: "trees with n ≥ 2: R2 alone reduces T to K2 or K1,2 iff γm∞ = θ",
    },
    Entry {
        id: "DELTA3_THETA",
        kind: Kind::Proven,
        scope: Scope::Graphs,
        default_n_max: 6,
        statement: "Δ ≤ 3 and γ = γ∞ imply γ∞ = θ",
    },
    Entry {
        id: "CORK3",
        kind: Kind::Proven,
        scope: Scope::Graphs,
        default_n_max: 6,
        statement: "triangle-free with 1 ≤ δ ≤ Δ ≤ 3: γ = γ∞ iff γ = n/2",
    },
    Entry {
        id: "TFREE_THETA",
        kind: Kind::Proven,
        scope: Scope::Graphs,
        default_n_max: 6,
        statement: "triangle-free and γ = γ∞ imply γ∞ = θ",
    },
    Entry {
        id: "FACT_EDS",
        kind: Kind::Proven,
        scope: Scope::Graphs,
        default_n_max: 6,
        statement: "every member D of the one-guard safe family at γ∞: {v} ∪ epn(v,D) is a clique, and so is {u,v} ∪ epn(v,D) when v can answer an attack at u",
    },
    Entry {
        id: "LEMMA_EPN",
        kind: Kind::Proven,
        scope: Scope::Graphs,
        default_n_max: 6,
        statement: "no isolated vertices, γ = γ∞, and Δ ≤ 3 or triangle-free: some minimum eternal dominating set has all external private neighbourhoods nonempty",
    },
    Entry {
        id: "Q_MAIN1",
        kind: Kind::Open,
        scope: Scope::Graphs,
        default_n_max: 6,
        statement: "is there a graph with γ = γ∞ < θ?",
    },
    Entry {
        id: "Q_MAIN2",
        kind: Kind::Open,
        scope: Scope::Graphs,
        default_n_max: 7,
        statement: "is there a triangle-free graph with γ∞ = α < θ?",
    },
    Entry {
        id: "CONJ_C1",
        kind: Kind::Open,
        scope: Scope::Graphs,
        default_n_max: 5,
        statement: "θ(G) = γ∞(G) implies θ(G□K2) = γ∞(G□K2)",
    },
    Entry {
        id: "VIZING_ED",
        kind: Kind::Open,
        scope: Scope::Products,
        default_n_max: 12,
        statement: "connected G, H: γ∞(G□H) ≥ γ∞(G)·γ∞(H)",
    },
    Entry {
        id: "VIZING_MED_MAX",
        kind: Kind::Open,
        scope: Scope::Products,
        default_n_max: 12,
        statement: "G, H in {P2, P3, C3, C4, P4}: γm∞(G□H) ≥ max(γm∞(G)·γ(H), γ(G)·γm∞(H))",
    },
    Entry {
        id: "FIG1_WITNESS",
        kind: Kind::Open,
        scope: Scope::Graphs,
        default_n_max: 7,
        statement: "a graph with α = 3 and γ = 2 in which every independent triple has a common neighbour, yet some vertex lies in no dominating set of size 2 (so γm∞ = 3)",
    },
];

pub fn lookup(id: &str) -> Option<&'static Entry> {
    REGISTRY.iter().find(|e| e.id == id)
}

/// Comma-separated registry ids of the given kind, for error messages.
pub fn registry_ids(kind: Kind) -> String {
    REGISTRY.iter().filter(|e| e.kind == kind).map(|e| e.id).collect::<Vec<_>>().join(", ")
}

fn unknown(id: &str, kind: Kind) -> SolveError {
    SolveError::Hypothesis(format!("unknown id {id:?}; known: {}", registry_ids(kind)))
}

/// A described, finite stream of graphs.
#[derive(Clone, Debug)]
pub struct Universe {
    pub description: String,
    pub graphs: Vec<Graph>,
}

impl Universe {
    pub fn all_graphs(lo: usize, hi: usize) -> Result<Self, GraphError> {
        Ok(Universe { description: format!("all graphs {lo} <= n <= {hi}"), graphs: all_graphs(lo, hi)? })
    }

    pub fn connected_graphs(lo: usize, hi: usize) -> Result<Self, GraphError> {
        let graphs = all_graphs(lo, hi)?.into_iter().filter(Graph::is_connected).collect();
        Ok(Universe { description: format!("connected graphs {lo} <= n <= {hi}"), graphs })
    }

    pub fn trees(lo: usize, hi: usize) -> Result<Self, GraphError> {
        let mut graphs = Vec::new();
        for n in lo.max(1)..=hi {
            graphs.extend(enumerate_trees(n)?);
        }
        Ok(Universe { description: format!("trees {lo} <= n <= {hi}"), graphs })
    }

    pub fn from_graphs(description: impl Into<String>, graphs: Vec<Graph>) -> Self {
        Universe { description: description.into(), graphs }
    }

    /// The default universe of a registered statement for a bound on n.
    pub fn default_for(id: &str, n_max: usize) -> Result<Self, SolveError> {
        let entry = lookup(id).ok_or_else(|| unknown(id, Kind::Proven))?;
        Ok(match entry.scope {
            Scope::Trees => Universe::trees(2, n_max)?,
            _ => Universe::all_graphs(1, n_max)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Counterexample,
    ExploratoryNoneFound,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Counterexample => "counterexample",
            Status::ExploratoryNoneFound => "exploratory-none-found",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub universe: String,
    /// graphs (or pairs) examined
    pub checked: usize,
    /// of those, how many met the statement's hypotheses
    pub applicable: usize,
    pub violations: Vec<Violation>,
    pub status: Status,
    pub elapsed_ms: u128,
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{}: {} over {} ({} checked, {} applicable, {} ms)\n",
            self.theorem, self.status, self.universe, self.checked, self.applicable, self.elapsed_ms
        );
        for v in &self.violations {
            let _ = writeln!(out, "  {}  {}", v.graph6, v.details);
        }
        for note in &self.notes {
            let _ = writeln!(out, "  note: {note}");
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    /// worker threads for per-graph parallelism; 1 runs inline
    pub jobs: usize,
    pub limits: Limits,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { jobs: 1, limits: Limits::default() }
    }
}

#[cfg(feature = "parallel")]
fn in_pool<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Applies `f` to every item, in parallel when `jobs > 1`, keeping order.
fn map_all<I: Sync, T: Send>(items: &[I], jobs: usize, f: impl Fn(&I) -> T + Sync + Send) -> Vec<T> {
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        use rayon::prelude::*;
        return in_pool(jobs, || items.par_iter().map(&f).collect());
    }
    let _ = jobs;
    items.iter().map(f).collect()
}

/// First item (in order) for which `f` yields a value or an error.
fn find_first<I: Sync, T: Send>(
    items: &[I],
    jobs: usize,
    f: impl Fn(&I) -> Result<Option<T>, SolveError> + Sync + Send,
) -> Result<Option<(usize, T)>, SolveError> {
    let hit = |(i, x): (usize, &I)| match f(x) {
        Ok(None) => None,
        Ok(Some(t)) => Some(Ok((i, t))),
        Err(e) => Some(Err(e)),
    };
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        use rayon::prelude::*;
        return in_pool(jobs, || items.par_iter().enumerate().find_map_first(hit)).transpose();
    }
    let _ = jobs;
    items.iter().enumerate().find_map(hit).transpose()
}

/// Parameters of one graph, computed on demand and cached.
struct Lazy<'a> {
    g: &'a Graph,
    limits: &'a Limits,
    gamma: Option<usize>,
    alpha: Option<usize>,
    theta: Option<usize>,
    eternal: Option<(usize, SafeFamily)>,
    m_eternal: Option<usize>,
}

impl<'a> Lazy<'a> {
    fn new(g: &'a Graph, limits: &'a Limits) -> Self {
        Lazy { g, limits, gamma: None, alpha: None, theta: None, eternal: None, m_eternal: None }
    }

    fn gamma(&mut self) -> usize {
        *self.gamma.get_or_insert_with(|| domination_number(self.g).0)
    }

    fn alpha(&mut self) -> usize {
        *self.alpha.get_or_insert_with(|| independence_number(self.g).0)
    }

    fn theta(&mut self) -> usize {
        *self.theta.get_or_insert_with(|| clique_cover_number(self.g).0)
    }

    fn eternal(&mut self) -> Result<&(usize, SafeFamily), SolveError> {
        if self.eternal.is_none() {
            self.eternal = Some(eternal_domination_number_with(self.g, self.limits)?);
        }
        Ok(self.eternal.as_ref().expect("just computed"))
    }

    fn gamma_inf(&mut self) -> Result<usize, SolveError> {
        Ok(self.eternal()?.0)
    }

    fn gamma_m_inf(&mut self) -> Result<usize, SolveError> {
        if self.m_eternal.is_none() {
            self.m_eternal = Some(m_eternal_domination_number_with(self.g, self.limits)?.0);
        }
        Ok(self.m_eternal.expect("just computed"))
    }
}

enum Outcome {
    Skip,
    Holds,
    Violated(String),
}

fn verdict(ok: bool, details: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        Outcome::Violated(details())
    }
}

fn check_graph(id: &str, g: &Graph, limits: &Limits) -> Result<Outcome, SolveError> {
    let mut p = Lazy::new(g, limits);
    let isolated = g.has_isolated_vertex();
    Ok(match id {
        "FACT1_CHAIN" => {
            let (gamma, alpha, inf, theta) = (p.gamma(), p.alpha(), p.gamma_inf()?, p.theta());
            verdict(gamma <= alpha && alpha <= inf && inf <= theta, || {
                format!("gamma={gamma} alpha={alpha} gamma_inf={inf} theta={theta}")
            })
        }
        "GHH1" => {
            let (gamma, m, alpha) = (p.gamma(), p.gamma_m_inf()?, p.alpha());
            verdict(gamma <= m && m <= alpha, || format!("gamma={gamma} gamma_m_inf={m} alpha={alpha}"))
        }
        "KM_BINOMIAL" => {
            let (alpha, inf) = (p.alpha(), p.gamma_inf()?);
            let bound = alpha * (alpha + 1) / 2;
            verdict(inf <= bound, || format!("gamma_inf={inf} > C(alpha+1,2)={bound}"))
        }
        "THETAC_BOUNDS" => {
            if !g.is_connected() {
                return Ok(Outcome::Skip);
            }
            let m = p.gamma_m_inf()?;
            let tc = theta_c(g)?.0;
            let gc = connected_domination_number(g)?.0;
            verdict(m <= tc && tc <= gc + 1, || format!("gamma_m_inf={m} theta_c={tc} gamma_c={gc}"))
        }
        "TREES_THETAC" => {
            if !g.is_tree() {
                return Ok(Outcome::Skip);
            }
            let m = p.gamma_m_inf()?;
            let r = reduce_tree(g)?.0;
            let tc = theta_c(g)?.0;
            verdict(m == r && r == tc, || format!("fixed point {m}, reductions {r}, theta_c {tc}"))
        }
        "BIPARTITE_EQ" => {
            if !g.is_bipartite() || isolated {
                return Ok(Outcome::Skip);
            }
            let (l, r) = bipartite_gamma_eq_eternal(g)?;
            verdict(l == r, || format!("gamma=gamma_inf is {l}, gamma=n/2 is {r}"))
        }
        "BIPARTITE_2" => {
            if !g.is_bipartite() || isolated {
                return Ok(Outcome::Skip);
            }
            let (l, r) = bipartite_two_characterization(g)?;
            verdict(l == r, || format!("gamma=gamma_m_inf=2 is {l}, class membership is {r}"))
        }
        "TFREE_2" => {
            if !g.is_triangle_free() || isolated {
                return Ok(Outcome::Skip);
            }
            let (l, r) = triangle_free_two_characterization(g)?;
            verdict(l == r, || format!("gamma=gamma_m_inf=2 is {l}, C5-or-class is {r}"))
        }
        "TREES_THETA" => {
            if !g.is_tree() || g.n() < 2 {
                return Ok(Outcome::Skip);
            }
            let reduced = reduce_tree(g)?.0;
            let fixed = p.gamma_m_inf()?;
            let theta = tree_clique_cover(g)?;
            let theta_exact = p.theta();
            let (r2, _) = r2_reduces_to_small_star(g)?;
            verdict(reduced == fixed && theta == theta_exact && r2 == (reduced == theta), || {
                format!(
                    "reductions {reduced}, fixed point {fixed}, n-nu {theta}, clique cover {theta_exact}, R2-reducible {r2}"
                )
            })
        }
        "DELTA3_THETA" => {
            if g.max_degree() > 3 || p.gamma() != p.gamma_inf()? {
                return Ok(Outcome::Skip);
            }
            let (inf, theta) = (p.gamma_inf()?, p.theta());
            verdict(inf == theta, || format!("gamma=gamma_inf={inf} but theta={theta}"))
        }
        "CORK3" => {
            if !g.is_triangle_free() || g.min_degree() < 1 || g.max_degree() > 3 {
                return Ok(Outcome::Skip);
            }
            let (gamma, inf) = (p.gamma(), p.gamma_inf()?);
            verdict((gamma == inf) == (2 * gamma == g.n()), || format!("gamma={gamma} gamma_inf={inf} n={}", g.n()))
        }
        "TFREE_THETA" => {
            if !g.is_triangle_free() || p.gamma() != p.gamma_inf()? {
                return Ok(Outcome::Skip);
            }
            let (inf, theta) = (p.gamma_inf()?, p.theta());
            verdict(inf == theta, || format!("gamma=gamma_inf={inf} but theta={theta}"))
        }
        "FACT_EDS" => {
            let (_, family) = p.eternal()?;
            let problems = verify_fact_eds(g, family);
            verdict(problems.is_empty(), || problems.join("; "))
        }
        "LEMMA_EPN" => {
            let bounded = g.max_degree() <= 3;
            if isolated || !(bounded || g.is_triangle_free()) || p.gamma() != p.gamma_inf()? {
                return Ok(Outcome::Skip);
            }
            let (k, family) = p.eternal()?;
            verdict(epn_full_member(g, family).is_some(), || {
                format!("no member of the safe family at k={k} has all external private neighbourhoods nonempty")
            })
        }
        _ => return Err(unknown(id, Kind::Proven)),
    })
}

/// Sweeps a proven statement over a universe.
pub fn check(id: &str, universe: &Universe, opts: &RunOptions) -> Result<TheoremReport, SolveError> {
    let entry = lookup(id).filter(|e| e.kind == Kind::Proven).ok_or_else(|| unknown(id, Kind::Proven))?;
    if universe.graphs.is_empty() {
        return Err(SolveError::Hypothesis(format!("universe {:?} is empty", universe.description)));
    }
    let start = Instant::now();
    let outcomes = map_all(&universe.graphs, opts.jobs, |g| check_graph(entry.id, g, &opts.limits));
    let mut applicable = 0;
    let mut violations = Vec::new();
    for (g, outcome) in universe.graphs.iter().zip(outcomes) {
        match outcome? {
            Outcome::Skip => {}
            Outcome::Holds => applicable += 1,
            Outcome::Violated(details) => {
                applicable += 1;
                violations.push(Violation { graph6: to_graph6(g), details });
            }
        }
    }
    let status = if violations.is_empty() { Status::Verified } else { Status::Counterexample };
    Ok(TheoremReport {
        theorem: entry.id.to_string(),
        universe: universe.description.clone(),
        checked: universe.graphs.len(),
        applicable,
        violations,
        status,
        elapsed_ms: start.elapsed().as_millis(),
        notes: Vec::new(),
    })
}

fn fig1_witness(g: &Graph) -> Option<String> {
    let (alpha, _) = independence_number(g);
    if alpha != 3 || domination_number(g).0 != 2 {
        return None;
    }
    let n = g.n();
    for a in 0..n {
        for b in Members(!g.closed(a) & g.vertices().bits() & !((2u64 << a) - 1)) {
            let free = g.vertices().bits() & !g.closed(a) & !g.closed(b) & !((2u64 << b) - 1);
            for c in Members(free) {
                if g.adj(a) & g.adj(b) & g.adj(c) == 0 {
                    return None;
                }
            }
        }
    }
    let lonely = (0..n).find(|&u| {
        let rest = g.vertices().bits() & !g.closed(u);
        // {u, w} dominates iff w dominates everything u misses
        !(0..n).any(|w| w != u && rest & !g.closed(w) == 0)
    })?;
    debug_assert!(has_dominating_set_of_size(g, 2));
    Some(format!("alpha=3, gamma=2, every independent triple has a common neighbour, vertex {lonely} is in no dominating set of size 2"))
}

/// Exhaustive search for a graph answering an open question. Returns the
/// first hit in enumeration order as a one-element violation list.
pub fn search_counterexample(id: &str, n_max: usize, opts: &RunOptions) -> Result<TheoremReport, SolveError> {
    let entry = lookup(id).filter(|e| e.kind == Kind::Open).ok_or_else(|| unknown(id, Kind::Open))?;
    let start = Instant::now();
    let limits = opts.limits;
    let mut notes = Vec::new();
    let (universe, checked, hit): (String, usize, Option<(Graph, String)>) = match entry.id {
        "Q_MAIN1" | "Q_MAIN2" | "FIG1_WITNESS" | "CONJ_C1" => {
            let tfree = entry.id == "Q_MAIN2";
            let graphs: Vec<Graph> =
                all_graphs(1, n_max)?.into_iter().filter(|g| !tfree || g.is_triangle_free()).collect();
            let desc = if tfree {
                format!("triangle-free graphs 1 <= n <= {n_max}")
            } else {
                format!("all graphs 1 <= n <= {n_max}")
            };
            let test = |g: &Graph| -> Result<Option<String>, SolveError> {
                let mut p = Lazy::new(g, &limits);
                Ok(match entry.id {
                    "Q_MAIN1" => {
                        let (gamma, inf, theta) = (p.gamma(), p.gamma_inf()?, p.theta());
                        (gamma == inf && gamma < theta).then(|| format!("gamma=gamma_inf={gamma} < theta={theta}"))
                    }
                    "Q_MAIN2" => {
                        let (alpha, inf, theta) = (p.alpha(), p.gamma_inf()?, p.theta());
                        (inf == alpha && alpha < theta).then(|| format!("gamma_inf=alpha={alpha} < theta={theta}"))
                    }
                    "CONJ_C1" => {
                        if p.theta() != p.gamma_inf()? {
                            return Ok(None);
                        }
                        let h = cartesian_product(g, &path(2)?)?;
                        let theta_h = clique_cover_number(&h).0;
                        let inf_h = eternal_domination_number_with(&h, &limits)?.0;
                        (theta_h != inf_h).then(|| {
                            format!("theta(G)=gamma_inf(G)={}, but theta(GxK2)={theta_h}, gamma_inf(GxK2)={inf_h}", p.theta())
                        })
                    }
                    _ => fig1_witness(g),
                })
            };
            let found = find_first(&graphs, opts.jobs, |g| test(g))?;
            let checked = found.as_ref().map_or(graphs.len(), |(i, _)| i + 1);
            (desc, checked, found.map(|(i, d)| (graphs[i].clone(), d)))
        }
        "VIZING_ED" => {
            let pool: Vec<Graph> =
                all_graphs(2, (n_max / 2).min(crate::canon::ENUM_MAX))?.into_iter().filter(Graph::is_connected).collect();
            let pairs: Vec<(usize, usize)> = (0..pool.len())
                .flat_map(|i| (i..pool.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| pool[i].n() * pool[j].n() <= n_max)
                .collect();
            let values = map_all(&pool, opts.jobs, |g| eternal_domination_number_with(g, &limits).map(|r| r.0));
            let values: Vec<usize> = values.into_iter().collect::<Result<_, _>>()?;
            let found = find_first(&pairs, opts.jobs, |&(i, j)| {
                let h = cartesian_product(&pool[i], &pool[j])?;
                let inf = eternal_domination_number_with(&h, &limits)?.0;
                Ok((inf < values[i] * values[j]).then(|| {
                    (h, format!("gamma_inf(GxH)={inf} < {}*{} for G={}, H={}", values[i], values[j], to_graph6(&pool[i]), to_graph6(&pool[j])))
                }))
            })?;
            let checked = found.as_ref().map_or(pairs.len(), |(i, _)| i + 1);
            (format!("pairs of connected graphs with |G||H| <= {n_max}"), checked, found.map(|(_, t)| t))
        }
        "VIZING_MED_MAX" => {
            let named: Vec<(&str, Graph)> = vec![
                ("P2", path(2)?),
                ("P3", path(3)?),
                ("C3", cycle(3)?),
                ("C4", cycle(4)?),
                ("P4", path(4)?),
            ];
            let pairs: Vec<(usize, usize)> = (0..named.len())
                .flat_map(|i| (i..named.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| named[i].1.n() * named[j].1.n() <= n_max)
                .collect();
            let mut hit = None;
            for &(i, j) in &pairs {
                let (gname, g) = &named[i];
                let (hname, h) = &named[j];
                let prod = cartesian_product(g, h)?;
                let m = m_eternal_domination_number_with(&prod, &limits)?.0;
                let (mg, mh) = (m_eternal_domination_number_with(g, &limits)?.0, m_eternal_domination_number_with(h, &limits)?.0);
                let (dg, dh) = (domination_number(g).0, domination_number(h).0);
                let bound = (mg * dh).max(dg * mh);
                if m < mg * mh {
                    notes.push(format!("{gname}x{hname}: gamma_m_inf={m} < {mg}*{mh}, below the plain product"));
                }
                if m < bound && hit.is_none() {
                    hit = Some((prod, format!("{gname}x{hname}: gamma_m_inf={m} < {bound}")));
                }
            }
            (format!("pairs from P2, P3, C3, C4, P4 with |G||H| <= {n_max}"), pairs.len(), hit)
        }
        _ => unreachable!("registry ids are exhaustive"),
    };
    let (status, violations) = match hit {
        Some((g, details)) => (Status::Counterexample, vec![Violation { graph6: to_graph6(&g), details }]),
        None => (Status::ExploratoryNoneFound, Vec::new()),
    };
    Ok(TheoremReport {
        theorem: entry.id.to_string(),
        universe,
        checked,
        applicable: checked,
        violations,
        status,
        elapsed_ms: start.elapsed().as_millis(),
        notes,
    })
}

/// Every parameter of one graph; failures are recorded per parameter.
pub fn param_report(g: &Graph, limits: &Limits) -> ParamReport {
    let mut r = ParamReport { graph6: to_graph6(g), n: g.n(), m: g.m(), ..ParamReport::default() };
    if g.n() <= CANON_MAX {
        r.canonical = canonical_form(g).ok().map(|f| to_graph6(&f.to_graph()));
    }
    let (gamma, dw) = domination_number(g);
    (r.gamma, r.gamma_witness) = (Some(gamma), Some(dw));
    let (alpha, aw) = independence_number(g);
    (r.alpha, r.alpha_witness) = (Some(alpha), Some(aw));
    let (theta, parts) = clique_cover_number(g);
    (r.theta, r.theta_witness) = (Some(theta), Some(parts));
    let mut errors = Vec::new();
    let mut err = |what: &str, e: SolveError| errors.push(format!("{what}: {e}"));
    match vertex_cover_and_matching(g) {
        Ok(cm) => (r.tau, r.nu) = (Some(cm.tau), Some(cm.nu)),
        Err(e) => err("tau/nu", e),
    }
    if g.is_connected() {
        match connected_domination_number(g) {
            Ok((k, w)) => (r.gamma_c, r.gamma_c_witness) = (Some(k), Some(w)),
            Err(e) => err("gamma_c", e),
        }
    }
    match eternal_domination_number_with(g, limits) {
        Ok((k, fam)) => (r.gamma_inf, r.gamma_inf_witness) = (Some(k), fam.first()),
        Err(e) => err("gamma_inf", e),
    }
    match m_eternal_domination_number_with(g, limits) {
        Ok((k, fam)) => (r.gamma_m_inf, r.gamma_m_inf_witness) = (Some(k), fam.first()),
        Err(e) => err("gamma_m_inf", e),
    }
    match theta_c(g) {
        Ok((w, col)) => {
            r.theta_c = Some(w);
            r.theta_c_witness = Some(col.parts.into_iter().zip(col.weights).collect());
        }
        Err(e) => err("theta_c", e),
    }
    r.errors = errors;
    r
}

/// Parameter reports for a universe, sorted by canonical form (graphs too
/// large to canonise keep their input order at the end).
pub fn parameter_sweep(universe: &Universe, opts: &RunOptions) -> Vec<ParamReport> {
    let rows = map_all(&universe.graphs, opts.jobs, |g| {
        let key = canonical_form(g).ok().map(|f| (f.n, f.code));
        (key, param_report(g, &opts.limits))
    });
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| (rows[i].0.is_none(), rows[i].0, i));
    let mut rows: Vec<Option<ParamReport>> = rows.into_iter().map(|(_, r)| Some(r)).collect();
    order.into_iter().map(|i| rows[i].take().expect("each row taken once")).collect()
}

fn cell(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

/// Aligned text table of parameter reports.
pub fn render_param_table(rows: &[ParamReport]) -> String {
    let header = ["graph6", "n", "m", "gamma", "gamma_m", "alpha", "gamma_inf", "theta", "theta_c", "gamma_c", "tau", "nu"];
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.graph6.clone(),
                r.n.to_string(),
                r.m.to_string(),
                cell(r.gamma),
                cell(r.gamma_m_inf),
                cell(r.alpha),
                cell(r.gamma_inf),
                cell(r.theta),
                cell(r.theta_c),
                cell(r.gamma_c),
                cell(r.tau),
                cell(r.nu),
            ]
        })
        .collect();
    let widths: Vec<usize> =
        (0..header.len()).map(|c| body.iter().map(|row| row[c].len()).chain([header[c].len()]).max().unwrap()).collect();
    let mut out = String::new();
    let line = |cells: &[String], out: &mut String| {
        let parts: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(c, s)| if c == 0 { format!("{s:<w$}", w = widths[c]) } else { format!("{s:>w$}", w = widths[c]) })
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&header.map(String::from), &mut out);
    for row in &body {
        line(row, &mut out);
    }
    out
}

/// Multi-line rendering of one report, with witnesses.
pub fn render_param_report(r: &ParamReport) -> String {
    let mut out = format!("graph6     {}\nn, m       {}, {}\n", r.graph6, r.n, r.m);
    if let Some(c) = &r.canonical {
        let _ = writeln!(out, "canonical  {c}");
    }
    let mut row = |name: &str, v: Option<usize>, w: String| {
        if v.is_some() {
            let line = format!("{name:<10} {:<3} {w}", cell(v));
            let _ = writeln!(out, "{}", line.trim_end());
        }
    };
    let set = |s: Option<crate::graph::VertexSet>| s.map(|s| s.to_string()).unwrap_or_default();
    row("gamma", r.gamma, set(r.gamma_witness));
    row("gamma_m", r.gamma_m_inf, set(r.gamma_m_inf_witness));
    row("alpha", r.alpha, set(r.alpha_witness));
    row("gamma_inf", r.gamma_inf, set(r.gamma_inf_witness));
    let parts = |p: &Option<Vec<crate::graph::VertexSet>>| {
        p.as_ref().map(|v| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")).unwrap_or_default()
    };
    row("theta", r.theta, parts(&r.theta_witness));
    let weighted = r
        .theta_c_witness
        .as_ref()
        .map(|v| v.iter().map(|(s, w)| format!("{s}:{w}")).collect::<Vec<_>>().join(" "))
        .unwrap_or_default();
    row("theta_c", r.theta_c, weighted);
    row("gamma_c", r.gamma_c, set(r.gamma_c_witness));
    row("tau", r.tau, String::new());
    row("nu", r.nu, String::new());
    for e in &r.errors {
        let _ = writeln!(out, "error      {e}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete;

    #[test]
    fn registry_ids_are_unique() {
        for (i, a) in REGISTRY.iter().enumerate() {
            assert!(REGISTRY[i + 1..].iter().all(|b| b.id != a.id));
        }
        assert!(lookup("NOPE").is_none());
    }

    #[test]
    fn small_checks_verify() {
        let u = Universe::all_graphs(1, 5).unwrap();
        for e in REGISTRY.iter().filter(|e| e.kind == Kind::Proven && e.scope == Scope::Graphs) {
            let r = check(e.id, &u, &RunOptions::default()).unwrap();
            assert_eq!(r.status, Status::Verified, "{}", r.render_text());
        }
        let trees = Universe::trees(2, 9).unwrap();
        for id in ["TREES_THETAC", "TREES_THETA"] {
            assert_eq!(check(id, &trees, &RunOptions::default()).unwrap().status, Status::Verified);
        }
        assert!(check("Q_MAIN1", &u, &RunOptions::default()).is_err());
        assert!(check("FACT1_CHAIN", &Universe::from_graphs("nothing", vec![]), &RunOptions::default()).is_err());
    }

    #[test]
    fn parallel_matches_sequential() {
        let u = Universe::all_graphs(1, 5).unwrap();
        let mut a = check("GHH1", &u, &RunOptions::default()).unwrap();
        let mut b = check("GHH1", &u, &RunOptions { jobs: 3, ..RunOptions::default() }).unwrap();
        a.elapsed_ms = 0;
        b.elapsed_ms = 0;
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn sweep_rows() {
        let u = Universe::from_graphs("examples", vec![cycle(7).unwrap(), cycle(5).unwrap(), complete(4).unwrap()]);
        let rows = parameter_sweep(&u, &RunOptions::default());
        let c5 = rows.iter().find(|r| r.n == 5).unwrap();
        assert_eq!(
            (c5.gamma, c5.gamma_m_inf, c5.alpha, c5.gamma_inf, c5.theta, c5.theta_c),
            (Some(2), Some(2), Some(2), Some(3), Some(3), Some(3))
        );
        let c7 = rows.iter().find(|r| r.n == 7).unwrap();
        assert_eq!((c7.gamma, c7.gamma_m_inf, c7.alpha, c7.theta), (Some(3), Some(3), Some(3), Some(4)));
        let k4 = rows.iter().find(|r| r.n == 4).unwrap();
        assert!([k4.gamma, k4.gamma_m_inf, k4.alpha, k4.gamma_inf, k4.theta, k4.theta_c, k4.gamma_c]
            .iter()
            .all(|v| *v == Some(1)));
        assert!(rows.iter().all(|r| r.chain_holds() && r.errors.is_empty()));
        let table = render_param_table(&rows);
        assert_eq!(table.lines().count(), 4);
        assert!(render_param_report(c5).contains("gamma_inf  3"));
    }

    #[test]
    fn median_product_search_notes_the_grid() {
        let r = search_counterexample("VIZING_MED_MAX", 12, &RunOptions::default()).unwrap();
        assert_eq!(r.status, Status::ExploratoryNoneFound);
        assert!(r.notes.iter().any(|n| n.starts_with("P3xP3: gamma_m_inf=3 < 2*2")));
    }
}
