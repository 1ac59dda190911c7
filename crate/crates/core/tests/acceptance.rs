//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Exits nonzero on any failure except the known discrepancies in the
//! named-value table (see KNOWN below), which are still printed as FAIL.

use std::process::ExitCode;
use std::time::Instant;

use edom_core::canon::all_graphs;
use edom_core::colonization::theta_c;
use edom_core::eternal::{
    eternal_domination_number, extract_strategy, m_eternal_domination_number, DefenseStrategy, Model,
};
use edom_core::families::{complete, complete_bipartite, cycle, kmn_minus_matching, path};
use edom_core::harness::{check, search_counterexample, RunOptions, Status, Universe};
use edom_core::params::{clique_cover_number, domination_number, independence_number};
use edom_core::{cartesian_product, Graph, VertexSet};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Table entries that cannot be reproduced under the game as defined, as
/// (name, expected, computed). Both computed values are confirmed by an
/// independent brute force. C4 x K2 is the 3-cube: two antipodal guards
/// answer every attack by moving in parallel.
const KNOWN: [(&str, usize, usize); 2] = [("gamma_m_inf(K2,3-e x K2)", 4, 3), ("gamma_m_inf(C4 x K2)", 3, 2)];

struct Outcome {
    pass: bool,
    known_only: bool,
    summary: String,
}

fn gamma(g: &Graph) -> usize {
    domination_number(g).0
}
fn alpha(g: &Graph) -> usize {
    independence_number(g).0
}
fn theta(g: &Graph) -> usize {
    clique_cover_number(g).0
}
fn ginf(g: &Graph) -> usize {
    eternal_domination_number(g).unwrap().0
}
fn gminf(g: &Graph) -> usize {
    m_eternal_domination_number(g).unwrap().0
}

fn named_values() -> Outcome {
    let c5 = cycle(5).unwrap();
    let c6 = cycle(6).unwrap();
    let c7 = cycle(7).unwrap();
    let p3p3 = cartesian_product(&path(3).unwrap(), &path(3).unwrap()).unwrap();
    let k2 = path(2).unwrap();
    let k23e = cartesian_product(&kmn_minus_matching(2, 3, 1).unwrap(), &k2).unwrap();
    let c4k2 = cartesian_product(&cycle(4).unwrap(), &k2).unwrap();
    let rows: Vec<(&str, usize, usize)> = vec![
        ("gamma_m_inf(C6)", 2, gminf(&c6)),
        ("gamma(C5)", 2, gamma(&c5)),
        ("gamma_m_inf(C5)", 2, gminf(&c5)),
        ("alpha(C5)", 2, alpha(&c5)),
        ("theta(C5)", 3, theta(&c5)),
        ("gamma_inf(C5)", 3, ginf(&c5)),
        ("theta_c(C5)", 3, theta_c(&c5).unwrap().0),
        ("gamma(C7)", 3, gamma(&c7)),
        ("gamma_m_inf(C7)", 3, gminf(&c7)),
        ("alpha(C7)", 3, alpha(&c7)),
        ("theta(C7)", 4, theta(&c7)),
        ("gamma_inf(K3,4)", 4, ginf(&complete_bipartite(3, 4).unwrap())),
        ("gamma_m_inf(P3 x P3)", 3, gminf(&p3p3)),
        ("gamma(K2,3-e x K2)", 3, gamma(&k23e)),
        ("gamma_m_inf(K2,3-e x K2)", 4, gminf(&k23e)),
        ("theta(C4 x K2)", 4, theta(&c4k2)),
        ("gamma_m_inf(C4 x K2)", 3, gminf(&c4k2)),
        ("theta_c(K1..K8)", 1, (1..=8).map(|n| theta_c(&complete(n).unwrap()).unwrap().0).max().unwrap()),
    ];
    let bad: Vec<&(&str, usize, usize)> = rows.iter().filter(|(_, want, got)| want != got).collect();
    let known_only = !bad.is_empty() && bad.iter().all(|r| KNOWN.contains(r));
    let mut summary = format!("{}/{} values match", rows.len() - bad.len(), rows.len());
    for (name, want, got) in &bad {
        summary.push_str(&format!("; {name} expected {want}, computed {got}"));
    }
    if known_only {
        summary.push_str(" (known discrepancies, confirmed by an independent brute force)");
    }
    Outcome { pass: bad.is_empty(), known_only, summary }
}

fn verified(ids: &[&str], u: &Universe) -> (bool, Vec<String>) {
    let mut ok = true;
    let mut parts = Vec::new();
    for id in ids {
        let r = check(id, u, &RunOptions::default()).expect("check runs");
        ok &= r.status == Status::Verified && r.checked > 0;
        parts.push(format!("{id} {}/{} applicable, {} violations", r.applicable, r.checked, r.violations.len()));
        for v in r.violations.iter().take(3) {
            parts.push(format!("  {} {}", v.graph6, v.details));
        }
    }
    (ok, parts)
}

fn outcome(ok: bool, parts: Vec<String>) -> Outcome {
    Outcome { pass: ok, known_only: false, summary: parts.join("; ") }
}

fn chain(upto7: &Universe, upto6: &Universe) -> Outcome {
    let c6 = upto6.graphs.len();
    let c7 = upto7.graphs.len();
    let (ok, mut parts) = verified(&["FACT1_CHAIN", "GHH1", "KM_BINOMIAL"], upto7);
    parts.insert(0, format!("{c7} graphs with 0 <= n <= 7 ({c6} with 1 <= n <= 6)"));
    outcome(ok && c7 == 1253 && c6 == 208, parts)
}

fn colonization_bounds(upto6: &Universe) -> Outcome {
    let trees = Universe::trees(1, 12).unwrap();
    let (a, mut p) = verified(&["THETAC_BOUNDS"], upto6);
    let (b, q) = verified(&["TREES_THETAC"], &trees);
    p.extend(q);
    outcome(a && b, p)
}

fn tree_theorem() -> Outcome {
    let trees = Universe::trees(2, 12).unwrap();
    let (ok, p) = verified(&["TREES_THETA"], &trees);
    outcome(ok, p)
}

fn characterizations(upto7: &Universe) -> Outcome {
    let (ok, p) = verified(&["BIPARTITE_2", "TFREE_2", "BIPARTITE_EQ"], upto7);
    outcome(ok, p)
}

fn eternal_theorems(upto6: &Universe, upto7: &Universe) -> Outcome {
    let (a, mut p) = verified(&["DELTA3_THETA", "TFREE_THETA", "CORK3", "FACT_EDS"], upto6);
    let (b, q) = verified(&["LEMMA_EPN"], upto7);
    p.extend(q);
    outcome(a && b, p)
}

fn open_questions() -> Outcome {
    let opts = RunOptions::default();
    let mut ok = true;
    let mut parts = Vec::new();
    for (id, n, must_hold) in [
        ("Q_MAIN1", 6, false),
        ("Q_MAIN2", 7, false),
        ("CONJ_C1", 5, true),
        ("VIZING_ED", 12, true),
        ("FIG1_WITNESS", 7, false),
    ] {
        match search_counterexample(id, n, &opts) {
            Ok(r) => {
                let found = r.violations.first().map(|v| format!(" {} ({})", v.graph6, v.details)).unwrap_or_default();
                parts.push(format!("{id} n<={n}: {} after {} checked{found}", r.status, r.checked));
                if must_hold && r.status == Status::Counterexample {
                    ok = false;
                }
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{id}: {e}"));
            }
        }
    }
    outcome(ok, parts)
}

/// Whether `to` is reachable from `from` by one legal move under `model`,
/// checked by trying every assignment of guards to targets.
fn legal_move(g: &Graph, model: Model, from: VertexSet, to: VertexSet) -> bool {
    match model {
        Model::OneGuard => {
            let left = from.difference(to);
            let arrived = to.difference(from);
            from == to
                || (left.len() == 1 && arrived.len() == 1 && g.has_edge(left.first().unwrap(), arrived.first().unwrap()))
        }
        Model::AllGuards => {
            fn assign(g: &Graph, guards: &[usize], targets: &mut Vec<usize>) -> bool {
                let Some((&v, rest)) = guards.split_first() else { return true };
                for i in 0..targets.len() {
                    let t = targets[i];
                    if t == v || g.has_edge(v, t) {
                        targets.swap_remove(i);
                        let ok = assign(g, rest, targets);
                        targets.push(t);
                        let last = targets.len() - 1;
                        targets.swap(i, last);
                        if ok {
                            return true;
                        }
                    }
                }
                false
            }
            assign(g, &from.to_vec(), &mut to.to_vec())
        }
    }
}

fn play(g: &Graph, s: &DefenseStrategy, rng: &mut StdRng, attacks: usize) -> Result<(), String> {
    let mut d = s.start;
    if !g.is_dominating(d) || d.len() != s.k {
        return Err(format!("bad start {d}"));
    }
    for _ in 0..attacks {
        let free = g.vertices().difference(d).to_vec();
        if free.is_empty() {
            return Ok(());
        }
        let r = free[rng.random_range(0..free.len())];
        let next = s.respond(d, r).ok_or_else(|| format!("no answer from {d} to {r}"))?;
        if !next.contains(r) || !g.is_dominating(next) || next.len() != s.k || !legal_move(g, s.model, d, next) {
            return Err(format!("illegal answer {next} from {d} to attack {r}"));
        }
        d = next;
    }
    Ok(())
}

fn strategy_fuzz() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut failures = Vec::new();
    let mut games = 0;
    for _ in 0..100 {
        let n = rng.random_range(1..=8);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(0.4) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).unwrap();
        for (model, fam) in [
            (Model::OneGuard, eternal_domination_number(&g).unwrap().1),
            (Model::AllGuards, m_eternal_domination_number(&g).unwrap().1),
        ] {
            let s = extract_strategy(&g, &fam).unwrap();
            games += 1;
            if let Err(e) = play(&g, &s, &mut rng, 1000) {
                failures.push(format!("{} {model}: {e}", edom_core::to_graph6(&g)));
            }
        }
    }
    let mut summary = format!("{games} strategies x 1000 attacks, {} failures", failures.len());
    for f in failures.iter().take(3) {
        summary.push_str(&format!("; {f}"));
    }
    Outcome { pass: failures.is_empty(), known_only: false, summary }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let upto7 = Universe::from_graphs("all graphs 0 <= n <= 7", all_graphs(0, 7).unwrap());
    let upto6 = Universe::from_graphs(
        "all graphs 1 <= n <= 6",
        upto7.graphs.iter().filter(|g| (1..=6).contains(&g.n())).cloned().collect(),
    );
    let upto7_nonempty = Universe::from_graphs(
        "all graphs 1 <= n <= 7",
        upto7.graphs.iter().filter(|g| g.n() >= 1).cloned().collect(),
    );
    type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("named parameter values", Box::new(named_values)),
        ("parameter chain and binomial bound", Box::new(|| chain(&upto7, &upto6))),
        ("neo-colonization bounds and trees", Box::new(|| colonization_bounds(&upto6))),
        ("tree reduction theorem", Box::new(tree_theorem)),
        ("gamma = gamma_m_inf = 2 characterizations", Box::new(|| characterizations(&upto7_nonempty))),
        ("eternal domination theorems", Box::new(|| eternal_theorems(&upto6, &upto7_nonempty))),
        ("open question searches", Box::new(open_questions)),
        ("strategy soundness fuzzing", Box::new(strategy_fuzz)),
    ];
    let mut fatal = false;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} {} {name} [{:.1}s]: {}", i + 1, t.elapsed().as_secs_f64(), o.summary);
        fatal |= !o.pass && !o.known_only;
    }
    println!("total {:.1}s", start.elapsed().as_secs_f64());
    if fatal {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
