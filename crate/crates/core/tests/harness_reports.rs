use edom_core::families::{complete, cycle};
use edom_core::harness::{
    check, parameter_sweep, registry_ids, search_counterexample, Kind, RunOptions, Status, Universe,
};

fn strip_elapsed(json: &str) -> String {
    json.lines().filter(|l| !l.contains("\"elapsed_ms\"")).collect::<Vec<_>>().join("\n")
}

#[test]
fn proven_statements_verify_on_their_examples() {
    let opts = RunOptions::default();
    let graphs = Universe::all_graphs(1, 6).unwrap();
    for id in ["FACT1_CHAIN", "GHH1"] {
        let r = check(id, &graphs, &opts).unwrap();
        assert_eq!((r.status, r.checked, r.violations.len()), (Status::Verified, 208, 0));
    }
    let trees = Universe::trees(2, 12).unwrap();
    assert_eq!(check("TREES_THETA", &trees, &opts).unwrap().status, Status::Verified);
}

#[test]
fn reports_are_deterministic() {
    let u = Universe::all_graphs(1, 6).unwrap();
    let a = check("FACT_EDS", &u, &RunOptions::default()).unwrap();
    let b = check("FACT_EDS", &u, &RunOptions { jobs: 4, ..RunOptions::default() }).unwrap();
    assert_eq!(strip_elapsed(&a.to_json()), strip_elapsed(&b.to_json()));
    let v: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
    for key in ["theorem", "universe", "checked", "violations", "status"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["status"], "verified");
}

#[test]
fn unknown_ids_are_errors() {
    let u = Universe::all_graphs(1, 3).unwrap();
    let err = check("NOT_A_THEOREM", &u, &RunOptions::default()).unwrap_err().to_string();
    assert!(err.contains("FACT1_CHAIN"));
    assert!(search_counterexample("FACT1_CHAIN", 4, &RunOptions::default()).is_err());
    assert!(registry_ids(Kind::Open).contains("VIZING_ED"));
}

#[test]
fn searches() {
    let opts = RunOptions::default();
    let r = search_counterexample("Q_MAIN1", 6, &opts).unwrap();
    assert_eq!(r.status, Status::ExploratoryNoneFound);
    assert!(r.violations.is_empty() && r.checked == 208);
    let r = search_counterexample("FIG1_WITNESS", 7, &opts).unwrap();
    assert_eq!(r.status, Status::Counterexample);
    let g = edom_core::parse_graph6(&r.violations[0].graph6).unwrap();
    assert_eq!(edom_core::params::independence_number(&g).0, 3);
    assert_eq!(edom_core::eternal::m_eternal_domination_number(&g).unwrap().0, 3);
    let r = search_counterexample("VIZING_MED_MAX", 12, &opts).unwrap();
    assert_eq!(r.status, Status::ExploratoryNoneFound);
    assert!(r.notes.iter().any(|n| n.contains("P3xP3")));
}

#[test]
fn sweep_is_sorted_and_complete() {
    let u = Universe::from_graphs(
        "mixed",
        vec![complete(5).unwrap(), cycle(5).unwrap(), cycle(4).unwrap(), complete(3).unwrap()],
    );
    let rows = parameter_sweep(&u, &RunOptions::default());
    let orders: Vec<usize> = rows.iter().map(|r| r.n).collect();
    assert_eq!(orders, vec![3, 4, 5, 5]);
    for r in &rows {
        assert!(r.errors.is_empty());
        assert!(r.gamma.is_some() && r.gamma_m_inf.is_some() && r.theta_c.is_some() && r.gamma_c.is_some());
    }
    let json = serde_json::to_string(&rows).unwrap();
    assert!(json.contains("\"gamma_inf\":3"));
}
