use std::io::Write;
use std::process::{Command, Output, Stdio};

fn edom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edom")).args(args).output().unwrap()
}

fn edom_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_edom"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn value_of(text: &str, name: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(name).filter(|rest| rest.starts_with(' ')))
        .map(|rest| rest.split_whitespace().next().unwrap().to_string())
        .unwrap_or_else(|| panic!("no {name} in\n{text}"))
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn params_of_named_families() {
    let o = edom(&["params", "--family", "cycle:6"]);
    assert_eq!(code(&o), 0);
    assert_eq!(value_of(&stdout(&o), "gamma_m"), "2");

    let o = edom(&["params", "--family", "complete:5"]);
    let text = stdout(&o);
    for name in ["gamma", "gamma_m", "alpha", "gamma_inf", "theta", "theta_c", "gamma_c"] {
        assert_eq!(value_of(&text, name), "1", "{name}");
    }
}

#[test]
fn params_from_graph6_file() {
    let cube = edom_core::families::parse_family("cycle:4*path:2").unwrap();
    let f = temp_file(&format!("{}\n", edom_core::to_graph6(&cube)));
    let o = edom(&["params", "--g6", f.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(value_of(&text, "theta"), "4");
    assert_eq!(value_of(&text, "gamma_m"), "2");
}

#[test]
fn params_json() {
    let o = edom(&["--format", "json", "params", "--family", "cycle:5"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["gamma"].as_u64(), v["gamma_inf"].as_u64(), v["theta_c"].as_u64()), (Some(2), Some(3), Some(3)));
}

#[test]
fn parse_errors_exit_two() {
    assert_eq!(code(&edom(&["params", "--family", "cycle:x"])), 2);
    let f = temp_file("3 1\n0 7\n");
    assert_eq!(code(&edom(&["params", "--edgelist", f.path().to_str().unwrap()])), 2);
    let f = temp_file("D??\x7f\n");
    assert_eq!(code(&edom(&["params", "--g6", f.path().to_str().unwrap()])), 2);
    assert_eq!(code(&edom(&["params", "--family", "cycle:5", "--family", "path:3"])), 2);
    assert_eq!(code(&edom(&["params"])), 2);
}

#[test]
fn resource_limits_exit_three() {
    let o = edom(&["params", "--family", "cycle:30"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("configuration space too large"));
    let o = edom(&["play", "--family", "cycle:30", "--k", "15"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn checks_and_searches() {
    let o = edom(&["check", "FACT1_CHAIN", "--n-max", "6"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("FACT1_CHAIN: verified"));

    let o = edom(&["--jobs", "2", "check", "TREES_THETA", "--n-max", "12"]);
    assert_eq!(code(&o), 0);

    let o = edom(&["search", "FIG1_WITNESS", "--n-max", "7"]);
    assert_eq!(code(&o), 1);
    let line = stdout(&o).lines().nth(1).unwrap().trim().to_string();
    let g = edom_core::parse_graph6(line.split_whitespace().next().unwrap()).unwrap();
    assert_eq!(edom_core::params::independence_number(&g).0, 3);

    let o = edom(&["--format", "json", "search", "Q_MAIN1", "--n-max", "5"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "exploratory-none-found");

    let o = edom(&["check", "NO_SUCH"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("GHH1"));
    assert_eq!(code(&edom(&["check", "Q_MAIN1"])), 2);
}

#[test]
fn tree_reports() {
    let o = edom(&["tree", "--family", "path:6"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("gamma_m_inf = 3"));
    assert!(text.contains("R2-reduces to K2 or K1,2: yes\n"));

    let text = stdout(&edom(&["tree", "--family", "star:4"]));
    assert!(text.contains("gamma_m_inf = 2") && text.contains("theta = 4") && text.contains(": no"));

    let f = temp_file("7 6\n0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n");
    let text = stdout(&edom(&["tree", "--edgelist", f.path().to_str().unwrap()]));
    assert!(text.contains("gamma_m_inf = 4"));
    assert!(text.contains("yes (→ K1,2)"));

    assert_eq!(code(&edom(&["tree", "--family", "cycle:5"])), 2);
}

#[test]
fn sweep_table_and_json() {
    let o = edom(&["sweep", "--n-max", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 1 + 1 + 2 + 4);
    let f = temp_file("Dhc\nBw\n");
    let o = edom(&["--format", "json", "sweep", "--g6", f.path().to_str().unwrap()]);
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1]["theta"], 3);
}

#[test]
fn play_sessions() {
    let o = edom_with_stdin(&["play", "--family", "cycle:6", "--k", "2"], "1\n3\n5\n0\n");
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).matches("guards at").count(), 5);

    let o = edom_with_stdin(&["play", "--family", "cycle:5", "--k", "2", "--model", "one-guard"], "");
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("refused"));

    let o = edom_with_stdin(&["play", "--family", "complete:3", "--model", "one-guard"], "1\n");
    assert!(stdout(&o).contains("guard 0 -> 1"));

    assert_eq!(code(&edom_with_stdin(&["play", "--family", "cycle:5", "--k", "9"], "")), 2);
}
