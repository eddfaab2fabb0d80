use std::process::{Command, Output};

fn check(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biperm-check"))
        .args(args)
        .env_remove("BIPERM_CHECK_SEED")
        .output()
        .expect("binary runs")
}

const SMALL: &[&str] = &["--max-size", "2", "--max-mul-len", "1", "--samples", "40"];

fn with_small<'a>(head: &[&'a str]) -> Vec<&'a str> {
    head.iter().copied().chain(SMALL.iter().copied()).collect()
}

#[test]
fn full_run_on_fsk_passes_with_json() {
    let out = check(&with_small(&[
        "all",
        "--instance",
        "fsk",
        "--seed",
        "7",
        "--report",
        "json",
    ]));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["pass"], true);
    assert_eq!(report["instance"], "fsk");
    assert_eq!(report["config"]["seed"], 7);
    assert_eq!(report["suites_requested"].as_array().unwrap().len(), 7);
}

#[test]
fn adjunction_on_the_boolean_semiring() {
    let out = check(&["adjunction", "--instance", "bool-semiring"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(check(&["adjunction", "--instance", "foo"]).status.code(), Some(2));
    assert_eq!(check(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(check(&["adjunction", "--samples", "many"]).status.code(), Some(2));
    assert_eq!(check(&["replay"]).status.code(), Some(2));
    assert_eq!(check(&["adjunction", "extra.json"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = with_small(&["permutative", "--seed", "3", "--report", "json"]);
    let (a, b) = (check(&args), check(&args));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seed_can_come_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_biperm-check"))
        .args(["permutative", "--report", "json"])
        .env("BIPERM_CHECK_SEED", "11")
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["config"]["seed"], 11);
}

#[test]
fn replay_reproduces_a_saved_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let first = check(&with_small(&["bipermutative", "--seed", "5", "--report", "json"]));
    std::fs::write(&path, &first.stdout).unwrap();
    let path = path.to_str().unwrap();

    let again = check(&["replay", path, "--report", "json"]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(again.stdout, first.stdout);

    let one = check(&["replay", path, "--law", "permutative.mul.hexagon", "--report", "json"]);
    let report: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap();
    let laws = report["suites"][0]["laws"].as_object().unwrap();
    assert_eq!(laws.keys().collect::<Vec<_>>(), ["permutative.mul.hexagon"]);

    assert_eq!(check(&["replay", path, "--law", "no.such.law"]).status.code(), Some(2));
}

#[test]
fn table_instances_load_from_disk() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z3.txt");
    std::fs::write(
        &path,
        "elements: 0 1 2\nzero: 0\none: 1\nadd:\n0 1 2\n1 2 0\n2 0 1\nmul:\n0 0 0\n0 1 2\n0 2 1\n",
    )
    .unwrap();
    let instance = format!("table:{}", path.display());
    let out = check(&["bipermutative", "--instance", &instance]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    std::fs::write(
        &path,
        "elements: 0 1\nzero: 0\none: 1\nadd:\n0 1\n0 0\nmul:\n0 0\n0 1\n",
    )
    .unwrap();
    assert_eq!(
        check(&["bipermutative", "--instance", &instance]).status.code(),
        Some(2)
    );
}
