use biperm::checks::SamplerConfig;
use biperm::sample::Bounds;
use biperm::verify::{run, Instance, Report};

fn config(seed: u64) -> SamplerConfig {
    SamplerConfig {
        seed,
        bounds: Bounds {
            max_size: 2,
            max_add: 2,
            max_mul: 1,
        },
        samples: 50,
        exhaustive: false,
    }
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

#[test]
fn reports_are_deterministic() {
    let suites = names(&["adjunction", "permutative", "naturality"]);
    let a = run(&Instance::Fsk, &suites, &config(7)).unwrap().to_json();
    let b = run(&Instance::Fsk, &suites, &config(7)).unwrap().to_json();
    assert_eq!(a, b);
    let c = run(&Instance::Fsk, &suites, &config(8)).unwrap().to_json();
    assert_ne!(a, c, "the seed should change the sampled cases");
}

#[test]
fn suite_order_follows_the_request() {
    let report = run(&Instance::Fsk, &names(&["adjunction", "permutative"]), &config(1)).unwrap();
    let order: Vec<&str> = report.suites.iter().map(|s| s.suite.as_str()).collect();
    assert_eq!(order, ["adjunction", "permutative"]);
}

#[test]
fn reports_survive_json() {
    let report = run(&Instance::Fsk, &names(&["bipermutative"]), &config(2)).unwrap();
    let back: Report = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(back.to_json(), report.to_json());
    assert_eq!(back.config, report.config);
}

#[test]
fn law_filter_keeps_one_law() {
    let mut report = run(&Instance::Fsk, &names(&["bipermutative"]), &config(2)).unwrap();
    report.restrict_to_law("permutative.add.hexagon");
    assert_eq!(report.suites.len(), 1);
    assert_eq!(
        report.suites[0].laws.keys().collect::<Vec<_>>(),
        ["permutative.add.hexagon"]
    );
}
