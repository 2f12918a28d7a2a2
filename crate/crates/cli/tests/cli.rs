use std::process::{Command, Output};
use std::time::{Duration, Instant};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curious"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("single JSON document on stdout")
}

#[test]
fn verify_m0_prints_both_sides() {
    let o = run(&["verify", "--m", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("lhs:   x + z"), "{out}");
    assert!(out.contains("rhs:   x + z"), "{out}");
    assert!(out.contains("diff:  0"));
}

#[test]
fn verify_json_schema() {
    let o = run(&["verify", "--m", "7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    let keys: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "parameters", "reports", "engine_version"]);
    assert_eq!(doc["command"], "verify");
    assert_eq!(doc["parameters"]["m"], 7);
    let report = &doc["reports"][0];
    assert_eq!(report["equal"], true);
    assert_eq!(report["difference_rendered"], "0");
    let fields: Vec<&str> = report.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        fields,
        [
            "identity_name",
            "parameter",
            "equal",
            "lhs_rendered",
            "rhs_rendered",
            "difference_rendered",
            "term_counts",
            "elapsed_micros"
        ]
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "--m", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["expand", "--target", "nope", "--m", "1"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--m-max", "2", "--jobs", "0"]).status.code(), Some(2));
    assert_eq!(run(&["bench", "--m", "1", "--points", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--m", "1", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verification_failure_exits_1() {
    let o = run(&["verify", "--m", "2", "--perturb", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("diff:  -1"));

    let o = run(&["check", "--m", "3", "--trials", "100", "--seed", "7", "--perturb", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["reports"][0]["failures"], 100);
}

#[test]
fn expand_examples() {
    let f = run(&["expand", "--target", "f", "--m", "1"]);
    assert_eq!(f.status.code(), Some(0));
    assert_eq!(stdout(&f), "x - z - 1\n");
    assert_eq!(stdout(&run(&["expand", "--target", "chebyshev", "--n", "2"])), "4*t^2 - 1\n");
    assert_eq!(stdout(&run(&["expand", "--target", "g", "--m", "0"])), "1\n");
    assert_eq!(stdout(&run(&["expand", "--target", "jensen-lhs", "--m", "1"])), "a + b + c\n");
    assert_eq!(
        stdout(&run(&["expand", "--target", "lhs", "--m", "1"])),
        stdout(&run(&["expand", "--target", "rhs", "--m", "1"]))
    );
    let doc = json(&run(&["expand", "--target", "jensen-rhs", "--m", "1", "--format", "json"]));
    assert_eq!(doc["reports"][0]["rendered"], "a + b + c");
    assert_eq!(doc["reports"][0]["term_count"], 3);
}

#[test]
fn sweep_small_runs() {
    let o = run(&["sweep", "--m-max", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().filter(|l| l.trim_end().ends_with("OK") && !l.starts_with("sweep")).collect();
    assert_eq!(rows.len(), 6, "{out}");

    let o = run(&["sweep", "--m-max", "0", "--format", "json", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["reports"].as_array().unwrap().len(), 1);
    assert!(doc["lemma_reports"].as_array().unwrap().iter().all(|r| r["equal"] == true));
}

#[test]
fn sweep_to_25_within_budget() {
    let start = Instant::now();
    let o = run(&["sweep", "--m-max", "25", "--format", "json"]);
    let elapsed = start.elapsed();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["reports"].as_array().unwrap().len(), 26);
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
}

#[test]
fn bench_examples() {
    assert_eq!(run(&["bench", "--m", "3", "--points", "10", "--seed", "1"]).status.code(), Some(0));
    assert_eq!(run(&["bench", "--m", "0", "--points", "1", "--seed", "1"]).status.code(), Some(0));

    let o = run(&["bench", "--m", "12", "--points", "50", "--seed", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report = &json(&o)["reports"][0];
    assert_eq!(report["agreed"], true);
    let ops = |name: &str| {
        report["strategies"]
            .as_array()
            .unwrap()
            .iter()
            .find(|s| s["name"] == name)
            .unwrap()["ring_ops"]
            .as_u64()
            .unwrap()
    };
    assert!(ops("f_closed") < ops("f_def"));
    assert!(ops("g_closed") < ops("g_def"));
}

#[test]
fn lemma_and_check_commands() {
    let o = run(&["lemma", "--name", "telescope", "--m", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["reports"][0]["lhs_rendered"], "x^2 - x");
    assert_eq!(run(&["lemma", "--name", "collapse", "--n", "7"]).status.code(), Some(0));
    assert_eq!(run(&["lemma", "--name", "nope", "--m", "1"]).status.code(), Some(2));

    let o = run(&["check", "--identity", "jensen", "--m", "4", "--trials", "20", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let cases: [&[&str]; 4] = [
        &["check", "--m", "5", "--trials", "25", "--seed", "11", "--format", "json"],
        &["verify", "--m", "4", "--format", "json", "--no-timing"],
        &["bench", "--m", "4", "--points", "5", "--seed", "2", "--format", "json", "--no-timing"],
        &["expand", "--target", "g", "--m", "3", "--format", "json"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
