use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn roots_text_and_json() {
    let o = run(&["roots", "G2"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 8);
    assert!(s.contains("highest root: 3 2"), "{s}");

    let o = run(&["roots", "E8", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 120);
    assert_eq!(v["degrees"], serde_json::json!([2, 8, 12, 14, 18, 20, 24, 30]));
}

#[test]
fn weyl_json() {
    let o = run(&["weyl", "E6", "--orders", "--irr", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["valid_orders"], serde_json::json!([7, 10, 11]));
    assert_eq!(v["irr"], 25);
    assert_eq!(v["order"], "51840");
    assert!(v.get("poincare").is_none());
}

#[test]
fn partitions_values() {
    let o = run(&["partitions", "--p", "6", "--typeD", "12", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["p"]["value"], "11");
    assert_eq!(v["type_d"]["count"], "599");
    assert_eq!(v["type_d"]["bound"], "1296");
    assert_eq!(run(&["partitions"]).status.code(), Some(2));
}

#[test]
fn torus_centralizer() {
    let o = run(&["torus", "B3", "--order", "5", "--point", "mixed", "--show-centralizer", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let total: usize = v["exponents"].as_object().unwrap().values().map(|r| r.as_array().unwrap().len()).sum();
    assert_eq!(total, 18);
    assert!(v["centralizer"]["signature"].is_string());
}

#[test]
fn orbits_e6_order_seven() {
    let o = run(&["orbits", "E6", "--order", "7", "--format", "json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["bound"]["product"], "36");
    let claims = v["claims"].as_array().unwrap();
    assert!(claims.iter().all(|c| c["status"] == "pass"), "{claims:#?}");
}

#[test]
fn orbits_bad_prime() {
    let o = run(&["orbits", "E6", "--order", "7", "--primes", "13"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hecke_checks() {
    for check in ["theta", "center", "words", "ddprime"] {
        let o = run(&["hecke", "--type", "A2", "--check", check, "--radius", "1", "--format", "json"]);
        assert!(o.status.success(), "{check}");
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["pass"], true, "{check}");
    }
    assert_eq!(run(&["hecke", "--type", "D4", "--check", "words"]).status.code(), Some(2));
}

#[test]
fn verify_single_case_json() {
    let o = run(&["verify", "--case", "E6.o7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 5);
    assert!(recs.iter().all(|r| r["status"] == "pass"));
    let first = stdout(&o).lines().next().unwrap().to_string();
    let pos: Vec<usize> = ["\"claim_id\"", "\"anchor\"", "\"expected\"", "\"computed\"", "\"status\""]
        .iter()
        .map(|k| first.find(k).unwrap())
        .collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{first}");
}

#[test]
fn verify_failing_case_exits_one() {
    let o = run(&["verify", "--case", "E8.o16", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let recs = json_lines(&o);
    let bound = recs.iter().find(|r| r["claim_id"] == "E8.o16.bound").unwrap();
    assert_eq!(bound["computed"], "147");
}

#[test]
fn verify_is_deterministic_across_jobs() {
    let a = run(&["verify", "--case", "D7.o9", "--case", "partitions", "--format", "json", "--jobs", "1"]);
    let b = run(&["verify", "--case", "D7.o9", "--case", "partitions", "--format", "json", "--jobs", "4"]);
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn config_file_and_overrides() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "prime_bound = 50\nselect = [\"E8.o29\"]").unwrap();
    let path = f.path().to_str().unwrap();
    let o = run(&["verify", "--config", path, "--format", "json"]);
    let recs = json_lines(&o);
    let bound = recs.iter().find(|r| r["claim_id"] == "E8.o29.bound").unwrap();
    assert_eq!(bound["status"], "skipped");

    let o = run(&["verify", "--config", path, "--case", "E6.o7", "--prime-bound", "256", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o).len(), 5);
}

#[test]
fn configuration_errors_exit_two() {
    assert_eq!(run(&["verify", "--case", "E9.o3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--config", "/nonexistent.toml"]).status.code(), Some(2));
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "no_such_key = 1").unwrap();
    assert_eq!(run(&["verify", "--config", f.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--jobs", "0", "--case", "E6.o7"]).status.code(), Some(2));
}

#[test]
fn text_output_groups_records() {
    let o = run(&["verify", "--case", "E6.o7"]);
    let s = stdout(&o);
    assert!(s.contains("== "), "{s}");
    assert!(s.contains("E6.o7.bound"), "{s}");
}
