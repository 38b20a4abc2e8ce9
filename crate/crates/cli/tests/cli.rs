use std::process::{Command, Output};

use serde_json::Value;

fn nakloc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nakloc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = nakloc(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn lines(args: &[&str]) -> Vec<String> {
    let o = nakloc(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).lines().map(str::to_string).collect()
}

#[test]
fn localise_reports() {
    let r = json(&["localise", "-A", "line:3,2", "-S", "M(2,1)"]);
    assert_eq!(r["result"]["dim_AB"], 5);
    assert_eq!(r["result"]["AB"], serde_json::json!(["S1", "P2", "P2"]));
    assert_eq!(r["B_spec"], "kupisch:line=1;line=1");
    assert_eq!(r["result"]["flags"]["injective"], false);

    let id = json(&["localise", "-A", "line:3,2", "-S", ""]);
    assert_eq!(id["result"]["trivial_set"], serde_json::json!([]));
    assert_eq!(id["result"]["xcat"].as_array().unwrap().len(), 5);

    let c = json(&["localise", "-A", "cycle:6,3", "-S", "M(1,1),M(4,1)"]);
    assert_eq!(c["result"]["flags"]["homological"], true);
    assert_eq!(c["B_spec"], "kupisch:cycle=2,2,2,2");
}

#[test]
fn enumerate_counts() {
    let stt = lines(&["enumerate", "-A", "cycle:3,3", "--what", "stt"]);
    assert_eq!(stt.len(), 21);
    assert_eq!(stt.last().unwrap(), r#"{"count":20}"#);
    assert_eq!(lines(&["enumerate", "-A", "line:1,2", "--what", "uniloc"]).len(), 3);
    assert_eq!(lines(&["enumerate", "-A", "line:3,2", "--what", "torsion"]).last().unwrap(), r#"{"count":12}"#);
    assert_eq!(lines(&["enumerate", "-A", "cycle:3,3", "--what", "homological"]).last().unwrap(), r#"{"count":8}"#);
}

#[test]
fn hasse_quivers() {
    let s = json(&["hasse", "-A", "line:2,2", "--what", "stt", "--format", "json"]);
    assert_eq!(s["nodes"].as_array().unwrap().len(), 5);
    assert_eq!(s["edges"].as_array().unwrap().len(), 5);
    let u = json(&["hasse", "-A", "line:2,2", "--what", "uniloc", "--format", "json"]);
    assert_eq!(u["nodes"].as_array().unwrap().len(), 5);
    assert_eq!(u["edges"].as_array().unwrap().len(), 6);
    let dot = stdout(&nakloc(&["hasse", "-A", "line:1,2", "--what", "stt"]));
    assert_eq!(dot, "digraph stt {\n  n0 [label=\"0\"];\n  n1 [label=\"P1\"];\n  n1 -> n0;\n}\n");
}

#[test]
fn arcs_and_stt() {
    assert_eq!(lines(&["arcs", "-A", "cycle:3,3", "--count", "--format", "text"]), ["20"]);
    let d = json(&["arcs", "-A", "cycle:6,3", "--of-sigma", "S1,S4"]);
    assert_eq!(d, serde_json::json!({"shape":"circle","n":6,"arcs":[[2,1],[5,4]],"loops":[]}));
    let all = lines(&["stt", "-A", "cycle:3,3"]);
    assert_eq!(all.len(), 20);
    assert!(all.contains(&"S1+P1+P3 | support:{}".to_string()));
    let one = json(&["stt", "-A", "cycle:3,3", "-T", "P1+P3+S1 | support:{}"]);
    assert_eq!(one["sigma_prime"], serde_json::json!(["S1"]));
}

#[test]
fn verify_exit_codes() {
    let ok = nakloc(&["verify", "1", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("0 failures"));
    assert_eq!(nakloc(&["verify", "2", "2", "--oracle", "--uniform-only"]).status.code(), Some(0));
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(nakloc(&["localise", "-A", "line:3", "-S", ""]).status.code(), Some(2));
    assert_eq!(nakloc(&["localise", "-A", "line:3,2", "-S", "M(9,1)"]).status.code(), Some(2));
    assert_eq!(nakloc(&["arcs", "-A", "kupisch:line=3,2,2,1", "--count"]).status.code(), Some(2));
    assert_eq!(nakloc(&["enumerate", "-A", "line:3,2", "--what", "nothing"]).status.code(), Some(2));
    assert_eq!(nakloc(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_cacheable() {
    let args = ["enumerate", "-A", "kupisch:cycle=3,2,2", "--what", "uniloc"];
    assert_eq!(nakloc(&args).stdout, nakloc(&args).stdout);
    let dir = std::env::temp_dir().join(format!("nakloc-cache-{}", std::process::id()));
    let cached: Vec<&str> = args.iter().copied().chain(["--cache", dir.to_str().unwrap()]).collect();
    let first = nakloc(&cached).stdout;
    assert!(std::fs::read_dir(&dir).unwrap().count() == 1);
    assert_eq!(nakloc(&cached).stdout, first);
    assert_eq!(first, nakloc(&args).stdout);
    std::fs::remove_dir_all(dir).unwrap();
}
