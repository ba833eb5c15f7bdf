use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domtilt")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn structured(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.extend(["--format", "structured"]);
    let o = run(&a);
    (o.status.code().unwrap(), serde_json::from_slice(&o.stdout).expect("json on stdout"))
}

fn fixture_path(name: &str) -> String {
    format!("{}/../core/fixtures/{name}.alg", env!("CARGO_MANIFEST_DIR"))
}

/// Summand names with multiplicity, sorted.
fn names(v: &Value) -> Vec<(String, u64)> {
    let mut out: Vec<(String, u64)> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|s| (s["name"].as_str().unwrap().to_string(), s["multiplicity"].as_u64().unwrap()))
        .collect();
    out.sort();
    out
}

fn owned(xs: &[(&str, u64)]) -> Vec<(String, u64)> {
    let mut v: Vec<(String, u64)> = xs.iter().map(|(s, k)| (s.to_string(), *k)).collect();
    v.sort();
    v
}

#[test]
fn classify_e4_from_disk() {
    let o = run(&["classify", &fixture_path("e4")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "almost 1-Auslander"), "{out}");
    assert!(out.contains("gldim A = 2"));
    assert!(out.contains("gdom_I A = 2"));
}

#[test]
fn tilting_e1_lists_the_chain() {
    let (code, doc) = structured(&["tilting", "@e1"]);
    assert_eq!(code, 0);
    let r = &doc["result"];
    assert_eq!(r["m"], 1);
    assert_eq!(r["stages"][0], "P(5)^2 + P(1)=I(5)^4");
    let q = [("P(1)=I(5)", 1), ("P(1)/P(3)", 1), ("X", 1), ("P(5)", 1)];
    let mut t1 = q.to_vec();
    t1.push(("P(1)/P(4)", 1));
    let mut t2 = q.to_vec();
    t2.push(("I(2)", 1));
    for (d, want) in [(1, t1), (2, t2)] {
        let c = &r["chain"][d - 1]["certificate"];
        assert_eq!(names(&c["summands"]), owned(&want), "T^{d}");
        assert_eq!(c["pd"], d);
        assert_eq!(c["verified"], true);
    }
    let text = stdout(&run(&["tilting", "@e1"]));
    assert!(text.contains("certified 1-tilting"));
    assert!(text.contains("certified 2-tilting"));
}

#[test]
fn qh_e4_strongly_with_t_listed() {
    let (code, doc) = structured(&["qh", "@e4", "--order", "2<3<1<4"]);
    assert_eq!(code, 0);
    let r = &doc["result"];
    assert_eq!(r["strong"]["strongly"], true);
    assert_eq!(r["equals_t1"], false);
    let want = owned(&[("S(2)", 1), ("S(3)", 1), ("P(1)/P(4)", 1), ("P(1)=I(4)", 1)]);
    assert_eq!(names(&r["characteristic_tilting"]["summands"]), want);
    let text = stdout(&run(&["qh", "@e4", "--order", "2<3<1<4"]));
    assert!(text.contains("strongly-qh: true"));
    assert!(text.contains("T = T^1: false"));
}

#[test]
fn order_defaults_to_the_file() {
    let a = run(&["qh", "@e4"]);
    let b = run(&["qh", "@e4", "--order", "2<3<1<4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn non_qh_order_is_refused() {
    let (code, doc) = structured(&["qh", "@e4", "--order", "4<1<2<3"]);
    assert_eq!(code, 2);
    assert_eq!(doc["status"], "refused");
    assert_eq!(doc["result"]["failure"]["clause"], "kernel_not_filtered");
}

#[test]
fn e2_refusals() {
    let o = run(&["tilting", "@e2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("pd Q = 2"));
    let (code, doc) = structured(&["tilting", "@e2", "--check", "S(2) + S(4) + Q"]);
    assert_eq!(code, 2);
    assert_eq!(doc["result"]["refusal"]["axiom"], "T2");
    assert!(doc["result"]["refusal"]["witness"].is_array());
}

#[test]
fn e2_coresolution() {
    let text = stdout(&run(&["resolve", "@e2"]));
    for line in ["I^0 = I(2)^2 + I(4)^2", "I^1 = I(2) + I(3) + I(4)", "I^2 = I(1) + I(3) + I(4)", "I^3 = I(1)"] {
        assert!(text.contains(line), "{line}\n{text}");
    }
}

#[test]
fn gldim_past_the_bound() {
    let text = stdout(&run(&["classify", "@e3_n4", "--bound", "20"]));
    assert!(text.contains("gldim A > 20"), "{text}");
    assert!(text.contains("almost 1-Auslander-Gorenstein"));
    assert!(text.contains("not almost n-Auslander for any n"));
}

#[test]
fn input_errors_exit_1() {
    let dir = std::env::temp_dir().join(format!("domtilt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.alg");
    std::fs::write(&bad, "field 32003\nvertices 1 2\narrow a: 1 -> 3\n").unwrap();
    let o = run(&["classify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3, column"), "{err}");
    assert_eq!(run(&["classify", "@nope"]).status.code(), Some(1));
    assert_eq!(run(&["classify", "@e4", "--field", "10"]).status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn other_field() {
    let text = stdout(&run(&["classify", "@e4", "--field", "7"]));
    assert!(text.lines().any(|l| l == "almost 1-Auslander"));
}

#[test]
fn report_all_is_deterministic() {
    let a = run(&["report-all", "--format", "structured"]);
    let b = run(&["report-all", "--format", "structured"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["schema"], "domtilt.report/1");
    assert_eq!(doc["result"].as_array().unwrap().len(), doc["inputs"].as_array().unwrap().len());
}

#[test]
fn chain_endos_on_e4_pass() {
    let (code, doc) = structured(&["section4", "@e4"]);
    assert_eq!(code, 0);
    let checks = doc["result"]["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"]["status"] != "fail"), "{checks:?}");
}
