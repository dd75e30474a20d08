use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_borel-lie"))
}

fn run(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn setup() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    for (family, n, file) in [("sl", "2", "sl2.json"), ("sl", "3", "sl3.json"), ("heisenberg", "3", "h3.json")] {
        let o = run(dir.path(), &["catalog", family, n, "--out", file]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    }
    write(dir.path(), "ef.json", r#"{"elements":[{"coords":["1","0","0"]},{"coords":["0","0","1"]}]}"#);
    write(dir.path(), "eh.json", r#"{"elements":[{"coords":["1","0","0"]},{"coords":["0","1","0"]}]}"#);
    write(
        dir.path(),
        "nilbasis.json",
        r#"{"elements":[{"coords":["1","0","0"]},{"coords":["0","0","1"]},{"coords":["1","1","-1"]}]}"#,
    );
    write(dir.path(), "e.json", r#"{"coords":["1","0","0"]}"#);
    write(dir.path(), "h.json", r#"{"coords":["0","1","0"]}"#);
    dir
}

#[test]
fn catalog_then_validate() {
    let dir = setup();
    let o = run(dir.path(), &["validate", "sl3.json", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "jacobi: ok\n");
    let o = run(dir.path(), &["validate", "sl3.json"]);
    assert_eq!(json(&o)["jacobi"], "ok");
}

#[test]
fn catalog_round_trip_is_byte_stable() {
    let dir = setup();
    let first = std::fs::read_to_string(dir.path().join("sl3.json")).unwrap();
    let l = borel_lie::lie::LieAlgebra::from_json(&first).unwrap();
    assert!(l.validate().is_ok());
    assert_eq!(l.to_json(), first);
    let o = run(dir.path(), &["catalog", "sl", "3"]);
    assert_eq!(stdout(&o), first);
}

#[test]
fn validate_reports_broken_algebra() {
    let dir = setup();
    // sl2 with [h,f] scaled wrongly
    let broken = r#"{"name":"bad","dim":3,"basis":["e","h","f"],"brackets":[
        {"i":0,"j":1,"coeffs":{"0":"-2"}},{"i":0,"j":2,"coeffs":{"1":"1"}},{"i":1,"j":2,"coeffs":{"2":"-3"}}]}"#;
    write(dir.path(), "bad.json", broken);
    let o = run(dir.path(), &["validate", "bad.json", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("jacobi: failed on 1 triples"), "{}", stdout(&o));
    // other verbs refuse it as malformed input
    let o = run(dir.path(), &["classify", "--algebra", "bad.json", "--tuple", "ef.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bad.json"));
}

#[test]
fn classify_e_f_is_neither_with_witness() {
    let dir = setup();
    let o = run(
        dir.path(),
        &["classify", "--algebra", "sl2.json", "--tuple", "ef.json", "--witness-depth", "4"],
    );
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"], "neither");
    assert_eq!(v["k_dim"], 3);
    assert_eq!(v["evidence"]["witness"]["expr"], "[y1,y2]");
    assert_eq!(v["evidence"]["derived_series_dims"], serde_json::json!([3, 3]));

    let o = run(dir.path(), &["classify", "--algebra", "sl2.json", "--tuple", "eh.json"]);
    assert_eq!(json(&o)["verdict"], "common_borel");
}

#[test]
fn count_brackets_depth_nine() {
    let dir = setup();
    let o = run(
        dir.path(),
        &["count-brackets", "--arity", "2", "--depth", "9", "--exact", "--format", "text"],
    );
    assert_eq!(o.status.code(), Some(0));
    let n: num_bigint::BigUint = stdout(&o).trim().parse().unwrap();
    assert!(n > num_bigint::BigUint::from(1u8) << 256usize);
    let o = run(dir.path(), &["count-brackets", "--arity", "2", "--depth", "2", "--cumulative"]);
    assert_eq!(json(&o)["count"], "6");
    let o = run(dir.path(), &["count-brackets", "--arity", "2", "--depth", "2", "--exact", "--cumulative"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn structure_verbs() {
    let dir = setup();
    let p = dir.path();
    let o = run(p, &["series", "--algebra", "h3.json", "--kind", "lower"]);
    assert_eq!(json(&o)["dims"], serde_json::json!([3, 1, 0]));
    let o = run(p, &["series", "--algebra", "sl2.json", "--kind", "derived", "--within", "eh.json"]);
    assert_eq!(json(&o)["dims"], serde_json::json!([2, 1, 0]));

    let o = run(p, &["jm", "--algebra", "sl2.json", "--element", "e.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["relations_hold"], true);

    let o = run(p, &["grading", "--algebra", "sl2.json", "--h", "h.json"]);
    let v = json(&o);
    assert_eq!(v["weights"], serde_json::json!([-2, 0, 2]));
    assert_eq!(v["highest_weight"], 2);

    let o = run(p, &["witness", "--algebra", "sl2.json", "--tuple", "nilbasis.json", "--max-depth", "3"]);
    assert_eq!(json(&o)["witness"]["expr"], "[y1,y2]");

    let o = run(p, &["very-nilpotent", "--algebra", "sl2.json", "--tuple", "nilbasis.json", "--check-depth", "3"]);
    let v = json(&o);
    assert_eq!(v["theorem_verdict"], false);
    assert_eq!(v["is_basis"], true);

    let o = run(p, &["refute-engel", "--algebra", "sl2.json", "--basis", "nilbasis.json"]);
    let v = json(&o);
    assert_eq!(v["outcome"]["kind"], "direct_witness");
    assert_eq!(v["outcome"]["expr"], "[y1,y2]");
    let o = run(
        p,
        &["refute-engel", "--algebra", "sl2.json", "--basis", "nilbasis.json", "--direct-depth", "0"],
    );
    let v = json(&o);
    assert_eq!(v["trace"].as_array().unwrap().len(), 1);
    assert_eq!(v["outcome"]["expr"], "[[y1,[y1,y2]],y2]");

    let o = run(p, &["cross-check", "--algebra", "sl2.json", "--tuple", "ef.json", "--depth", "2"]);
    assert_eq!(json(&o)["status"], "consistent");
}

#[test]
fn gen_export_formats() {
    let dir = setup();
    let o = run(
        dir.path(),
        &["gen-export", "--algebra", "sl2.json", "--arity", "1", "--min-depth", "1", "--max-depth", "1"],
    );
    let v = json(&o);
    assert_eq!(v["vars"], serde_json::json!(["y1_e", "y1_h", "y1_f"]));
    let g = &v["generators"][0];
    assert_eq!(g["expr"], "y1");
    assert_eq!(g["coeff_index"], 1);
    assert_eq!(g["text"], "-4*y1_e*y1_f - 4*y1_h^2");
    assert_eq!(g["poly"]["terms"][0]["exp"], serde_json::json!([0, 2, 0]));
    assert_eq!(g["poly"]["terms"][0]["coeff"], "-4");

    let o = run(
        dir.path(),
        &["gen-export", "--algebra", "sl3.json", "--arity", "2", "--min-depth", "1", "--max-depth", "1"],
    );
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("size gate"));
}

#[test]
fn exit_codes_and_diagnostics() {
    let dir = setup();
    let p = dir.path();
    // precondition: not semisimple
    let o = run(p, &["classify", "--algebra", "h3.json", "--tuple", "ef.json"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("h3.json"), "{}", stderr(&o));
    // precondition: not nilpotent
    let o = run(p, &["jm", "--algebra", "sl2.json", "--element", "h.json"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("h.json"));
    // malformed: unknown key
    write(p, "junk.json", r#"{"elements":[], "extra": 1}"#);
    let o = run(p, &["classify", "--algebra", "sl2.json", "--tuple", "junk.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("junk.json"));
    // malformed: wrong dimension
    write(p, "short.json", r#"{"elements":[{"coords":["1","0"]}]}"#);
    let o = run(p, &["classify", "--algebra", "sl2.json", "--tuple", "short.json"]);
    assert_eq!(o.status.code(), Some(2));
    // malformed: zero denominator
    write(p, "zd.json", r#"{"coords":["1/0","0","0"]}"#);
    let o = run(p, &["jm", "--algebra", "sl2.json", "--element", "zd.json"]);
    assert_eq!(o.status.code(), Some(2));
    // missing file, unknown family, unknown verb
    assert_eq!(run(p, &["validate", "missing.json"]).status.code(), Some(2));
    assert_eq!(run(p, &["catalog", "so", "3"]).status.code(), Some(2));
    assert_eq!(run(p, &["frobnicate"]).status.code(), Some(2));
    // results never go to stderr on success
    let o = run(p, &["validate", "sl2.json"]);
    assert!(stderr(&o).is_empty());
}

#[test]
fn help_shows_cap_defaults() {
    let dir = setup();
    let o = run(dir.path(), &["classify", "--help"]);
    let h = stdout(&o);
    assert!(h.contains("[default: 4]"), "{h}");
    assert!(h.contains("[default: 100000]"), "{h}");
    let o = run(dir.path(), &["gen-export", "--help"]);
    assert!(stdout(&o).contains("[default: 10000]"));
}

#[test]
fn output_is_deterministic() {
    let dir = setup();
    let args = ["refute-engel", "--algebra", "sl2.json", "--basis", "nilbasis.json", "--direct-depth", "0"];
    let a = run(dir.path(), &args);
    let b = run(dir.path(), &args);
    assert_eq!(a.stdout, b.stdout);
    let args = ["classify", "--algebra", "sl3.json", "--tuple", "pair.json", "--format", "text"];
    write(
        dir.path(),
        "pair.json",
        r#"{"elements":[{"coords":["1","0","2","0","0","1","0","-1"]},{"coords":["0","1/2","0","1","0","0","3","0"]}]}"#,
    );
    let a = run(dir.path(), &args);
    let b = run(dir.path(), &args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn in_process_run_matches_binary() {
    let dir = setup();
    let path = dir.path().join("sl2.json");
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = borel_lie::cli::run_with(
        ["borel-lie", "validate", path.to_str().unwrap(), "--format", "text"],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), "jacobi: ok\n");
}
