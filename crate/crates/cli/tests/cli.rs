use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_gridcleave"));
    c.env_remove("GRIDCLEAVE_CAP");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let out = run(&[&["gen"], args].concat());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    write(dir, name, std::str::from_utf8(&out.stdout).unwrap())
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const K4: &str = r#"{"nodes":[{"id":0,"p":"1"},{"id":1,"p":"1"},{"id":2,"p":"-1"},{"id":3,"p":"-1"}],
"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#;

#[test]
fn k4_auto_partition() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.json", K4);
    let out = run(&["partition", k4.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["p"], serde_json::json!(["0", "0"]));
    assert_eq!(v["sizes"], serde_json::json!([2, 2]));
    assert!(v["trace"].as_str().unwrap().starts_with("dbcp3"));
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    for k in ["V1", "V2", "p", "sizes", "trace", "seed"] {
        assert!(keys.iter().any(|x| *x == k), "missing {k}");
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "path.json",
        r#"{"nodes":[{"id":0,"p":"1"},{"id":1,"p":"-1"},{"id":2,"p":"1"},{"id":3,"p":"-1"}],"edges":[[0,1],[1,2],[2,3]]}"#,
    );
    let out = run(&["partition", path.to_str().unwrap(), "--mode", "dbcp"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2-connected"));

    let bad = write(dir.path(), "bad.json", "{not json");
    assert_eq!(run(&["partition", bad.to_str().unwrap()]).status.code(), Some(2));
    let dup = write(dir.path(), "dup.json", r#"{"nodes":[{"id":0,"p":"1"},{"id":1,"p":"-1"}],"edges":[[0,1],[1,0]]}"#);
    assert_eq!(run(&["partition", dup.to_str().unwrap()]).status.code(), Some(2));
    let loop_ = write(dir.path(), "loop.json", r#"{"nodes":[{"id":0,"p":"1"}],"edges":[[0,0]]}"#);
    assert_eq!(run(&["partition", loop_.to_str().unwrap()]).status.code(), Some(2));
    let missing = dir.path().join("nope.json");
    assert_eq!(run(&["partition", missing.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["partition", path.to_str().unwrap(), "--mode", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "fig1", "--s", "0"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "random3", "--n", "7"]).status.code(), Some(2));

    let big = gen(dir.path(), "big.json", &["random3", "--n", "20", "--seed", "3"]);
    assert_eq!(run(&["oracle", big.to_str().unwrap()]).status.code(), Some(4));
}

#[test]
fn cap_from_env_and_flag() {
    let dir = tempfile::tempdir().unwrap();
    let fig = gen(dir.path(), "fig.json", &["fig1", "--s", "1", "--t", "0"]);
    let f = fig.to_str().unwrap();
    assert_eq!(run(&["oracle", f]).status.code(), Some(0));
    let env = bin().args(["oracle", f]).env("GRIDCLEAVE_CAP", "7").output().unwrap();
    assert_eq!(env.status.code(), Some(4));
    let flag = bin().args(["oracle", f, "--cap", "8"]).env("GRIDCLEAVE_CAP", "7").output().unwrap();
    assert_eq!(flag.status.code(), Some(0));
    let garbage = bin().args(["oracle", f]).env("GRIDCLEAVE_CAP", "lots").output().unwrap();
    assert_eq!(garbage.status.code(), Some(2));
}

#[test]
fn oracle_frontier_and_check() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.json", K4);
    let v = json(&run(&["oracle", k4.to_str().unwrap()]));
    let front = v.as_array().unwrap();
    assert!(front.iter().any(|f| f["imbalance"] == "0" && f["ratio"] == "1"));

    let fig = gen(dir.path(), "fig.json", &["fig1", "--s", "1", "--t", "0"]);
    let v = json(&run(&["oracle", fig.to_str().unwrap(), "--check", "0", "1"]));
    assert_eq!(v["check"], false);
    let v = json(&run(&["oracle", fig.to_str().unwrap(), "--check", "0", "3"]));
    assert_eq!(v["check"], true);
}

#[test]
fn generators_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, n) in [("random3", "8"), ("random2", "12"), ("random2", "16")] {
        let f = gen(dir.path(), "g.json", &[kind, "--n", n, "--seed", "1"]);
        let out = run(&["partition", f.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{kind} {}", String::from_utf8_lossy(&out.stderr));
    }
    let fig = gen(dir.path(), "fig.json", &["fig1", "--s", "1", "--t", "0"]);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&fig).unwrap()).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 8);
}

#[test]
fn edge_list_format() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("inst.txt");
    let out = run(&["gen", "random3", "--n", "8", "--seed", "4", "--format", "edgelist", "--out", base.to_str().unwrap()]);
    assert!(out.status.success());
    let weights = dir.path().join("inst.txt.weights");
    assert!(weights.exists());
    let out = run(&[
        "partition",
        base.to_str().unwrap(),
        "--format",
        "edgelist",
        "--weights",
        weights.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json_in = gen(dir.path(), "inst.json", &["random3", "--n", "8", "--seed", "4"]);
    let same = run(&["partition", json_in.to_str().unwrap()]);
    assert_eq!(out.stdout, same.stdout);
    // Missing weight file is a parse failure.
    let out = run(&["partition", base.to_str().unwrap(), "--format", "edgelist"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bcpi_modes() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.json", K4);
    let v = json(&run(&["partition", k4.to_str().unwrap(), "--mode", "bcpi2", "--nodes", "0,1"]));
    assert_eq!(v["p"], serde_json::json!(["0", "0"]));
    let oct = gen(dir.path(), "r.json", &["random3", "--n", "8", "--seed", "1"]);
    let v = json(&run(&["partition", oct.to_str().unwrap(), "--mode", "bcpi3"]));
    assert_eq!(v["p"], serde_json::json!(["0", "0", "0"]));
    let out = run(&["partition", k4.to_str().unwrap(), "--mode", "bcpi3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn embed_svg() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.json", K4);
    let out = run(&["embed", k4.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let svg = String::from_utf8(out.stdout).unwrap();
    assert_eq!(svg.matches("<circle").count(), 4);
    // Six graph edges plus the three sides of the anchor triangle.
    assert_eq!(svg.matches("<line").count(), 9);
    let colored = String::from_utf8(run(&["embed", k4.to_str().unwrap(), "--with-partition"]).stdout).unwrap();
    assert!(colored.contains("#d95f02") && colored.contains("#1b9e77"));
    // Anchors land on the canvas images of (0,0), (1,0), (0,1).
    for corner in [r#"cx="40.000" cy="360.000""#, r#"cx="360.000" cy="360.000""#, r#"cx="40.000" cy="40.000""#] {
        assert!(svg.contains(corner), "{corner}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.json", K4);
    let dest = dir.path().join("res.json");
    let out = run(&["partition", k4.to_str().unwrap(), "--out", dest.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(dest).unwrap()).unwrap();
    assert_eq!(v["sizes"], serde_json::json!([2, 2]));
}
