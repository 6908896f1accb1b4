//! Determinism and exit-code contract of the binary. Prints one PASS/FAIL
//! line and exits non-zero on failure.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gridcleave"))
        .env_remove("GRIDCLEAVE_CAP")
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let mut fails: Vec<String> = Vec::new();

    // Instances produced by the generators themselves.
    let mut inputs = Vec::new();
    for (name, args) in [
        ("r3.json", vec!["gen", "random3", "--n", "12", "--seed", "5"]),
        ("r3odd.json", vec!["gen", "random3", "--n", "10", "--seed", "2"]),
        ("r2.json", vec!["gen", "random2", "--n", "16", "--seed", "7"]),
        ("fig.json", vec!["gen", "fig1", "--s", "1", "--t", "0"]),
    ] {
        let out = run(&args);
        if !out.status.success() {
            fails.push(format!("{args:?} exited {:?}", out.status.code()));
        }
        inputs.push(write(d, name, &String::from_utf8_lossy(&out.stdout)).to_str().unwrap().to_string());
    }
    let el = d.join("inst.txt");
    let el = el.to_str().unwrap();
    run(&["gen", "random2", "--n", "12", "--seed", "3", "--format", "edgelist", "--out", el]);
    let weights = format!("{el}.weights");

    let mut commands: Vec<Vec<String>> = Vec::new();
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    for gen in [
        s(&["gen", "random3", "--n", "20", "--seed", "9"]),
        s(&["gen", "random2", "--n", "14", "--seed", "9"]),
        s(&["gen", "fig1", "--s", "2", "--t", "1"]),
    ] {
        commands.push(gen);
    }
    for (i, f) in inputs.iter().enumerate() {
        for seed in ["0", "17"] {
            commands.push(s(&["partition", f, "--seed", seed]));
            // Only the 3-connected inputs get an embedding.
            if i < 2 {
                commands.push(s(&["embed", f, "--seed", seed, "--with-partition"]));
            }
        }
        commands.push(s(&["partition", f, "--mode", "bcpi2"]));
        commands.push(s(&["oracle", f, "--cap", "16"]));
        commands.push(s(&["oracle", f, "--centered", "--check", "1", "3"]));
    }
    commands.push(s(&["partition", &inputs[0], "--mode", "bcpi3"]));
    commands.push(s(&["partition", &inputs[2], "--q", "3"]));
    commands.push(s(&["partition", el, "--format", "edgelist", "--weights", &weights]));

    let mut deterministic = 0;
    for c in &commands {
        let args: Vec<&str> = c.iter().map(String::as_str).collect();
        let (a, b) = (run(&args), run(&args));
        if a.status.code() == b.status.code() && a.stdout == b.stdout && a.stderr == b.stderr {
            deterministic += 1;
        } else {
            fails.push(format!("{args:?} differs between runs"));
        }
        if !a.status.success() {
            fails.push(format!("{args:?} exited {:?}: {}", a.status.code(), String::from_utf8_lossy(&a.stderr).trim()));
        }
    }

    // Crafted bad inputs and the code each must produce.
    let path = write(d, "path.json", r#"{"nodes":[{"id":0,"p":"1"},{"id":1,"p":"-1"},{"id":2,"p":"1"},{"id":3,"p":"-1"}],"edges":[[0,1],[1,2],[2,3]]}"#);
    let k4 = write(
        d,
        "k4.json",
        r#"{"nodes":[{"id":0,"p":"1"},{"id":1,"p":"1"},{"id":2,"p":"-1"},{"id":3,"p":"-1"}],"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#,
    );
    let bad = write(d, "bad.json", "{not json");
    let dup = write(d, "dup.json", r#"{"nodes":[{"id":0,"p":"1"},{"id":1,"p":"-1"}],"edges":[[0,1],[1,0]]}"#);
    let lp = write(d, "loop.json", r#"{"nodes":[{"id":0,"p":"1"}],"edges":[[0,0]]}"#);
    let badp = write(d, "badp.json", r#"{"nodes":[{"id":0,"p":"x"},{"id":1,"p":"1"}],"edges":[[0,1]]}"#);
    let (path, k4, bad, dup, lp, badp) = (
        path.to_str().unwrap(),
        k4.to_str().unwrap(),
        bad.to_str().unwrap(),
        dup.to_str().unwrap(),
        lp.to_str().unwrap(),
        badp.to_str().unwrap(),
    );
    let missing = d.join("missing.json");
    let missing = missing.to_str().unwrap();
    let contract: Vec<(Vec<&str>, i32)> = vec![
        (vec!["partition", k4], 0),
        (vec!["partition", bad], 2),
        (vec!["partition", dup], 2),
        (vec!["partition", lp], 2),
        (vec!["partition", badp], 2),
        (vec!["partition", missing], 2),
        (vec!["partition", k4, "--mode", "nope"], 2),
        (vec!["partition", k4, "--seed", "-1"], 2),
        (vec!["partition", el, "--format", "edgelist"], 2),
        (vec!["gen", "fig1", "--s", "0"], 2),
        (vec!["gen", "random3", "--n", "7"], 2),
        (vec!["partition", path], 3),
        (vec!["partition", path, "--mode", "dbcp"], 3),
        (vec!["partition", k4, "--mode", "bcpi3"], 3),
        (vec!["partition", k4, "--mode", "bcpi2", "--nodes", "0,2"], 3),
        (vec!["embed", path], 3),
        (vec!["oracle", &inputs[2], "--cap", "15"], 4),
        (vec!["oracle", &inputs[0], "--cap", "8"], 4),
    ];
    let mut honored = 0;
    for (args, code) in &contract {
        let got = run(args).status.code();
        if got == Some(*code) {
            honored += 1;
        } else {
            fails.push(format!("{args:?} exited {got:?}, expected {code}"));
        }
    }
    let env = Command::new(env!("CARGO_BIN_EXE_gridcleave")).args(["oracle", k4]).env("GRIDCLEAVE_CAP", "2").output().unwrap();
    if env.status.code() == Some(4) {
        honored += 1;
    } else {
        fails.push(format!("GRIDCLEAVE_CAP=2 exited {:?}, expected 4", env.status.code()));
    }

    let status = if fails.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "criterion 11 {status} cli determinism and exit codes: {deterministic}/{} commands byte-identical, {honored}/{} exit codes honored",
        commands.len(),
        contract.len() + 1
    );
    for f in &fails {
        println!("  {f}");
    }
    if !fails.is_empty() {
        std::process::exit(1);
    }
}
