#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_divdiff"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

/// One invocation per subcommand.
pub fn fixture_invocations() -> Vec<Vec<String>> {
    let hat = format!("pl:{}", fixture("hat.csv"));
    let cases: Vec<Vec<&str>> = vec![
        vec!["eval", "--knots", "0,1/3,1/2,1", "--values", "1,-2,5/7,0"],
        vec!["eval", "--knots", "0,1/2,1", "--func", "ratfun:1;1,1"],
        vec!["uniform", "--func", "poly:1,0,0,1/3", "--n", "3"],
        vec!["fd", "--func", "poly:0,0,0,1", "--x", "1/5", "--h", "1/7", "--n", "3"],
        vec!["identity", "--func", &hat, "--n", "4"],
        vec!["interp", "--func", "ratfun:1;1,0,1", "--n", "4"],
        vec!["cascade", "--func", "poly:0,-1,1"],
        vec!["nullspace", "--N", "3"],
        vec!["minlip", "--N", "3"],
        vec![
            "probe", "--func", &hat, "--x", "0", "--h", "1/4", "--n", "1", "--Nmax", "64",
        ],
        vec![
            "telescope",
            "--func",
            &hat,
            "--x",
            "1/8",
            "--n",
            "3",
            "--j",
            "2",
            "--h",
            "1/20",
            "--N",
            "12",
            "--extend-zero",
        ],
        vec![
            "walkthrough",
            "--func",
            "plv:L=6;0,1,0,0,0,0,0",
            "--n",
            "3",
            "--h",
            "1/12",
            "--N",
            "16",
            "--x",
            "0",
        ],
    ];
    cases
        .into_iter()
        .map(|c| c.into_iter().map(String::from).collect())
        .collect()
}
