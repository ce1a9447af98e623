//! Acceptance criterion 10: CLI round-trip.

mod common;

use std::time::Instant;

use divdiff_core::rational::parse_rational;
use serde_json::Value;

/// Visits every exact string field (skipping `_approx` siblings).
fn exact_strings<'a>(v: &'a Value, out: &mut Vec<&'a str>) {
    match v {
        Value::Object(m) => {
            for (k, inner) in m {
                if !k.ends_with("_approx") && k != "provenance" {
                    exact_strings(inner, out);
                }
            }
        }
        Value::Array(items) => items.iter().for_each(|i| exact_strings(i, out)),
        Value::String(s) => out.push(s),
        _ => {}
    }
}

fn looks_rational(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    !body.is_empty()
        && body.split('/').count() <= 2
        && body
            .split('/')
            .all(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()))
}

fn round_trip() -> Result<String, String> {
    let mut reparsed = 0;
    let invocations = common::fixture_invocations();
    for args in &invocations {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = common::run(&args);
        let second = common::run(&args);
        if !first.status.success() {
            return Err(format!("{args:?} exited {:?}", first.status.code()));
        }
        if first.stdout != second.stdout {
            return Err(format!("{args:?}: output differs between runs"));
        }
        let report: Value = serde_json::from_slice(&first.stdout).map_err(|e| e.to_string())?;
        for key in ["command", "inputs", "results", "provenance"] {
            if report.get(key).is_none() {
                return Err(format!("{args:?}: missing `{key}`"));
            }
        }
        let mut strings = Vec::new();
        exact_strings(&report["results"], &mut strings);
        for s in strings.into_iter().filter(|s| looks_rational(s)) {
            let q = parse_rational(s).map_err(|e| format!("{args:?}: {e}"))?;
            if q.to_string() != s {
                return Err(format!("{args:?}: `{s}` re-parses as {q}"));
            }
            reparsed += 1;
        }
    }
    Ok(format!(
        "{} subcommand runs, {reparsed} exact values re-parsed",
        invocations.len()
    ))
}

fn main() {
    let start = Instant::now();
    let outcome = round_trip();
    let elapsed = start.elapsed();
    match outcome {
        Ok(detail) => println!("PASS criterion 10 CLI round-trip: {detail} ({elapsed:.2?}, target 10s)"),
        Err(why) => {
            println!("FAIL criterion 10 CLI round-trip: {why} ({elapsed:.2?})");
            std::process::exit(1);
        }
    }
}
