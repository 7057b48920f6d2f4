use std::process::{Command, Output};

use serde_json::Value;

fn hyperrat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperrat")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn verify_all_on_the_surface() {
    let out = hyperrat(&["verify", "--check", "all", "--n", "1", "--d", "1"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    let results = v["results"].as_array().unwrap();
    assert!(results.len() >= 8);
    assert!(results.iter().all(|r| r["pass"] == true || r["status"] == "inapplicable"));
    assert_eq!(v["config"]["seed"], 42);
}

#[test]
fn count_reports_formula_and_branch() {
    let out = hyperrat(&["count", "--family", "X", "--q", "5"]);
    assert_eq!(code(&out), 0);
    let r = &json(&out)["results"];
    assert_eq!((r["brute"].as_u64(), r["formula"].as_u64(), &r["match"]), (Some(31), Some(31), &Value::Bool(true)));

    let r = &json(&hyperrat(&["count", "--family", "X", "--q", "4"]))["results"];
    assert_eq!(r["branch"], "p = 2, m even");
    assert_eq!(r["brute"], 45);
}

#[test]
fn custom_polynomial_count() {
    let out = hyperrat(&["count", "--family", "custom", "--q", "5", "--poly", "x0^3 + x1^3 + x2^3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["results"]["brute"], 6);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&hyperrat(&["count", "--family", "Y", "--n", "1", "--q", "5"])), 3);
    assert_eq!(code(&hyperrat(&["count", "--family", "X", "--q", "6"])), 1);
    assert_eq!(code(&hyperrat(&["verify", "--check", "no_such_check"])), 1);
    assert_eq!(code(&hyperrat(&["count", "--family", "nonsense", "--q", "5"])), 1);
    assert_eq!(code(&hyperrat(&["--budget", "10", "count", "--family", "X", "--q", "5"])), 4);
    assert_eq!(code(&hyperrat(&["--out", "/nonexistent/dir/r.json", "count", "--family", "X", "--q", "5"])), 5);
}

#[test]
fn runs_are_deterministic_modulo_timing() {
    let args = ["verify", "--check", "composition_numeric", "--check", "singular_locus", "--n", "2", "--d", "1"];
    let strip = |out: Output| {
        let mut v = json(&out);
        for r in v["results"].as_array_mut().unwrap() {
            r["elapsed_ms"] = Value::from(0);
        }
        v.to_string()
    };
    assert_eq!(strip(hyperrat(&args)), strip(hyperrat(&args)));
}

#[test]
fn heights_csv() {
    let out = hyperrat(&["heights", "--up-to", "5", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let direct: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(direct, ["9", "21", "45", "69", "117"]);
}

#[test]
fn out_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dump.json");
    let out = hyperrat(&["--out", path.to_str().unwrap(), "families", "dump", "--family", "X", "--n", "1", "--d", "1"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["tool"], "hyperrat");
    assert!(v["results"].to_string().contains("x0^3"));
}
