use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supercapelli"))
        .args(args)
        .env_remove("SUPERCAPELLI_CACHE")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn hooks_of_size_three() {
    let out = run(&["hooks", "--m", "1", "--n", "1", "--size", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["partitions"], json!(["(3)", "(2,1)", "(1,1,1)"]));
}

#[test]
fn centrality_suite_passes() {
    let out = run(&["verify", "--suite", "centrality", "--m", "2", "--n", "2", "--dmax", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn sp_star_of_one_box() {
    let out = run(&["sp-star", "--m", "1", "--n", "1", "--partition", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["vars"], json!(["x1", "y1"]));
    let terms: Vec<(Value, Value)> =
        v["terms"].as_array().unwrap().iter().map(|t| (t["exp"].clone(), t["coef"].clone())).collect();
    assert_eq!(
        terms,
        vec![(json!([1, 0]), json!("1/1")), (json!([0, 1]), json!("1/1")), (json!([0, 0]), json!("-1/2"))]
    );
}

#[test]
fn c_poly_routes_agree() {
    let out = run(&["c-poly", "--m", "1", "--n", "1", "--partition", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["routes_agree"], json!(true));
}

#[test]
fn non_hook_partition_is_invalid_input() {
    let out = run(&["c-poly", "--m", "1", "--n", "1", "--partition", "3,3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hook"));
}

#[test]
fn unknown_suite_and_bad_flags_exit_two() {
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["hooks", "--m", "1"]).status.code(), Some(2));
    assert_eq!(run(&["sp-star", "--m", "1", "--n", "1", "--partition", "1", "--theta", "2"]).status.code(), Some(2));
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["capelli-op", "--m", "1", "--n", "1", "--partition", "1", "--format", "json"];
    let plain = run(&args);
    let cached_args: Vec<&str> = args.iter().copied().chain(["--cache-dir", d]).collect();
    let cold = run(&cached_args);
    let warm = run(&cached_args);
    assert_eq!(plain.status.code(), Some(0));
    assert_eq!(plain.stdout, cold.stdout);
    assert_eq!(cold.stdout, warm.stdout);

    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(entries.len(), 1);
    let text = std::fs::read_to_string(&entries[0]).unwrap();
    std::fs::write(&entries[0], text.replacen('1', "7", 1)).unwrap();
    let repaired = run(&cached_args);
    assert_eq!(repaired.status.code(), Some(0));
    assert_eq!(repaired.stdout, plain.stdout);
    assert!(String::from_utf8_lossy(&repaired.stderr).contains("recomputing"));
    assert_eq!(run(&cached_args).stdout, plain.stdout);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hooks.txt");
    let out = run(&["hooks", "--m", "1", "--n", "0", "--size", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "(2)\n");
}

#[test]
fn symbol_preimage_reports_blocks() {
    let out = run(&["capelli-preimage", "--m", "1", "--n", "1", "--sigma", "2,1,4,3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!(v["decomposition"].is_object());
    assert!(v["preimage"]["terms"].as_array().is_some_and(|t| !t.is_empty()));
}
