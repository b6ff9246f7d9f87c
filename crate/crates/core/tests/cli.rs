//! End-to-end behaviour of the command-line front end.

use std::process::Command;

use metacyclic::cli;
use metacyclic::skew;
use metacyclic::structure::System;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("metacyclic").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn lines(args: &[&str]) -> Vec<Value> {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn analyze_reports_totals_and_violations() {
    assert_eq!(json(&["analyze", "14", "3", "9"])["total_codes"], 541_696);
    let small = json(&["analyze", "7", "2", "2"]);
    assert_eq!(small["total_codes"], 1024);
    assert_eq!(small["components"].as_array().unwrap().len(), 3);
    let (code, _, err) = run(&["analyze", "14", "3", "5"]);
    assert_eq!(code, 2);
    assert!(err.contains("OrderViolation"), "{err}");
    let (code, _, err) = run(&["analyze", "13", "5", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("NotAPowerOfQ"), "{err}");
}

#[test]
fn huge_totals_are_strings() {
    let report = json(&["analyze", "19", "7", "7"]);
    assert_eq!(report["total_codes"], 19_491_170_582_528u64);
    let big = json(&["analyze", "91", "3", "9"]);
    let product: u128 =
        big["components"].as_array().unwrap().iter().map(|c| c["ideal_count"].as_u64().unwrap() as u128).product();
    assert!(product > u64::MAX as u128);
    assert_eq!(big["total_codes"], product.to_string());
}

#[test]
fn enumerate_streams_in_catalogue_order() {
    assert_eq!(lines(&["enumerate", "7", "2", "2"]).len(), 1024);
    let first = lines(&["enumerate", "14", "3", "9", "--limit", "5"]);
    assert_eq!(first.len(), 5);
    assert_eq!(first[0]["tuple"], "0:zero,1:zero,2:zero,3:zero");
    assert_eq!(first[0]["dimension"], 0);
    assert_eq!(first[1]["tuple"], "0:zero,1:zero,2:zero,3:full");
    for (n, rec) in first.iter().enumerate() {
        assert_eq!(rec["index"], n);
        assert_eq!(rec["choices"].as_array().unwrap().len(), 4);
    }
}

#[test]
fn self_orthogonal_streams() {
    let so = lines(&["self-orthogonal", "14", "3", "9"]);
    assert_eq!(so.len(), 3364);
    let flagged = lines(&["enumerate", "14", "3", "9", "--self-orthogonal-only"]);
    assert_eq!(so, flagged);
    assert_eq!(lines(&["self-orthogonal", "7", "2", "2"]).len(), 66);
    let small = lines(&["self-orthogonal", "14", "3", "9", "--max-dim", "6"]);
    assert!(small.iter().all(|r| r["dimension"].as_u64().unwrap() <= 6));
    assert!(!small.is_empty() && small.len() < 3364);
}

#[test]
fn dimension_filters() {
    let all = lines(&["enumerate", "7", "2", "2"]);
    let mid = lines(&["enumerate", "7", "2", "2", "--min-dim", "6", "--max-dim", "9"]);
    let expected = all.iter().filter(|r| (6..=9).contains(&r["dimension"].as_u64().unwrap())).count();
    assert_eq!(mid.len(), expected);
    assert!(expected > 0);
}

#[test]
fn code_reports_the_worked_example() {
    let r = json(&["code", "14", "3", "9", "0:zero,1:zero,2:dim1@7,3:zero", "--weights"]);
    assert_eq!(r["n"], 42);
    assert_eq!(r["k"], 6);
    assert_eq!(r["d"], 18);
    assert_eq!(r["cardinality"], 729);
    assert_eq!(r["weight_enumerator"], "1+14Y^18+294Y^24+336Y^30+84Y^36");
    assert_eq!(r["weights"]["24"], 294);
    assert_eq!(r["self_orthogonal"], true);
    let rows = r["generator"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|row| row.as_str().unwrap().len() == 42));
    // omitted components default to zero
    assert_eq!(json(&["code", "14", "3", "9", "2:dim1@7"])["generator"], r["generator"]);
}

#[test]
fn code_edge_cases() {
    let full = json(&["code", "14", "3", "9", "0:full,1:full,2:full,3:full"]);
    assert_eq!(full["k"], 42);
    assert_eq!(full["d"], 1);
    assert_eq!(json(&["code", "14", "3", "9", "0:zero"])["k"], 0);
    let (code, _, _) = run(&["code", "14", "3", "9", "0:full,1:full,2:full,3:full", "--weights"]);
    assert_eq!(code, 4);
    let (code, _, _) = run(&["code", "14", "3", "9", "2:dim2@0", "--weights", "--cap", "1000"]);
    assert_eq!(code, 4);
    for bad in ["2:dim1@91", "2:comm@0", "0:dim1@1", "7:zero", "0:zero,0:full", "2dim1", "2:wat@1"] {
        let (code, _, err) = run(&["code", "14", "3", "9", bad]);
        assert_eq!(code, 2, "{bad}: {err}");
    }
}

#[test]
fn dual_of_the_worked_example() {
    let sys = System::new(14, 3, 9).unwrap();
    let c2 = sys.component(2);
    let k = &c2.field;
    let alpha = k.pow(&k.element(&[1, 1]), 7);
    let image = c2.theta(&skew::hat(&sys, 2, &alpha).unwrap());
    let expected = c2.norm_exponent(&image).unwrap();

    let r = json(&["dual", "14", "3", "9", "0:zero,1:zero,2:dim1@7,3:zero"]);
    assert_eq!(r["dual_tuple"], format!("0:full,1:full,2:dim2@{expected},3:full"));
    assert_eq!(r["dual_dimension"], 36);
    assert_eq!(r["complement_ok"], true);
    assert_eq!(r["orthogonal"], true);
    let alpha_json: Vec<u64> =
        r["dual_choices"][2]["alpha"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    assert_eq!(alpha_json, image.coeffs().iter().map(|&c| c as u64).collect::<Vec<_>>());

    let back = json(&["dual", "14", "3", "9", r["dual_tuple"].as_str().unwrap()]);
    assert_eq!(back["dual_tuple"], "0:zero,1:zero,2:dim1@7,3:zero");
    let zero = json(&["dual", "14", "3", "9", ""]);
    assert_eq!(zero["dual_tuple"], "0:full,1:full,2:full,3:full");
}

#[test]
fn verify_runs_the_oracles() {
    let r = json(&["verify", "7", "2", "2"]);
    assert_eq!(r["passed"], true);
    let checks = r["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] == "pass"), "{checks:?}");
    assert!(checks.iter().any(|c| c["name"] == "self_orthogonal" && c["detail"].as_str().unwrap().contains("66")));

    let r = json(&["verify", "14", "3", "9", "--skip-large"]);
    assert_eq!(r["passed"], true);
    assert!(r["checks"].as_array().unwrap().iter().any(|c| c["status"] == "skipped"));

    assert_eq!(run(&["verify", "14", "3", "9"]).0, 4);
    assert_eq!(run(&["verify", "14", "3", "5"]).0, 2);
}

#[test]
fn output_is_deterministic() {
    let a = run(&["enumerate", "14", "3", "9", "--limit", "300"]);
    let b = run(&["enumerate", "14", "3", "9", "--limit", "300"]);
    assert_eq!(a, b);
    assert_eq!(run(&["analyze", "14", "3", "9"]), run(&["analyze", "14", "3", "9"]));
}

#[test]
fn enumerated_descriptors_round_trip_through_code() {
    for rec in lines(&["enumerate", "7", "2", "2", "--limit", "200"]).iter().step_by(7) {
        let tuple = rec["tuple"].as_str().unwrap();
        let code = json(&["code", "7", "2", "2", tuple]);
        assert_eq!(code["tuple"], tuple);
        assert_eq!(code["k"], rec["dimension"]);
        let again = json(&["code", "7", "2", "2", code["tuple"].as_str().unwrap()]);
        assert_eq!(again["generator"], code["generator"]);
    }
}

#[test]
fn output_file_and_io_errors() {
    let dir = std::env::temp_dir().join(format!("metacyclic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("so.jsonl");
    let (code, out, _) = run(&["self-orthogonal", "7", "2", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 66);
    let missing = dir.join("no/such/dir/out.json");
    assert_eq!(run(&["analyze", "7", "2", "2", "--output", missing.to_str().unwrap()]).0, 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn pretty_printing_only_changes_layout() {
    let (_, compact, _) = run(&["analyze", "7", "2", "2"]);
    let (_, pretty, _) = run(&["analyze", "7", "2", "2", "--json-indent"]);
    assert!(pretty.lines().count() > 10);
    assert_eq!(compact.lines().count(), 1);
    let a: Value = serde_json::from_str(&compact).unwrap();
    let b: Value = serde_json::from_str(&pretty).unwrap();
    assert_eq!(a, b);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_metacyclic");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["analyze", "14", "3", "9"]);
    assert_eq!(ok.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(report["total_codes"], 541_696);
    assert_eq!(status(&["analyze", "14", "3", "5"]).status.code(), Some(2));
    assert_eq!(status(&["code", "14", "3", "9", "2:dim1@99"]).status.code(), Some(2));
    assert_eq!(status(&["verify", "14", "3", "9"]).status.code(), Some(4));
    assert_eq!(status(&["--help"]).status.code(), Some(0));
    assert_eq!(status(&["frobnicate"]).status.code(), Some(2));
}
