//! Behaviour of the `xc` binary: exit codes, output formats, the JSON
//! round-trip guarantee, and table handling.

use std::path::PathBuf;
use std::process::{Command, Output};

fn xc() -> Command {
    Command::new(env!("CARGO_BIN_EXE_xc"))
}

fn sample_table() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/genus0-congruence-sample.txt")
}

fn run(args: &[&str]) -> Output {
    xc().args(args)
        .env_remove("XC_CONGRUENCE_TABLE")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn resolve_table_output() {
    let out = run(&["resolve", "9", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("selfIntersections: [-2,-5]"));
    assert!(text.contains("PASS"));
}

#[test]
fn resolve_json_round_trips_byte_identically() {
    let table = sample_table();
    let table = table.to_str().unwrap();
    for args in [
        vec!["resolve", "9", "8", "--format", "json"],
        vec!["fixed-points", "--c", "2", "--format", "json"],
        vec!["invariants", "--c", "2", "--format", "json"],
        vec!["plurigenus", "--c", "2", "--m", "3", "--format", "json"],
        vec!["kodaira-dim", "--c", "2", "--format", "json"],
        vec!["mordell-weil", "--c", "2", "--format", "json"],
        vec!["jprofile", "--c", "2", "--format", "json"],
        vec!["gamma", "--c", "2", "--table", table, "--format", "json"],
        vec!["verify", "--c", "2", "--table", table, "--format", "json"],
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{args:?}");
        let text = stdout(&out);
        let value: serde_json::Value = serde_json::from_str(&text).expect("valid json");
        let again = format!("{}\n", serde_json::to_string_pretty(&value).unwrap());
        assert_eq!(text, again, "round trip changed bytes for {args:?}");
    }
}

#[test]
fn invariants_json_field_names() {
    let out = run(&["invariants", "--c", "2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let results = &value["results"];
    for key in [
        "chiTop",
        "chiHolo",
        "p_g",
        "h11",
        "picard",
        "mwRank",
        "extremal",
        "sectionSelfIntersection",
    ] {
        assert!(!results[key].is_null(), "missing field {key}");
    }
    assert_eq!(results["chiTop"], 60);
    assert_eq!(results["extremal"], true);
}

#[test]
fn mordell_weil_json_shape() {
    let out = run(&["mordell-weil", "--c", "2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["results"]["sections"], 4);
    assert_eq!(value["results"]["group"], "Z/4");
    assert_eq!(value["results"]["selfIntersection"], -5);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["invariants"]).status.code(), Some(2)); // missing --c
    assert_eq!(run(&["invariants", "--c", "1"]).status.code(), Some(2));
    assert_eq!(run(&["resolve", "6", "2"]).status.code(), Some(2));
    assert_eq!(
        run(&["plurigenus", "--c", "2", "--m", "1"]).status.code(),
        Some(2)
    );
    // dot output only exists for some commands
    assert_eq!(
        run(&["gamma", "--c", "2", "--format", "dot"]).status.code(),
        Some(2)
    );
}

#[test]
fn dot_outputs() {
    let out = run(&["resolve", "9", "5", "--format", "dot"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("graph resolution"));

    let out = run(&["fixed-points", "--c", "2", "--format", "dot"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).matches("graph resolution").count(), 9);

    let out = run(&["invariants", "--c", "2", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("graph fiber").count(), 11);
    assert!(text.contains("// I_36 at 0"));
}

#[test]
fn gamma_skips_without_table_and_exits_1() {
    let out = run(&["gamma", "--c", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("skipped: table unavailable"));

    let out = run(&["gamma", "--c", "2", "--allow-skip"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn gamma_with_table_passes() {
    let table = sample_table();
    let out = run(&["gamma", "--c", "2", "--table", table.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("congruence_lookup"));
    assert!(!text.contains("SKIPPED"));
}

#[test]
fn table_path_from_environment() {
    let out = xc()
        .args(["gamma", "--c", "2"])
        .env("XC_CONGRUENCE_TABLE", sample_table())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("signature absent"));
}

#[test]
fn missing_table_file_is_an_error() {
    let out = run(&["verify", "--c", "2", "--table", "/nonexistent/table.txt"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("table unavailable"));
}

#[test]
fn verify_without_table() {
    let out = run(&["verify", "--c", "2"]);
    assert_eq!(
        out.status.code(),
        Some(1),
        "skip must fail without --allow-skip"
    );
    let out = run(&["verify", "--c", "2", "--allow-skip"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("SKIPPED"));
}

#[test]
fn verify_json_lists_every_check() {
    let table = sample_table();
    let out = run(&[
        "verify",
        "--c",
        "2",
        "--table",
        table.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = value["checks"].as_array().unwrap();
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(
        names,
        vec![
            "euler_sum",
            "shioda_tate_h11",
            "plurigenus_enumeration",
            "riemann_hurwitz_closure",
            "index_equals_j_degree",
            "abelianization",
            "genus_zero",
            "mordell_weil_group",
            "congruence_lookup",
        ]
    );
    for check in checks {
        assert_eq!(check["status"], "pass", "{}", check["name"]);
    }
}

#[test]
fn formula_scale_is_not_desk_bound() {
    // closed-form subcommands accept large c
    let out = run(&["invariants", "--c", "17", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["results"]["chiTop"], 6 * 129140163i64 + 6);
    // but routes that materialise 3^c records refuse politely
    assert_eq!(run(&["jprofile", "--c", "17"]).status.code(), Some(2));
    assert_eq!(
        run(&["invariants", "--c", "17", "--format", "dot"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_c4_stays_in_budget() {
    let table = sample_table();
    let start = std::time::Instant::now();
    let out = run(&["verify", "--c", "4", "--table", table.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "verify --c 4 took {elapsed:?}");
}
