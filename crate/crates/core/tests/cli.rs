//! Black-box tests for the crystarr binary: exit codes, JSON shapes,
//! and file input handling.

use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output};

fn crystarr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crystarr"))
        .args(args)
        .output()
        .expect("spawn crystarr")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_passes_on_weyl_input() {
    let out = crystarr(&["verify", "catalog:A2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("axiom (I): pass"));
    assert!(text.contains("axiom (A): pass"));
}

#[test]
fn verify_fails_with_witnesses_on_negative_input() {
    let out = crystarr(&["verify", "--json", "catalog:bad_2_1"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["passed"], false);
    assert_eq!(v["crystallographic"]["passed"], false);
    assert_eq!(v["additive"]["passed"], false);
    let witnesses = v["crystallographic"]["witnesses"].as_array().unwrap();
    assert!(!witnesses.is_empty());
    let has_half = witnesses.iter().any(|w| {
        w["coefficients"]
            .as_array()
            .map(|cs| cs.iter().any(|c| c == "1/2" || c == "-1/2"))
            .unwrap_or(false)
    });
    assert!(has_half, "expected a denominator-2 coefficient: {v}");
}

#[test]
fn non_simplicial_input_is_an_error() {
    let out = crystarr(&["verify", "catalog:nonsimplicial3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error:"), "stderr: {err}");
    assert!(err.contains("simplicial"), "stderr: {err}");
}

#[test]
fn unknown_catalog_name_is_an_error() {
    let out = crystarr(&["verify", "catalog:Z9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_is_an_error() {
    let out = crystarr(&["verify", "/no/such/file.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_json_file_is_an_error() {
    let mut file = tempfile_named("malformed.json");
    write!(file.1, "{{ not json").unwrap();
    let out = crystarr(&["verify", file.0.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn file_input_matches_catalog_input() {
    let catalog = crystarr(&["catalog", "B3"]);
    assert_eq!(catalog.status.code(), Some(0));
    let mut file = tempfile_named("b3.json");
    file.1.write_all(&catalog.stdout).unwrap();

    let from_file = crystarr(&["chambers", file.0.to_str().unwrap()]);
    let from_catalog = crystarr(&["chambers", "catalog:B3"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(from_file.stdout, from_catalog.stdout);
    let v = stdout_json(&from_file);
    assert_eq!(v["n_chambers"], 48);
}

#[test]
fn scheme_reports_all_checks_verified() {
    let out = crystarr(&["scheme", "catalog:G2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["n_objects"], 12);
    let verified = v["verified"].as_object().unwrap();
    for key in [
        "M1",
        "M2",
        "C1",
        "C2",
        "R1",
        "R2",
        "R3",
        "R4",
        "connected",
        "simply_connected",
    ] {
        assert_eq!(verified[key], true, "flag {key}");
    }
}

#[test]
fn scheme_accepts_base_chamber_and_ordering() {
    let out = crystarr(&["scheme", "catalog:A2", "--chamber", "3", "--ordering", "1,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["n_objects"], 6);
}

#[test]
fn equiv_exit_codes() {
    let same = crystarr(&["equiv", "catalog:B3", "catalog:B3"]);
    assert_eq!(same.status.code(), Some(0));
    let different = crystarr(&["equiv", "catalog:B3", "catalog:C3"]);
    assert_eq!(different.status.code(), Some(1));
    let text = String::from_utf8(different.stdout).unwrap();
    assert!(text.contains("not equivalent"));
}

#[test]
fn equiv_json_carries_the_maps() {
    let out = crystarr(&["equiv", "--json", "catalog:A2", "catalog:A2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["arrangement_equivalent"], true);
    assert_eq!(v["scheme_equivalent"], true);
    assert!(v["psi"].is_array());
    assert!(v["phi1"].is_array());
}

fn tempfile_named(name: &str) -> (std::path::PathBuf, std::fs::File) {
    let dir = std::env::temp_dir().join(format!("crystarr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let file = std::fs::File::create(&path).unwrap();
    (path, file)
}
