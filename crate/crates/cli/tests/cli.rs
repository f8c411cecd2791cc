use std::fs;
use std::process::Command;

use serde_json::{json, Value};

fn aspec(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_aspec"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn aspec_json(args: &[&str]) -> (i32, Value) {
    let (code, text) = aspec(args);
    (code, serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}")))
}

#[test]
fn simples_of_ut2() {
    let (code, v) = aspec_json(&["simples", "--algebra", "FIX-UT2"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 2);
    let dims: Vec<&Value> = v["modules"].as_array().unwrap().iter().map(|m| &m["dim"]).collect();
    assert_eq!(dims, [&json!(1), &json!(1)]);
}

#[test]
fn hull_of_m2_has_no_generators() {
    let (code, v) = aspec_json(&["hull", "--algebra", "FIX-M2", "--modules", "all", "--order", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["generators"], json!([]));
    assert_eq!(v["relations"], json!([]));
}

#[test]
fn broken_algebra_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    // UT2 with e12 e22 = e11 instead of e12
    let broken = json!({
        "dim": 3,
        "basis": ["e11", "e12", "e22"],
        "unit": ["1", "0", "1"],
        "table": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 2, 0, "1"], [2, 2, 2, "1"]],
    });
    fs::write(&path, broken.to_string()).unwrap();
    let (code, v) = aspec_json(&["validate", "--algebra", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "NotAssociative");
}

#[test]
fn unreadable_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("garbage.json");
    fs::write(&path, "{ not json").unwrap();
    assert_eq!(aspec(&["validate", "--algebra", path.to_str().unwrap()]).0, 2);
    assert_eq!(aspec(&["validate", "--algebra", "no-such-fixture"]).0, 2);
    assert_eq!(aspec(&["frobnicate"]).0, 2);
}

#[test]
fn catalog_fixtures_validate() {
    for name in aspec_core::fixtures::CATALOG_NAMES {
        let (code, v) = aspec_json(&["validate", "--algebra", name]);
        assert_eq!(code, 0, "{name}");
        assert_eq!(v["valid"], true);
    }
}

#[test]
fn hull_file_feeds_completion_and_localring() {
    let dir = tempfile::tempdir().unwrap();
    let hull = dir.path().join("hull.json");
    let hull_path = hull.to_str().unwrap();
    let (code, _) = aspec(&["hull", "--algebra", "FIX-UT2", "--modules", "S1,S2", "--order", "2", "--out", hull_path]);
    assert_eq!(code, 0);
    let written: Value = serde_json::from_str(&fs::read_to_string(&hull).unwrap()).unwrap();
    assert_eq!(written["generators"][0]["label"], "t12_1");
    assert_eq!(written["degree_dims"], json!([2, 1, 0]));

    let (code, c) = aspec_json(&["completion", "--hull", hull_path]);
    assert_eq!(code, 0);
    assert_eq!(c["dim"], 3);
    assert_eq!(c["rho_bijective"], true);
    let (code, l) = aspec_json(&["localring", "--hull", hull_path]);
    assert_eq!(code, 0);
    assert_eq!(l["dim"], 3);
}

#[test]
fn ext_table_direction() {
    let (_, v) = aspec_json(&["ext", "--algebra", "FIX-UT2"]);
    assert_eq!(v["table"], json!([[0, 1], [0, 0]]));
}

#[test]
fn tangent_of_dual() {
    let (_, v) = aspec_json(&["tangent", "--algebra", "FIX-DUAL"]);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["algebra"]["basis"], json!(["e1", "t11_1"]));
}

#[test]
fn topology_with_custom_subbasis() {
    let (_, v) = aspec_json(&["topology", "--algebra", "FIX-UT2", "--subbasis", "e11"]);
    assert_eq!(v["opens"], json!([[], ["S1"], ["S1", "S2"]]));
    assert_eq!(v["irreducible"], true);
    let (code, _) = aspec(&["topology", "--algebra", "FIX-UT2", "--subbasis", "e33"]);
    assert_eq!(code, 2);
}

#[test]
fn sheaf_findings_and_strict() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sheaf.json");
    let out_path = out.to_str().unwrap();
    let (code, _) = aspec(&["sheaf", "--algebra", "FIX-UT2", "--order", "2", "--out", out_path]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["presheaf"]["section_dims"], json!([0, 1, 1, 3]));
    assert_eq!(v["sheaf"]["section_dims"], json!([0, 1, 1, 2]));
    assert_eq!(v["sheaf"]["axioms"]["identity_failures"], json!([]));
    assert!(!v["findings"].as_array().unwrap().is_empty());
    let (strict, _) = aspec(&["sheaf", "--algebra", "FIX-UT2", "--strict"]);
    assert_eq!(strict, 1);
    let (clean, _) = aspec(&["sheaf", "--algebra", "FIX-M2", "--strict"]);
    assert_eq!(clean, 0);
}

#[test]
fn stalk_of_both_ut2_points() {
    let (_, v) = aspec_json(&["stalk", "--algebra", "FIX-UT2", "--points", "S1,S2"]);
    assert_eq!((v["presheaf_dim"].clone(), v["sheaf_dim"].clone()), (json!(3), json!(2)));
    let (_, p) = aspec_json(&["stalk", "--algebra", "FIX-UT2", "--points", "S2", "--variant", "paper-limit"]);
    assert_eq!(p["sheaf_agrees"], true);
}

#[test]
fn localize_rejects_points_off_the_variety() {
    let (code, v) = aspec_json(&["localize", "--presentation", "parabola", "--point", "1,0", "--order", "3"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "PointNotOnVariety");
    let (code, v) = aspec_json(&["localize", "--presentation", "axes", "--point", "1,0", "--order", "3", "--degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["hausdorff_kernel"]["elements"], json!(["y", "y^2"]));
}

#[test]
fn verify_paper_is_byte_identical() {
    let (code, first) = aspec(&["verify-paper"]);
    assert_eq!(code, 0);
    let (_, second) = aspec(&["verify-paper"]);
    assert_eq!(first, second);
    let (_, text) = aspec(&["verify-paper", "--text"]);
    let v: Value = serde_json::from_str(&first).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(text.lines().count(), rows.len());
    for (line, row) in text.lines().zip(rows) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(fields[0], row["status"]);
        assert_eq!(fields[1], row["claim"]);
    }
    assert_eq!(aspec(&["verify-paper", "--strict"]).0, 1);
}
