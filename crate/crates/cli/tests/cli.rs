use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn locoh() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_locoh"));
    for var in ["LOCOH_BOX", "LOCOH_BOX_CAP", "LOCOH_CHAR", "LOCOH_THREADS", "LOCOH_TIMING"] {
        cmd.env_remove(var);
    }
    cmd
}

fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn problem(name: &str) -> PathBuf {
    fixtures_dir().join("problems").join(format!("{name}.json"))
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {:?}", out))
}

fn run(args: &[&str], file: &Path) -> (Value, i32) {
    let out = locoh().args(args).arg(file).output().unwrap();
    (report(&out), out.status.code().unwrap())
}

fn fixture(name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(fixtures_dir().join(format!("{name}.json"))).unwrap()).unwrap()
}

fn frozen<'a>(fx: &'a Value, command: &str, criterion: Option<&str>) -> &'a Value {
    fx["runs"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["command"] == command && r["criterion"].as_str() == criterion)
        .map(|r| &r["results"])
        .unwrap_or_else(|| panic!("no {command} run"))
}

#[test]
fn curve_top_local_cohomology_is_a_single_monomial() {
    let (r, code) = run(&["hilbert"], &problem("curve"));
    assert_eq!(code, 0);
    assert_eq!(r["schema"], 1);
    let h0 = &r["results"]["series"][0];
    assert_eq!(h0["terms"], serde_json::json!([{"coeff": 1, "base": [2, 3], "directions": []}]));
    assert_eq!(h0["rational"], serde_json::json!({"num": [[1, [2, 3]]], "den": []}));
    assert_eq!(r["results"]["series"][2]["terms"], serde_json::json!([]));
    assert!(r["results"]["series"].as_array().unwrap().iter().all(|s| s["exact"] == true));
}

#[test]
fn segre_quotient_is_not_cohen_macaulay() {
    let (r, code) = run(&["cm"], &problem("segre"));
    assert_eq!(code, 0);
    assert_eq!(r["results"]["cohen_macaulay"], false);
}

#[test]
fn curve_has_five_faces() {
    let (r, _) = run(&["faces"], &problem("curve"));
    let mut dims: Vec<i64> = r["results"]["faces"].as_array().unwrap().iter().map(|f| f["dim"].as_i64().unwrap()).collect();
    dims.sort();
    assert_eq!(dims, vec![-1, 0, 1, 1, 2]);
}

#[test]
fn frozen_fixtures_hold_the_worked_example_values() {
    let curve = fixture("curve");
    let pairs = frozen(&curve, "pairs", None);
    let apex = pairs["localizations"].as_array().unwrap().iter().find(|l| l["face_generators"] == serde_json::json!([]));
    assert_eq!(apex.unwrap()["pairs"].as_array().unwrap().len(), 5);
    let grains = frozen(&curve, "grains", None);
    assert_eq!(grains["grains"].as_array().unwrap().len(), 10);
    assert_eq!(grains["chaffs"].as_array().unwrap().len(), 6);

    let segre = fixture("segre");
    let h = &frozen(&segre, "hilbert", None)["series"];
    assert_eq!(h[0]["rational"]["num"], serde_json::json!([[1, [2, 2, 2]]]));
    assert_eq!(h[1]["rational"]["num"], serde_json::json!([[1, [1, 0, 0]]]));

    let s3 = fixture("nonnormal-3d");
    let holes = &frozen(&s3, "holes", None)["packets"];
    assert_eq!(holes, &serde_json::json!([{"base": [1, 0, -1], "monoid_gens": [[1, 0, -2]]}]));
    assert_eq!(frozen(&s3, "trung-hoa", None)["cohen_macaulay"], false);
    let void = frozen(&s3, "cm", Some("void-grains"));
    assert_eq!(void["cohen_macaulay"], false);
    assert_ne!(void["witness"]["cohomology"][2], 0);

    let p4 = fixture("polytopal-4d");
    let holes = frozen(&p4, "holes", None)["packets"].as_array().unwrap().clone();
    assert_eq!(holes.len(), 1);
    assert_eq!(holes[0]["base"], serde_json::json!([2, 1, 2, 4]));
    assert_eq!(frozen(&p4, "trung-hoa", None)["cohen_macaulay"], true);
    assert_eq!(frozen(&p4, "cm", Some("void-grains"))["cohen_macaulay"], true);
}

#[test]
fn bundled_examples_verify_in_characteristic_zero_and_two() {
    for extra in [&[][..], &["--char", "2"][..]] {
        let out = locoh().args(extra).arg("verify-examples").output().unwrap();
        let r = report(&out);
        assert!(out.status.success(), "{r}");
        assert_eq!(r["results"]["passed"], true);
        assert_eq!(r["results"]["fixtures"].as_array().unwrap().len(), 6);
    }
}

#[test]
fn perturbed_fixture_fails_by_name() {
    let dir = tempfile::tempdir().unwrap();
    for entry in std::fs::read_dir(fixtures_dir()).unwrap() {
        let p = entry.unwrap().path();
        if p.extension().is_some_and(|x| x == "json") {
            std::fs::copy(&p, dir.path().join(p.file_name().unwrap())).unwrap();
        }
    }
    let mut fx = fixture("k-n2");
    let cm = fx["runs"].as_array_mut().unwrap().iter_mut().find(|r| r["command"] == "cm" && r["criterion"].is_null());
    cm.unwrap()["results"]["cohen_macaulay"] = Value::Bool(false);
    std::fs::write(dir.path().join("k-n2.json"), serde_json::to_string(&fx).unwrap()).unwrap();

    let out = locoh().args(["verify-examples", "--fixtures"]).arg(dir.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    let failed: Vec<&str> = r["results"]["fixtures"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|f| f["passed"] == false)
        .map(|f| f["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, vec!["k-n2"]);
    let bad = r["results"]["fixtures"].as_array().unwrap().iter().find(|f| f["name"] == "k-n2").unwrap();
    assert_eq!(bad["mismatches"][0]["path"], "/cohen_macaulay");
    assert!(String::from_utf8_lossy(&out.stderr).contains("k-n2"));
}

#[test]
fn malformed_input_exits_with_a_validation_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("not-json.json", "{\"A\": [[1, 2]"),
        ("ragged.json", r#"{"A": [[1, 1], [0]]}"#),
        ("outside.json", r#"{"A": [[1,1,1,1],[0,1,3,4]], "ideal": [[1,2]]}"#),
        ("not-pointed.json", r#"{"A": [[1, -1]]}"#),
    ];
    for (name, text) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        let (r, code) = run(&["pairs"], &path);
        assert_eq!(code, 2, "{name}: {r}");
        assert_eq!(r["error"]["kind"], "validation", "{name}");
        assert!(r.get("results").is_none());
    }
    let (r, code) = run(&["hilbert"], &dir.path().join("missing.json"));
    assert_eq!((code, &r["error"]["kind"]), (2, &Value::from("validation")));
}

#[test]
fn capped_box_exits_with_box_insufficient() {
    let (r, code) = run(&["--box", "1", "--box-cap", "1", "grains"], &problem("curve"));
    assert_eq!(code, 3);
    assert_eq!(r["error"]["kind"], "box-insufficient");
    assert_eq!(r["error"]["cap"], 1);
}

#[test]
fn environment_overrides_mirror_flags() {
    let out = locoh().env("LOCOH_CHAR", "2").arg("cm").arg(problem("k-n")).output().unwrap();
    assert_eq!(report(&out)["settings"]["char"], 2);
    let out = locoh().env("LOCOH_CHAR", "4").arg("cm").arg(problem("k-n")).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = locoh().env("LOCOH_BOX", "6").arg("grains").arg(problem("k-n")).output().unwrap();
    let r = report(&out);
    assert_eq!(r["settings"]["box"], 6);
    assert_eq!(r["results"]["half_width"], 6);
    let out = locoh().env("LOCOH_BOX", "6").args(["--box", "5", "grains"]).arg(problem("k-n")).output().unwrap();
    assert_eq!(report(&out)["settings"]["box"], 5);
}

#[test]
fn reports_are_byte_identical_across_runs_and_thread_counts() {
    for command in ["pairs", "hilbert", "cohomology"] {
        let outputs: Vec<Vec<u8>> = ["1", "4", "4"]
            .iter()
            .map(|t| locoh().args(["--threads", t, command]).arg(problem("segre")).output().unwrap().stdout)
            .collect();
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{command}");
    }
}

#[test]
fn timing_is_reported_only_on_request() {
    let (r, _) = run(&["faces"], &problem("k-n"));
    assert!(r.get("timing_ms").is_none());
    let (r, _) = run(&["--timing", "faces"], &problem("k-n"));
    assert!(r["timing_ms"].is_u64());
}

#[test]
fn ring_only_criteria_reject_quotients() {
    let (r, code) = run(&["trung-hoa"], &problem("curve"));
    assert_eq!(code, 2, "{r}");
    let (_, code) = run(&["cm", "--criterion", "void-grains"], &problem("segre"));
    assert_eq!(code, 2);
}
