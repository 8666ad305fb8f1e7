use std::process::{Command, Output};

fn sbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sbraid")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = sbraid(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn order_of_a0() {
    let o = sbraid(&["order", "--n", "5", "--expr", "a0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "projective order 5; order in B_5(S²): 10");
}

#[test]
fn ambiguous_order_is_flagged() {
    let o = sbraid(&["order", "--n", "6", "--expr", "a1"]);
    assert!(stdout(&o).contains("5 or 10 (central bit undetermined)"));
    let v = json(&["order", "--n", "6", "--expr", "a1", "--format", "json"]);
    assert_eq!(v["order"]["kind"], "ambiguous_central");
}

#[test]
fn gamma_cubed_is_full_twist() {
    for lhs in ["gamma^3", "delta^2"] {
        let o = sbraid(&["eq", "--n", "6", "--lhs", lhs, "--rhs", "D2"]);
        assert_eq!(stdout(&o).trim(), "projectively equal: true; xi match: true");
    }
}

#[test]
fn classify_six() {
    let v = json(&["classify", "--n", "6"]);
    assert_eq!(v["maximal"], serde_json::json!(["Z10", "Dic24", "O1"]));
    let v = json(&["classify", "--n", "18", "--descriptor", "Q16@O1"]);
    assert_eq!(v["classes"][0]["contained_in"], serde_json::json!(["G2"]));
    assert!(v["classes"][0].get("case").is_some());
}

#[test]
fn word_show() {
    let v = json(&["word", "--n", "5", "--expr", "a1^2", "--show", "xi,pi", "--format", "json"]);
    assert_eq!(v["xi"]["modulus"], 8);
    assert_eq!(v["pi"]["cycles"], "(1,3)(2,4)");
}

#[test]
fn parse_error_has_caret_and_exit_2() {
    let o = sbraid(&["word", "--n", "4", "--expr", "s1 ** s2"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    let lines: Vec<_> = err.lines().collect();
    assert_eq!(lines[1], "s1 ** s2");
    assert_eq!(lines[2].find('^'), Some(4));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(sbraid(&["frob"]).status.code(), Some(2));
    assert_eq!(sbraid(&["order", "--expr", "a0"]).status.code(), Some(2));
    assert_eq!(sbraid(&["realize", "--poly", "cube", "--n", "7"]).status.code(), Some(2));
    assert_eq!(sbraid(&["verify", "--checks", "NOPE"]).status.code(), Some(2));
}

#[test]
fn group_models_agree() {
    let q = json(&["group", "--name", "O1", "--model", "quaternion"]);
    let c = json(&["group", "--name", "O1", "--model", "coset"]);
    assert_eq!(q["order"], 48);
    assert_eq!(q["census"], c["census"]);
    assert_eq!(q["structure"]["unique_involution"], true);
    assert_eq!(q["coordinates"].as_array().unwrap().len(), 48);
}

#[test]
fn lattice_file() {
    let dir = std::env::temp_dir().join(format!("sbraid-lattice-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t1.dot");
    json(&["group", "--name", "T1", "--lattice", path.to_str().unwrap()]);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
}

#[test]
fn realize_json() {
    let v = json(&["realize", "--poly", "cube", "--n", "12"]);
    assert_eq!(v["polyhedron"], "cube");
    assert_eq!(v["points"].as_array().unwrap().len(), 12);
    let v = json(&["realize", "--poly", "equator", "--n", "7", "--poles", "2"]);
    assert_eq!(v["points"].as_array().unwrap().len(), 7);
}

#[test]
fn verify_report() {
    let dir = std::env::temp_dir().join(format!("sbraid-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = sbraid(&["verify", "--checks", "MAXIMAL", "--n-range", "3..8", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 6);
    assert_eq!(v["summary"]["pass"], 6);
    for r in v["reports"].as_array().unwrap() {
        for k in ["check_id", "n", "status", "facts_verified", "details", "case"] {
            assert!(r.get(k).is_some());
        }
    }
}

#[test]
fn closure_cap_env_makes_checks_fail() {
    let o = Command::new(env!("CARGO_BIN_EXE_sbraid"))
        .args(["verify", "--checks", "REALIZE-T1-B6", "--n-range", "6..6"])
        .env("SBRAID_MAX_CLOSURE", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("REALIZE-T1-B6 n=6: fail"));
}
