use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_biset-kit"));
    c.env_remove("BISETKIT_GROUPS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("biset-kit-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn idempotents_of_c2() {
    let out = run(&["idempotents", "C2"]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    assert_eq!(
        j[0]["element"]["terms"],
        json!([{"stab_members": [0], "coeff": "1/2"}])
    );
    assert_eq!(
        j[1]["element"]["terms"],
        json!([{"stab_members": [0], "coeff": "-1/2"}, {"stab_members": [0, 1], "coeff": "1"}])
    );
}

#[test]
fn decompose_shifted_c2() {
    let out = run(&["decompose", "--functor", "burnside_shift:C2", "--groups", "1,C2"]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    let dims = |j: &Value, i: usize| -> Vec<u64> {
        j["groups"][i]["blocks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|b| b["dim"].as_u64().unwrap())
            .collect()
    };
    assert_eq!(dims(&j, 0), vec![1, 1]);
    assert_eq!(dims(&j, 1), vec![2, 3]);
    assert_eq!(j["verdict"], json!(true));

    let out = run(&["decompose", "--functor", "block:C2:1", "--groups", "1,C2"]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    assert_eq!(dims(&j, 0), vec![1]);
    assert_eq!(dims(&j, 1), vec![3]);
    assert_eq!(run(&["decompose", "--functor", "block:C2:7", "--groups", "1"]).status.code(), Some(2));
}

#[test]
fn verify_axioms_small_family() {
    let out = run(&["verify", "axioms", "--family", "1,C2,C3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["marks", "Q8"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--cap-lattice", "4", "marks", "S3"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["--family", "C2", "verify", "center"]).status.code(), Some(2));
}

#[test]
fn group_file_and_parse_errors() {
    let good = scratch("groups.txt", "# test groups\nD8 = perm_group(4; (0 1 2 3); (0 2))\n");
    let out = bin().env("BISETKIT_GROUPS", &good).args(["group", "show", "D8"]).output().unwrap();
    assert!(out.status.success());
    let j = stdout_json(&out);
    assert_eq!(j["order"], json!(8));
    assert_eq!(j["subgroups"], json!(10));
    assert_eq!(j["classes"].as_array().unwrap().len(), 8);

    let bad = scratch("bad.txt", "D8 = perm_group(4; (0 1 2 3); (0 9))\n");
    let out = bin().env("BISETKIT_GROUPS", &bad).args(["group", "list"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 1, column 31"), "{err}");
}

#[test]
fn compose_output_reparses() {
    let spec = json!({
        "beta": {"left": "C2", "right": "C2", "terms": [{"stab_members": [0], "coeff": "1"}]},
        "alpha": {"left": "C2", "right": "1", "terms": [{"stab_members": [0, 1], "coeff": "3/2"}]},
    });
    let p = scratch("compose.json", &spec.to_string());
    let out = run(&["compose", p.to_str().unwrap()]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    assert_eq!(j["engines_agree"], json!(true));
    let result: bisetkit::bisets::BisetJson = serde_json::from_value(j["result"].clone()).unwrap();
    let c2 = bisetkit::groups::cyclic(2);
    let one = bisetkit::groups::FiniteGroup::trivial();
    let back = bisetkit::bisets::BisetElement::from_json(&c2, &one, &result).unwrap();
    assert_eq!(back.to_json(), result);
}

#[test]
fn center_check_candidates() {
    let good = json!({"functor": "burnside", "iota": {"group": "C2", "terms": [{"stab_members": [0], "coeff": "1"}]}});
    let p = scratch("iota.json", &good.to_string());
    let out = run(&["--family", "1,C2", "center-check", p.to_str().unwrap()]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    assert_eq!(j["verdict"], json!(true));
    assert_eq!(j["family"], json!(["1", "C2"]));

    // the identity family written out, then with the C2 component zeroed
    let identity = |c2_terms: Value| {
        json!({
            "shift": "1",
            "components": [
                {"group": "1", "terms": [{"stab_members": [0], "coeff": "1"}]},
                {"group": "C2", "terms": c2_terms},
            ]
        })
    };
    let p = scratch("identity.json", &identity(json!([{"stab_members": [0, 3], "coeff": "1"}])).to_string());
    assert!(run(&["--family", "1,C2", "center-check", p.to_str().unwrap()]).status.success());
    let p = scratch("zeroed.json", &identity(json!([])).to_string());
    let out = run(&["--family", "1,C2", "center-check", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["verdict"], json!(false));
}

#[test]
fn table_output() {
    let out = run(&["--format", "table", "marks", "S3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next().unwrap(), "6\t3\t2\t1");
}
