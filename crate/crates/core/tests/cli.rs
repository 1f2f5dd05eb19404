//! End-to-end runs of the `phopf` binary on the fixture files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("phopf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn phopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phopf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn check_e1_passes() {
    let o = phopf(&["check", &fixture("e1"), "--as", "partial-action"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("== e1 [Q]: PASS"));
}

#[test]
fn check_broken_e1_fails_with_witness() {
    let o = phopf(&["check", &fixture("broken_e1"), "--as", "partial-action"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("[FAIL] PLA3"), "{out}");
    assert!(out.contains("witness (δ_g,δ_g,χ2)"), "{out}");

    let o = phopf(&["check", &fixture("broken_e1"), "--as", "partial-action", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let pla3 = &v["reports"][0]["axioms"][2];
    assert_eq!(pla3["name"], "PLA3");
    assert_eq!(pla3["witnesses"][0]["labels"], serde_json::json!(["δ_g", "δ_g", "χ2"]));
}

#[test]
fn check_broken_e2_fails_prhca1_first() {
    let o = phopf(&["check", &fixture("broken_e2")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("[FAIL] PRHCA1"), "{out}");
    assert!(out.contains("witness (χ2,χ2)"), "{out}");
}

#[test]
fn check_kz2_as_hopf_passes() {
    let o = phopf(&["check", &fixture("kz2"), "--as", "hopf"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn smash_algebroid_build_rechecks_clean() {
    let out = scratch("e1_algebroid.json");
    let o = phopf(&["build", &fixture("e1"), "--smash-algebroid", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "e1.smash-algebroid: hopf-algebroid, dim 3 over a base of dim 2");
    let o = phopf(&["check", out.to_str().unwrap(), "--as", "hopf-algebroid"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn groupoid_build_has_three_arrows() {
    let o = phopf(&["build", &fixture("e1set"), "--groupoid"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("groupoid, 3 arrows on 2 objects"), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["objects"]["e1set.groupoid"]["names"].as_array().unwrap().len(), 3);
}

#[test]
fn matrix_algebra_smash_algebroid_is_refused() {
    let o = phopf(&["build", &fixture("matrixalg"), "--smash-algebroid"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("base algebra not commutative"), "{}", stderr(&o));
}

#[test]
fn every_build_output_rechecks_clean() {
    let cases = [
        ("e2", "--partial-split-algebroid"),
        ("global_swap", "--split-algebroid"),
        ("e1set", "--groupoid-algebroid"),
        ("e1set", "--kg-action"),
        ("e1set", "--dual-coaction"),
        ("e1set", "--module-coalgebra"),
        ("e1set", "--comodule-coalgebra"),
        ("e3_star", "--cosmash"),
        ("e3", "--cring"),
    ];
    for (i, (src, flag)) in cases.iter().enumerate() {
        let out = scratch(&format!("built{i}.json"));
        let o = phopf(&["build", &fixture(src), flag, "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{src} {flag}: {}", stderr(&o));
        let o = phopf(&["report", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{src} {flag}: {}", stdout(&o));
    }
    let o = phopf(&["build", &fixture("e2"), "--split-algebroid"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn transfers_run_through_the_cli() {
    let out = scratch("transfer.json");
    let args =
        ["build", &fixture("dualities"), "--coaction-from-action", "--hopf", "e2.hopf", "--pairing", "hopf-pairing"];
    let o = phopf(&[&args[..], &["--out", out.to_str().unwrap()]].concat());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = phopf(&["check", out.to_str().unwrap(), "--as", "partial-coaction"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn pairings_run_through_the_cli() {
    let o = phopf(&["pair", &fixture("dualities"), "--as", "skew", "--pairing", "hopf-pairing"]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    let o = phopf(&[
        "pair",
        &fixture("dualities"),
        "--as",
        "smash-cosmash",
        "--hopf-pairing",
        "hopf-pairing",
        "--pairing",
        "structure",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).contains("dim A#H = 3"));
}

#[test]
fn invalid_inputs_exit_3() {
    let bad = scratch("zero_denominator.json");
    std::fs::write(
        &bad,
        r#"{"schema":"phopf-fixture/1","field":"Q","objects":{"a":{"kind":"algebra","names":["1"],"mult":[[0,0,0,"1/0"]],"unit":[[0,"1"]]}}}"#,
    )
    .unwrap();
    let o = phopf(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("schema error at objects.a.mult"), "{}", stderr(&o));

    let missing = scratch("missing_group.json");
    std::fs::write(
        &missing,
        r#"{"schema":"phopf-fixture/1","field":"Q","objects":{"s":{"kind":"set-partial-action","group":"z2","points":1,"maps":[[0],[0]]}}}"#,
    )
    .unwrap();
    let o = phopf(&["check", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("unresolved reference"), "{}", stderr(&o));

    let o = phopf(&["check", "/nonexistent/fixture.json"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn output_is_independent_of_thread_count() {
    let one = phopf(&["--threads", "1", "check", &fixture("broken_e1"), "--format", "json"]);
    let four = phopf(&["--threads", "4", "check", &fixture("broken_e1"), "--format", "json"]);
    assert_eq!(one.status.code(), Some(1));
    assert_eq!(one.status.code(), four.status.code());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn field_flag_reinterprets_the_fixture() {
    let o = phopf(&["check", &fixture("e1"), "--field", "Fp:3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[Fp:3]: PASS"));
    let o = phopf(&["check", &fixture("e1"), "--field", "Fp:4"]);
    assert_eq!(o.status.code(), Some(3));
}
