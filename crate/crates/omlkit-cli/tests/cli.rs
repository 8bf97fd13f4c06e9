//! End-to-end CLI behavior: exit-code contract, byte determinism, and
//! JSON report conformance to the shipped schemas.

use std::path::PathBuf;
use std::process::{Command, Output};

fn repo_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join(rel)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omlkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn schema(rel: &str) -> jsonschema::Validator {
    let text = std::fs::read_to_string(repo_path(rel)).expect("schema file");
    let value: serde_json::Value = serde_json::from_str(&text).expect("schema json");
    jsonschema::validator_for(&value).expect("valid schema")
}

#[test]
fn exit_codes_follow_the_contract() {
    // 0: success / holds / SAT
    assert_eq!(run(&["check", "mo2"]).status.code(), Some(0));
    assert_eq!(run(&["global", "mo2"]).status.code(), Some(0));
    assert_eq!(run(&["square", "mo2", "a1"]).status.code(), Some(0));
    assert_eq!(run(&["mks", "mo3"]).status.code(), Some(0));

    // 1: falsified / UNSAT
    assert_eq!(run(&["check", "o6"]).status.code(), Some(1));
    let parity = repo_path("fixtures/parity18.greechie");
    assert_eq!(
        run(&["global", parity.to_str().unwrap()]).status.code(),
        Some(1)
    );

    // 2: input errors
    assert_eq!(run(&["check", "zzz"]).status.code(), Some(2));
    assert_eq!(run(&["diamond", "mo2", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["center", "o6"]).status.code(), Some(2));
    assert_eq!(
        run(&["square", "mo2", "a1", "--block", "9"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "global",
            repo_path("fixtures/rays2d.rays").to_str().unwrap()
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["check", "mo2xmo2"],
        vec!["center", "2^2xmo3"],
        vec!["blocks", "mo2xmo2"],
        vec!["square", "2^1xmo2", "(1,a1)"],
        vec!["export-dot", "mo3"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn parallel_flag_changes_nothing() {
    for args in [vec!["check", "mo2xmo2"], vec!["center", "mo2xmo2"]] {
        let seq = run(&args);
        let mut par_args = args.clone();
        par_args.push("--parallel");
        let par = run(&par_args);
        assert_eq!(seq.stdout, par.stdout, "{args:?}");
        assert_eq!(seq.status.code(), par.status.code());
    }
}

#[test]
fn mks_json_validates_against_schema() {
    let validator = schema("schemas/mks_verdict.schema.json");
    for input in ["mo2", "2^3", "mo2xmo2"] {
        let out = run(&["mks", input]);
        let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
        assert!(validator.is_valid(&value), "{input}: {value}");
    }
}

#[test]
fn square_json_validates_against_schema() {
    let validator = schema("schemas/square_report.schema.json");
    // Non-central, central (collapsed), and product propositions.
    for (input, element) in [
        ("mo2", "a1"),
        ("2^2", "10"),
        ("2^1xmo2", "(1,a1)"),
        ("mo2xmo2", "(a1,a2)"),
    ] {
        let out = run(&["square", input, element, "--json"]);
        let text = stdout(&out);
        let value: serde_json::Value = serde_json::from_str(&text).expect("json");
        if let Err(err) = validator.validate(&value) {
            panic!("{input} {element}: {err}");
        }
    }
}

#[test]
fn square_json_flag_emits_only_json() {
    let with_diagram = stdout(&run(&["square", "mo2", "a1"]));
    let json_only = stdout(&run(&["square", "mo2", "a1", "--json"]));
    assert!(with_diagram.contains("subcontraries ———"));
    serde_json::from_str::<serde_json::Value>(&json_only).expect("pure json");
    assert!(with_diagram.starts_with(&json_only));
}

#[test]
fn square_collapsed_report_flags_central_proposition() {
    let out = run(&["square", "2^2", "10", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["collapsed"], serde_json::Value::Bool(true));
    assert_eq!(
        value["collapse"]["diamond_p_equals_p"],
        serde_json::Value::Bool(true)
    );
}

#[test]
fn diamond_accepts_ascii_ortho_alias() {
    let unicode = run(&["diamond", "mo2", "¬a1"]);
    let ascii = run(&["diamond", "mo2", "~a1"]);
    assert_eq!(unicode.status.code(), Some(0));
    assert_eq!(unicode.stdout, ascii.stdout);
    assert!(stdout(&unicode).contains("◇¬a1 = 1"));
}

#[test]
fn from_rays_warns_about_orphans_on_stderr() {
    let doc = "omlkit-rays v1\ndim: 3\ne1: 1 0 0\ne2: 0 1 0\ne3: 0 0 1\nlonely: 1 1 1\n";
    let dir = std::env::temp_dir().join("omlkit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("orphan.rays");
    std::fs::write(&path, doc).unwrap();
    let out = run(&["from-rays", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("lonely"), "stderr: {err}");
    let body = stdout(&out);
    assert!(body.contains("omlkit-greechie v1"));
    assert!(
        body.contains("lonely"),
        "orphans are retained in the atom list"
    );
}

#[test]
fn export_dot_handles_all_three_inputs() {
    let lat = run(&["export-dot", "mo2"]);
    assert!(stdout(&lat).starts_with("graph hasse {"));
    let greechie = run(&[
        "export-dot",
        repo_path("fixtures/parity18.greechie").to_str().unwrap(),
    ]);
    assert!(stdout(&greechie).starts_with("graph greechie {"));
    assert_eq!(stdout(&greechie).matches(" -- ").count(), 9 * 6);
    let rays = run(&[
        "export-dot",
        repo_path("fixtures/rays2d.rays").to_str().unwrap(),
    ]);
    assert!(stdout(&rays).starts_with("graph greechie {"));
}

#[test]
fn global_prints_parity_certificate_on_unsat() {
    let out = run(&[
        "global",
        repo_path("fixtures/parity13.greechie").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let body = stdout(&out);
    assert!(body.contains("UNSAT"));
    assert!(body.contains("parity certificate"));
    assert!(body.contains("13 contexts"));
}

#[test]
fn check_reports_one_line_per_law() {
    let body = stdout(&run(&["check", "2^3"]));
    assert_eq!(body.lines().count(), 11);
    assert!(body.lines().all(|l| l.starts_with("law ")));
}
