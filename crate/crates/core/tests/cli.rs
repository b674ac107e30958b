//! End-to-end checks of the bdml binary: exit codes and round-trips of the
//! serialized outputs.

use std::io::Write;
use std::process::{Command, Output};

use bd_modal::semantics::parse_model;

fn bdml(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bdml")).args(args).output().expect("bdml runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn prove_exit_codes() {
    let out = bdml(&["prove", "Ip & Iq |- I(p | q)"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");

    let out = bdml(&["prove", "[*](p & q) |- [*]p"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("refuted"));

    let out = bdml(&["prove", "[]p |- p"]);
    assert_eq!(out.status.code(), Some(2));

    let out = bdml(&["prove", "p & | q |- p"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn refutation_model_reparses_and_refutes() {
    let out = bdml(&["prove", "[*](p & q) |- [*]p", "--emit-model"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let model_text: String =
        text.lines().skip(1).map(|l| format!("{l}\n")).collect();
    let model = parse_model(&model_text).expect("emitted model parses");
    let seq = bd_modal::formula::parse_sequent("[*](p & q) |- [*]p").unwrap();
    assert!(!bd_modal::semantics::holds_sequent_at(&model, 0, &seq).unwrap());
}

#[test]
fn check_reports_value_and_supports() {
    let dir = std::env::temp_dir().join(format!("bdml-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("two.model");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "worlds: w0 w1").unwrap();
    writeln!(f, "edges: w0->w0 w0->w1").unwrap();
    writeln!(f, "val p: w0=T w1=B").unwrap();
    drop(f);
    let arg = format!("@{}", path.display());

    let out = bdml(&["check", &arg, "w0", "[]p"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("B"));

    let out = bdml(&["check", &arg, "w0", "[*]p"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("F"));

    let out = bdml(&["check", &arg, "w9", "p"]);
    assert_eq!(out.status.code(), Some(2));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn search_exit_codes_and_model_roundtrip() {
    let out = bdml(&["search", "[*]p |- [*][*]p", "--max-worlds", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let model_text: String = text.lines().skip(1).map(|l| format!("{l}\n")).collect();
    let model = parse_model(&model_text).expect("emitted model parses");
    let seq = bd_modal::formula::parse_sequent("[*]p |- [*][*]p").unwrap();
    let w: usize = text.lines().next().unwrap().trim_start_matches("countermodel at w")
        .trim_end_matches(':').parse().unwrap();
    assert!(!bd_modal::semantics::holds_sequent_at(&model, w, &seq).unwrap());

    let out = bdml(&["search", "Ip |- p", "--max-worlds", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("none up to budget"));

    // Overflowing the valuation cap is a budget error, not a verdict.
    let out = bdml(&["search", "Ip |- p", "--max-worlds", "3", "--model-cap", "10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn frame_restricted_search_is_a_decision_procedure() {
    let dir = std::env::temp_dir().join(format!("bdml-frame-{}", std::process::id()));
    let out = bdml(&["fixtures", "single-cluster", "--dir", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let frame = format!("@{}/single-cluster.model", dir.display());

    let out = bdml(&["search", "[*]p |- p", "--frame", &frame]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("valid on the given frame"));

    let out = bdml(&["search", "p |- [*]~p", "--frame", &frame]);
    assert_eq!(out.status.code(), Some(1));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn experiment_exit_codes() {
    let out = bdml(&["experiment", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));

    let out = bdml(&["experiment", "duality", "--trials", "300", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("duality: PASS"));

    let out = bdml(&["experiment", "figures", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(parsed[0]["experiment"], "figures");
    assert_eq!(parsed[0]["failures"].as_array().map(Vec::len), Some(0));
}

#[test]
fn unicode_operators_accepted() {
    let out = bdml(&["prove", "■p ∧ ¬p ⊢ ■p"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn fixtures_print_and_reparse() {
    let out = bdml(&["fixtures"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for chunk in text.split("# ").skip(1) {
        let body: String = chunk
            .lines()
            .skip(1)
            .filter(|l| !l.trim().is_empty())
            .map(|l| format!("{l}\n"))
            .collect();
        parse_model(&body).unwrap_or_else(|e| panic!("fixture block failed to reparse: {e}\n{chunk}"));
    }
}
