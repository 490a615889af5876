use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn cafp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cafp"))
        .args(args)
        .output()
        .expect("spawn cafp")
}

fn cafp_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cafp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn cafp");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("wait cafp")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON document")
}

fn write_input(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

const EX33: &str = r#"{"n":2,"rows":[[0,1],[-4,0]],"seq":[1,2,1]}"#;

#[test]
fn trace_reports_golden_vectors() {
    let doc = stdout_json(&cafp_stdin(&["trace", "-"], EX33));
    assert_eq!(doc["d"], serde_json::json!([1, 4]));
    let steps = doc["trace"]["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 3);
    assert_eq!(steps[2]["c"], serde_json::json!([-3, -4]));
    assert_eq!(steps[2]["g"], serde_json::json!([-3, 8]));
    assert_eq!(doc["trace"]["e_table"][0], serde_json::json!([3, 4, 1]));
}

#[test]
fn trace_accepts_empty_sequence() {
    let doc = stdout_json(&cafp_stdin(
        &["trace", "-"],
        r#"{"n":2,"rows":[[0,1],[-4,0]],"seq":[]}"#,
    ));
    assert_eq!(doc["trace"]["steps"].as_array().unwrap().len(), 0);
}

#[test]
fn non_skew_symmetrizable_matrix_exits_3() {
    let out = cafp_stdin(&["trace", "-"], r#"{"n":2,"rows":[[0,1],[1,0]],"seq":[1]}"#);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_json_exits_2() {
    let out = cafp_stdin(&["trace", "-"], "not json");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_of_range_direction_exits_2() {
    let out = cafp_stdin(&["trace", "-"], r#"{"n":2,"rows":[[0,1],[-4,0]],"seq":[3]}"#);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fpoly_all_engines_agree_on_golden_example() {
    let doc = stdout_json(&cafp_stdin(&["fpoly", "-"], EX33));
    assert_eq!(doc["agreement"], "agree");
    let engines = doc["engines"].as_array().unwrap();
    assert_eq!(engines.len(), 4);
    for e in engines {
        assert_eq!(e["terms"].as_array().unwrap().len(), 11);
    }
    // graded-lex sorted term list with decimal-string coefficients
    let terms = engines[0]["terms"].as_array().unwrap();
    assert_eq!(terms[0]["exp"], serde_json::json!([0, 0]));
    assert_eq!(terms[0]["coef"], "1");
    assert_eq!(terms[10]["exp"], serde_json::json!([3, 4]));
    let grade = |t: &Value| -> (i64, Vec<i64>) {
        let e: Vec<i64> = t["exp"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_i64().unwrap())
            .collect();
        (e.iter().sum(), e)
    };
    for w in terms.windows(2) {
        assert!(grade(&w[0]) < grade(&w[1]));
    }
}

#[test]
fn fpoly_single_step_is_one_plus_y() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_input(&dir, "m.json", "[[0,1],[-4,0]]");
    let doc = stdout_json(&cafp(&["fpoly", "--matrix", &m, "--seq", "2", "--method", "recurrence"]));
    assert_eq!(doc["engines"][0]["text"], "1 + y2");
}

#[test]
fn fpoly_sum_honors_explicit_cap() {
    let doc = stdout_json(&cafp_stdin(
        &["fpoly", "-", "--method", "sum"],
        r#"{"n":2,"rows":[[0,1],[-4,0]],"seq":[1,2,1],"cap":[1,1]}"#,
    ));
    // the degree-(3,4) result does not fit under cap (1,1)
    assert_eq!(doc["engines"][0]["truncated"], true);
    assert!(doc["engines"][0]["terms"].as_array().unwrap().len() < 11);
}

#[test]
fn deterministic_output_and_input_echo() {
    let a = cafp_stdin(&["fpoly", "-"], EX33);
    let b = cafp_stdin(&["fpoly", "-"], EX33);
    assert_eq!(a.stdout, b.stdout);
    let doc = stdout_json(&a);
    let echoed: Value = serde_json::from_str(EX33).unwrap();
    assert_eq!(doc["input"], echoed);
}

#[test]
fn verify_passes_on_golden_example() {
    let doc = stdout_json(&cafp_stdin(&["verify", "-"], EX33));
    let v = &doc["verification"];
    assert_eq!(v["all_passed"], true);
    let names: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    for expect in ["dualities", "sign_coherence", "involution", "tilde_c", "engines"] {
        assert!(names.contains(&expect), "missing check {expect}");
    }
}

#[test]
fn verify_subset_runs_only_selected_checks() {
    let doc = stdout_json(&cafp_stdin(
        &["verify", "-", "--checks", "signcoherence,tildec"],
        EX33,
    ));
    let checks = doc["verification"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
}

#[test]
fn verify_random_batch_is_deterministic() {
    let a = cafp(&["verify", "--random", "6", "--rng-seed", "11"]);
    let b = cafp(&["verify", "--random", "6", "--rng-seed", "11"]);
    assert_eq!(a.stdout, b.stdout);
    let doc = stdout_json(&a);
    assert_eq!(doc["all_passed"], true);
    assert_eq!(doc["cases"].as_array().unwrap().len(), 6);
    // the seed is echoed on stderr for reproducibility
    assert!(String::from_utf8_lossy(&a.stderr).contains("11"));
}

#[test]
fn bench_emits_text_and_csv_rows() {
    let dir = tempfile::tempdir().unwrap();
    let f33 = write_input(&dir, "ex33.json", EX33);
    let f4 = write_input(
        &dir,
        "kron4.json",
        r#"{"n":2,"rows":[[0,2],[-2,0]],"seq":[1,2,1,2]}"#,
    );
    let out = cafp(&["bench", &f33, &f4, "--format", "both"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("ex33"));
    assert!(text.contains("input,n,len,engine,time_ms,terms"));
    // 11-term golden F plus the 4 engine rows per input in the CSV half
    let csv_rows: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("ex33,") || l.starts_with("kron4,"))
        .collect();
    assert_eq!(csv_rows.len(), 8);
    assert!(csv_rows.iter().all(|r| r.ends_with(",11")));
}
