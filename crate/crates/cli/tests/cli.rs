use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn data(name: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    dir.join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotcover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_knotcover"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_owned())
        .collect()
}

#[test]
fn analyze_takahashi() {
    let takahashi = data("takahashi_p3_r2.pres");
    let report = json(&run(&[
        "analyze", "--input", &takahashi, "--format", "json",
    ]));
    assert_eq!(report["H"], serde_json::json!([["-2", "0"], ["0", "3"]]));
    assert_eq!(strings(&report["invariant_factors"]), ["1", "6"]);
    assert_eq!(report["free_rank"], "0");
    assert_eq!(strings(&report["torsion"]), ["6"]);
}

#[test]
fn analyze_trivial_knot() {
    let trivial = data("trivial_g2.pres");
    let report = json(&run(&["analyze", "--input", &trivial, "--format", "json"]));
    assert_eq!(report["free_rank"], "2");
    assert!(report["torsion"].as_array().unwrap().is_empty());
}

#[test]
fn malformed_input_exits_2_with_position() {
    let out = run_stdin(&["analyze"], "genus 2\nrel a1 a2^\nrel a2\n");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("SyntaxError"), "{err}");
    assert!(err.contains("line 2"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn coverings_examples() {
    let core = json(&run(&[
        "coverings",
        "--input",
        &data("core_g2.pres"),
        "--n",
        "4",
        "--format",
        "json",
    ]));
    assert_eq!(core["exists"], false);
    assert_eq!(core["count"], "0");

    let trivial = json(&run(&[
        "coverings",
        "--input",
        &data("trivial_g2.pres"),
        "--n",
        "3",
        "--format",
        "json",
    ]));
    assert_eq!(trivial["count"], "9");
    assert_eq!(trivial["monodromies"].as_array().unwrap().len(), 9);

    let tak = json(&run(&[
        "coverings",
        "--input",
        &data("takahashi_p3_r2.pres"),
        "--n",
        "6",
        "--format",
        "json",
    ]));
    assert_eq!(tak["count"], "6");
    assert_eq!(tak["unique"], false);
    assert_eq!(tak["monodromies"][0], serde_json::json!(["0", "0"]));
}

#[test]
fn cap_truncates_list_but_not_count() {
    let out = json(&run(&[
        "coverings",
        "--input",
        &data("trivial_g2.pres"),
        "--n",
        "5",
        "--cap",
        "3",
        "--format",
        "json",
    ]));
    assert_eq!(out["count"], "25");
    assert_eq!(out["truncated"], true);
    assert_eq!(
        out["monodromies"],
        serde_json::json!([["0", "0"], ["0", "1"], ["0", "2"]])
    );
}

#[test]
fn lift_takahashi_words() {
    let out = json(&run(&[
        "lift",
        "--input",
        &data("takahashi_p3_r2.pres"),
        "--n",
        "2",
        "--monodromy",
        "0,0",
        "--format",
        "json",
    ]));
    assert_eq!(
        strings(&out["words"]),
        ["x2.1 x1.1^-2 x2.2^-1", "x1.1 x2.2^3 x1.2^-1"]
    );
    assert!(out.get("relators").is_none() || out["relators"].is_null());
}

#[test]
fn lift_expand_and_index() {
    let path = data("takahashi_p3_r2.pres");
    let out = json(&run(&[
        "lift", "--input", &path, "--n", "6", "--index", "4", "--expand", "--format", "json",
    ]));
    assert_eq!(strings(&out["monodromy"]), ["3", "2"]);
    assert_eq!(out["relators"].as_array().unwrap().len(), 12);

    let text = run(&["lift", "--input", &path, "--n", "2", "--expand"]);
    let stdout = String::from_utf8(text.stdout).unwrap();
    assert!(stdout.contains("cyclic m=2 n=2\n"), "{stdout}");
    assert!(
        stdout.contains("#   r1.2 = x2.2 x1.2^-2 x2.1^-1"),
        "{stdout}"
    );
    assert!(
        stdout.contains("# covering homology: Z_2 + Z_6"),
        "{stdout}"
    );
}

#[test]
fn lift_trivial_knot_gives_empty_word() {
    let out = json(&run_stdin(
        &["lift", "--n", "5", "--monodromy", "0", "--format", "json"],
        "genus 1\nrel\n",
    ));
    assert_eq!(strings(&out["words"]), [""]);
}

#[test]
fn lift_core_knot_is_invalid_monodromy() {
    for n in ["2", "3", "7"] {
        let out = run(&[
            "lift",
            "--input",
            &data("core_g2.pres"),
            "--n",
            n,
            "--monodromy",
            "0,1",
        ]);
        assert_eq!(out.status.code(), Some(2));
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains("InvalidMonodromy"), "{err}");
    }
}

#[test]
fn monodromy_length_must_match_genus() {
    let out = run(&[
        "lift",
        "--input",
        &data("takahashi_p3_r2.pres"),
        "--n",
        "2",
        "--monodromy",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_output_is_byte_stable() {
    let path = data("homology_sphere.pres");
    for args in [
        vec!["analyze", "--input", &path, "--format", "json"],
        vec![
            "coverings",
            "--input",
            &path,
            "--n",
            "5",
            "--format",
            "json",
        ],
        vec![
            "lift", "--input", &path, "--n", "5", "--expand", "--format", "json",
        ],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(
            a.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&a.stderr)
        );
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn selftest_passes_and_is_deterministic() {
    let args = [
        "selftest",
        "--seed",
        "42",
        "--snf-cases",
        "40",
        "--count-cases",
        "40",
        "--lift-cases",
        "40",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(
        a.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&a.stdout)
    );
    assert_eq!(a.stdout, b.stdout);
    let other = run(&[
        "selftest",
        "--seed",
        "43",
        "--snf-cases",
        "40",
        "--count-cases",
        "40",
        "--lift-cases",
        "40",
    ]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn corrupted_snf_is_reported() {
    let out = run(&[
        "selftest",
        "--corrupt-snf",
        "--snf-cases",
        "5",
        "--count-cases",
        "1",
        "--lift-cases",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("FAIL snf"), "{stdout}");
}
