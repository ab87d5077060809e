use std::process::{Command, Output};

use serde_json::Value;

fn genergy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genergy"))
        .args(args)
        .env_remove("GENERGY_JOBS")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn classify_json(args: &[&str]) -> Value {
    let mut all = vec!["classify", "--format", "json"];
    all.extend_from_slice(args);
    let out = genergy(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn flags(v: &Value) -> Vec<String> {
    v["flags"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["threshold"].as_str().unwrap().to_owned())
        .collect()
}

#[test]
fn odd_cycle_is_on_the_incidence_boundary() {
    let v = classify_json(&["--family", "cycle", "--n", "5"]);
    assert_eq!(v["subclass"], "G3");
    assert_eq!(flags(&v), ["Ie"]);
    assert_eq!(v["prediction"]["predicted"], "G3");
}

#[test]
fn single_edge_is_in_the_last_class() {
    let v = classify_json(&["--graph6", "A_"]);
    assert_eq!(v["subclass"], "G4");
    assert_eq!(v["profile"]["energy"].as_f64().unwrap(), 2.0);
    assert_eq!(v["canonical"], "A_");
}

#[test]
fn complete_four_sits_on_pi_star() {
    let v = classify_json(&["--family", "complete", "--n", "4"]);
    assert_eq!(v["subclass"], "G1");
    assert!(flags(&v).contains(&"PiStar".to_owned()));
}

#[test]
fn table_output_names_every_invariant() {
    let out = genergy(&["classify", "--family", "path", "--n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for label in ["E ", "LE ", "LEL ", "IE ", "pi ", "pi* ", "subclass   G4", "agrees"] {
        assert!(text.contains(label), "missing {label:?} in\n{text}");
    }
}

#[test]
fn disconnected_input_is_a_domain_error() {
    // Two disjoint edges.
    let out = genergy(&["classify", "--graph6", "CK"]);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn malformed_input_is_a_usage_error() {
    assert_eq!(genergy(&["classify", "--graph6", "C"]).status.code(), Some(1));
    assert_eq!(genergy(&["census", "--n-range", "5..3"]).status.code(), Some(1));
    assert_eq!(genergy(&["census", "--n", "11"]).status.code(), Some(1));
    assert_eq!(genergy(&["classify"]).status.code(), Some(1));
    assert_eq!(
        genergy(&["census", "--n", "3", "--tol-abs", "-1"]).status.code(),
        Some(1)
    );
    assert_eq!(genergy(&["--help"]).status.code(), Some(0));
}

#[test]
fn enumerate_writes_canonical_lines() {
    let one = genergy(&["enumerate", "--n", "1"]);
    assert_eq!(stdout(&one), "@\n");
    let four = genergy(&["enumerate", "--n", "4"]);
    let lines: Vec<String> = stdout(&four).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.windows(2).all(|w| w[0] < w[1]));
    assert!(lines.contains(&"C~".to_owned()));
}

#[test]
fn census_json_round_trips() {
    let out = genergy(&["census", "--n-range", "1..5", "--format", "json"]);
    assert!(out.status.success());
    let doc = genergy::census::parse_census_json(&stdout(&out)).unwrap();
    assert_eq!(doc.rows.len(), 5);
    assert_eq!(doc.rows[4].total, 21);
    assert_eq!(doc.rows[4].count(genergy::Subclass::G2), 4);
    assert_eq!(doc.ratios.len(), 5);
}

#[test]
fn census_file_source_and_listings() {
    let dir = tempfile::tempdir().unwrap();
    let source = dir.path().join("g5.g6");
    let listed = dir.path().join("classes");
    let enumerated = genergy(&["enumerate", "--n", "5", "--out", source.to_str().unwrap()]);
    assert_eq!(stdout(&enumerated).trim(), "21");

    let from_file = genergy(&[
        "census",
        "--n",
        "5",
        "--source",
        source.to_str().unwrap(),
        "--format",
        "csv",
        "--list-classes",
        listed.to_str().unwrap(),
    ]);
    assert!(from_file.status.success());
    let builtin = genergy(&["census", "--n", "5", "--format", "csv"]);
    assert_eq!(stdout(&from_file), stdout(&builtin));
    assert_eq!(stdout(&builtin), "n,total,g1,g2,g3,g4,borderline\n5,21,12,4,4,1,0\n");

    let listed_total: usize = (1..=4)
        .map(|k| {
            std::fs::read_to_string(listed.join(format!("n5_g{k}.g6")))
                .unwrap()
                .lines()
                .count()
        })
        .sum();
    assert_eq!(listed_total, 21);
}

#[test]
fn verify_reports_pass_lines() {
    let out = genergy(&["verify", "--theorems", "--max-n", "12", "--lemma", "--samples", "50"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 4);
    assert!(!text.contains("FAIL"));
}

#[test]
fn conjecture_trend_is_reported() {
    let out = genergy(&["verify", "--conjecture", "--max-n", "7", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["conjecture"].is_object());
}
