//! Exit-code contract, corpus handling and report determinism for the
//! `verify` binary.

use std::process::{Command, Output};

use proptest::prelude::*;

use tensorl_cli::report::{self, CaseEntry, CheckEntry, MismatchEntry, ReportDocument, Summary};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn single_case_is_equal_and_exits_zero() {
    let out = verify(&[
        "theorem1", "--r", "1", "--m", "2", "--n", "1", "--order", "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[EQUAL]"), "{text}");
    assert!(text.contains("1 equal, 0 mismatch"), "{text}");
}

#[test]
fn unsupported_case_exits_two() {
    // n = 1 requires r < m on the classical path
    let out = verify(&["theorem1", "--r", "3", "--m", "2", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("supported paths"), "{err}");
}

#[test]
fn invalid_flags_exit_two() {
    let out = verify(&["theorem1", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let out = verify(&["no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn incomplete_single_case_exits_two() {
    let out = verify(&["theorem1", "--r", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn perturbed_run_exits_one_with_mismatch() {
    let out = verify(&[
        "theorem1",
        "--r",
        "1",
        "--m",
        "2",
        "--n",
        "1",
        "--order",
        "4",
        "--perturb",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("MISMATCH"), "{text}");
}

#[test]
fn specialized_single_case_runs() {
    let out = verify(&[
        "theorem1",
        "--r",
        "1",
        "--m",
        "2",
        "--n",
        "1",
        "--order",
        "4",
        "--mode",
        "specialized",
        "--seed",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("mode=specialized"), "{text}");
    assert!(text.contains("[EQUAL]"), "{text}");
}

#[test]
fn missing_corpus_file_exits_two() {
    let out = verify(&["theorem1", "--corpus", "/nonexistent/corpus.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn corpus_validation_precedes_evaluation() {
    let dir = std::env::temp_dir().join("tensorl-corpus-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"{ "defaults": {"order": 4, "mode": "symbolic"},
             "cases": [ {"r": 1, "m": 2, "n": 1}, {"r": 2, "m": 2, "n": 1} ] }"#,
    )
    .unwrap();
    let out = verify(&["theorem1", "--corpus", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("case 1"), "{err}");
}

#[test]
fn structured_report_is_deterministic_after_normalization() {
    let dir = std::env::temp_dir().join("tensorl-determinism-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("small.json");
    std::fs::write(
        &path,
        r#"{ "defaults": {"order": 4, "mode": "symbolic"},
             "cases": [
               {"r": 1, "m": 2, "n": 1},
               {"r": 1, "m": 1, "n": 2, "path": "generating"},
               {"r": 1, "m": 2, "n": 1, "mode": "specialized", "seed": 7, "path": "agreement"}
             ] }"#,
    )
    .unwrap();
    let args = [
        "theorem1",
        "--corpus",
        path.to_str().unwrap(),
        "--format",
        "structured",
    ];
    let a = verify(&args);
    let b = verify(&args);
    assert_eq!(a.status.code(), Some(0));
    let doc_a = report::parse(&String::from_utf8_lossy(&a.stdout)).unwrap();
    let doc_b = report::parse(&String::from_utf8_lossy(&b.stdout)).unwrap();
    assert_eq!(report::normalized(&doc_a), report::normalized(&doc_b));
    assert_eq!(
        report::comparison_digest(&doc_a),
        report::comparison_digest(&doc_b)
    );
    assert_eq!(doc_a.corpus_digest, doc_b.corpus_digest);
}

#[test]
fn out_flag_writes_report_file() {
    let dir = std::env::temp_dir().join("tensorl-out-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = verify(&[
        "theorem1",
        "--r",
        "1",
        "--m",
        "2",
        "--n",
        "1",
        "--order",
        "4",
        "--format",
        "structured",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = report::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc.summary.equal, 1);
}

fn status_strategy() -> impl Strategy<Value = String> {
    prop_oneof![
        Just(report::STATUS_EQUAL.to_string()),
        Just(report::STATUS_MISMATCH.to_string()),
        Just(report::STATUS_PAPER_DISCREPANCY.to_string()),
        Just(report::STATUS_ERROR.to_string()),
    ]
}

fn entry_strategy() -> impl Strategy<Value = CaseEntry> {
    (
        1usize..5,
        1usize..5,
        1usize..4,
        0usize..10,
        status_strategy(),
        proptest::collection::vec((0usize..10, "[a-z0-9 ]{0,12}"), 0..3),
        proptest::collection::vec(("[a-z_]{1,12}", any::<bool>()), 0..3),
        0u64..5000,
    )
        .prop_map(|(r, m, n, order, status, mms, checks, millis)| CaseEntry {
            r,
            m,
            n,
            order,
            mode: "symbolic".to_string(),
            path: "classical".to_string(),
            status,
            mismatches: mms
                .into_iter()
                .map(|(degree, diff)| MismatchEntry { degree, diff })
                .collect(),
            intermediate_checks: checks
                .into_iter()
                .map(|(name, pass)| CheckEntry {
                    name,
                    status: if pass { "PASS" } else { "FAIL" }.to_string(),
                    detail: String::new(),
                })
                .collect(),
            millis,
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// parse(emit(doc)) = doc, and the summary always tallies the entries.
    #[test]
    fn report_roundtrip(entries in proptest::collection::vec(entry_strategy(), 0..6)) {
        let doc = report::assemble("0.1.0", "cafebabe".to_string(), entries);
        let parsed = report::parse(&report::emit(&doc, report::Format::Structured)).unwrap();
        prop_assert_eq!(&parsed, &doc);

        let tally: Summary = report::summarize(&doc.cases);
        prop_assert_eq!(tally, doc.summary);
    }
}

/// The committed baseline pins every digest and status of the default
/// corpus; regressions in any evaluator or in report rendering show up as
/// a diff here.
#[test]
fn baseline_regression_default_corpus() {
    let out = verify(&["all", "--corpus", "default", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let current =
        report::normalized(&report::parse(&String::from_utf8_lossy(&out.stdout)).unwrap());
    let baseline_text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/baselines/default_report.json"
    ))
    .expect("baseline file present");
    let baseline = report::normalized(&report::parse(&baseline_text).unwrap());
    assert_eq!(current.summary, baseline.summary);
    assert_eq!(
        current, baseline,
        "normalized report drifted from the committed baseline"
    );
}

#[test]
fn report_types_roundtrip_manually() {
    let doc = ReportDocument {
        version: "0.1.0".into(),
        corpus_digest: "00".into(),
        cases: vec![],
        summary: Summary::default(),
    };
    let parsed = report::parse(&report::emit(&doc, report::Format::Structured)).unwrap();
    assert_eq!(parsed, doc);
}
