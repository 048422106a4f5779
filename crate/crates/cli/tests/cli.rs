use std::path::PathBuf;
use std::process::{Command, Output};

use dirac_cli::RootsPayload;
use dirac_core::charring::VirtualDecomposition;
use dirac_core::dirac::{KostantComponent, SpectrumEntry};
use dirac_core::lifting::LiftTerm;
use dirac_core::spinmod::SpinPair;
use dirac_core::verify::RunReport;
use dirac_core::{FormalCharacter, Weight, WeylElement};
use serde::de::DeserializeOwned;

fn dirac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dirac")).args(args).output().expect("binary runs")
}

fn ok_json<T: DeserializeOwned>(args: &[&str]) -> (T, String) {
    let out = dirac(args);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {stderr}");
    let text = String::from_utf8(out.stdout).unwrap();
    (serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}")), text)
}

fn catalog() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/catalog.json")
}

fn w(c: &[i64]) -> Weight {
    Weight::from_ints(c.iter().copied())
}

#[test]
fn index_over_the_torus_of_a1() {
    let (idx, _): (VirtualDecomposition, _) = ok_json(&["index", "A1", "--", "", "0"]);
    assert_eq!(idx.pairs(), vec![(w(&[1]), 1), (w(&[-1]), -1)]);
}

#[test]
fn adjoint_character_of_a2() {
    let (ch, _): (FormalCharacter, _) = ok_json(&["char", "A2", "1,1"]);
    // six roots plus the zero weight with multiplicity two
    assert_eq!(ch.len(), 7);
    assert_eq!(ch.mass(), 8);
    assert_eq!(ch.mult(&w(&[0, 0])), 2);
}

#[test]
fn invalid_type_exits_2() {
    let out = dirac(&["roots", "Z9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Z9"));
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(dirac(&["index", "A1"]).status.code(), Some(2));
    assert_eq!(dirac(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(dirac(&["char", "A2", "1,x"]).status.code(), Some(2));
    assert_eq!(dirac(&["spin", "B2", "1;0"]).status.code(), Some(3));
}

#[test]
fn validation_and_resource_exit_codes() {
    assert_eq!(dirac(&["char", "A2", "1"]).status.code(), Some(3));
    assert_eq!(dirac(&["char", "A2", "-1,0"]).status.code(), Some(3));
    assert_eq!(dirac(&["spin", "B2", "0,1;1,1"]).status.code(), Some(3));
    assert_eq!(dirac(&["lift", "C2", "1,0", "0,1;2,1", "0,1"]).status.code(), Some(3));
    assert_eq!(dirac(&["roots", "A7"]).status.code(), Some(4));
    assert_eq!(dirac(&["weyl", "B3", "--max-weyl-order", "10"]).status.code(), Some(4));
    assert_eq!(dirac(&["roots", "A7", "--max-rank", "7"]).status.code(), Some(0));
}

#[test]
fn payloads_round_trip() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["roots", "G2"],
        vec!["weyl", "B2"],
        vec!["weyl", "G2", "--cosets", "0,1;3,1"],
        vec!["char", "B2", "0,2"],
        vec!["spin", "G2", "1,0;3,2"],
        vec!["index", "B2", "1,0;1,2", "1,1"],
        vec!["hd", "A2", "1,0", "1,0"],
        vec!["spectrum", "A1", "", "1"],
        vec!["lift", "C2", "1,0", "0,1;2,1", "3/2,1/3"],
    ];
    for args in cases {
        let out = dirac(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        let reser = match args[0] {
            "roots" => serde_json::to_string_pretty(&serde_json::from_str::<RootsPayload>(&text).unwrap()),
            "weyl" => serde_json::to_string_pretty(&serde_json::from_str::<Vec<WeylElement>>(&text).unwrap()),
            "char" => serde_json::to_string_pretty(&serde_json::from_str::<FormalCharacter>(&text).unwrap()),
            "spin" => serde_json::to_string_pretty(&serde_json::from_str::<SpinPair>(&text).unwrap()),
            "index" => serde_json::to_string_pretty(&serde_json::from_str::<VirtualDecomposition>(&text).unwrap()),
            "hd" => serde_json::to_string_pretty(&serde_json::from_str::<Vec<KostantComponent>>(&text).unwrap()),
            "spectrum" => serde_json::to_string_pretty(&serde_json::from_str::<Vec<SpectrumEntry>>(&text).unwrap()),
            "lift" => serde_json::to_string_pretty(&serde_json::from_str::<Vec<LiftTerm>>(&text).unwrap()),
            _ => unreachable!(),
        }
        .unwrap();
        assert_eq!(reser + "\n", text, "{args:?}");
        let again = dirac(&args);
        assert_eq!(String::from_utf8(again.stdout).unwrap(), text, "{args:?} is not deterministic");
    }
}

#[test]
fn coset_representatives_of_g2() {
    let (reps, _): (Vec<WeylElement>, _) = ok_json(&["weyl", "G2", "--cosets", "1,0;3,2"]);
    assert_eq!(reps.len(), 3);
    assert!(reps[0].word.is_empty());
}

#[test]
fn lift_output_is_sorted_with_signs() {
    let (terms, _): (Vec<LiftTerm>, _) = ok_json(&["lift", "C2", "1,0", "0,1;2,1", "3/2,1/3"]);
    assert_eq!(terms.len(), 2);
    assert!(terms[0].parameter < terms[1].parameter);
    assert_eq!(terms.iter().map(|t| t.sign).sum::<i64>(), 0);
}

#[test]
fn text_mode_renders_characters() {
    let out = dirac(&["char", "A1", "1", "--text"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1 · e^[-1] + 1 · e^[1]\n");
}

#[test]
fn verify_identities_on_shipped_catalog() {
    let cat = catalog();
    let (report, _): (RunReport, _) = ok_json(&["verify", cat.to_str().unwrap(), "--suite", "identities"]);
    assert!(report.passed);
    assert!(report.checks.iter().any(|c| c.name == "denominator_quotient"));
    assert!(report.wall_time_ms.is_none());
}

#[test]
fn verify_lifting_lists_trials_and_is_reproducible() {
    let cat = catalog();
    let args = ["verify", cat.to_str().unwrap(), "--suite", "lifting", "--seed", "7"];
    let (report, text): (RunReport, _) = ok_json(&args);
    assert_eq!(report.seed, Some(7));
    for datum in 0..3 {
        let n = report
            .checks
            .iter()
            .filter(|c| c.name == "lift_identity" && c.input["datum"] == datum && c.input["seed"] == 7)
            .count();
        assert_eq!(n, 100);
    }
    let (_, again): (RunReport, _) = ok_json(&args);
    assert_eq!(text, again);
}

#[test]
fn report_file_carries_wall_time() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = dirac(&["verify", catalog().to_str().unwrap(), "--suite", "oracle", "--report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: RunReport = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert!(report.wall_time_ms.is_some());
    assert_eq!(report.checks.len(), 6);
}

#[test]
fn non_closed_catalog_exits_3_and_names_roots() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"pairs": [{"type": "B2", "simple_roots": [[0, 1], [1, 1]]}]}"#).unwrap();
    let out = dirac(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("[0, 1]") && err.contains("[1, 1]"), "{err}");
}

#[test]
fn unknown_catalog_keys_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"pairs": [], "colour": "blue"}"#).unwrap();
    assert_eq!(dirac(&["verify", path.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn catalog_caps_apply_unless_overridden() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("caps.json");
    std::fs::write(
        &path,
        r#"{"pairs": [{"type": "G2", "simple_roots": []}], "caps": {"max_rank": 6, "max_weyl_order": 6, "max_terms": 1000}}"#,
    )
    .unwrap();
    assert_eq!(dirac(&["verify", path.to_str().unwrap(), "--suite", "identities"]).status.code(), Some(4));
    let out = dirac(&["verify", path.to_str().unwrap(), "--suite", "identities", "--max-weyl-order", "12"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}
