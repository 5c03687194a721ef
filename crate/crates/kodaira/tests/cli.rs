//! End-to-end tests of the binary: exit codes, stream separation, JSON
//! round-trips, and byte-level determinism.

use kodaira::dossier::{build_dossier, Dossier};
use kodaira::params::enumerate_params;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_kodaira"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

#[test]
fn validate_accepts_and_rejects_with_named_errors() {
    let (code, stdout, _) = run(&["validate", "--p", "5", "--g", "16", "--l", "6"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("deg_L = 6"));
    assert!(stdout.contains("fiber genus = 10"));

    let (code, _, stderr) = run(&["validate", "--p", "5", "--g", "7", "--l", "2"]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("CharNotDividingCanonicalDegree"));

    let (code, _, stderr) = run(&["validate", "--p", "4", "--g", "16", "--l", "6"]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("NotPrime"));

    let (code, _, stderr) = run(&["validate", "--p", "5", "--g", "1", "--l", "2"]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("GenusTooSmall"));

    let (code, _, stderr) = run(&["validate", "--p", "5", "--g", "16", "--l", "5"]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("CoverDegreeInvalid"));
}

#[test]
fn report_json_round_trips_and_matches_library() {
    for c in enumerate_params(13, 60) {
        let (code, stdout, _) = run(&[
            "report",
            "--p",
            &c.p().to_string(),
            "--g",
            &c.g().to_string(),
            "--l",
            &c.l().to_string(),
            "--json",
        ]);
        assert_eq!(code, 0);
        let parsed = Dossier::from_json(&stdout).expect("valid dossier JSON");
        assert_eq!(parsed, build_dossier(&c, false).unwrap());
    }
}

#[test]
fn report_output_is_byte_identical_across_runs() {
    let args = ["report", "--p", "5", "--g", "16", "--l", "6", "--json"];
    let (c1, out1, _) = run(&args);
    let (c2, out2, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(out1, out2);

    let args = ["report", "--p", "5", "--g", "16", "--l", "6"];
    let (c1, out1, _) = run(&args);
    let (c2, out2, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(out1, out2);
}

#[test]
fn report_beyond_range_is_namespaced_and_empty() {
    let (code, stdout, _) = run(&[
        "report", "--p", "5", "--g", "16", "--l", "6", "--json", "--beyond-range",
    ]);
    assert_eq!(code, 0);
    let d = Dossier::from_json(&stdout).unwrap();
    assert!(d.flags.beyond_range_scanned);
    assert!(d.beyond_range.is_empty());
    // the proven list is untouched by the scan
    let plain = build_dossier(&kodaira::params::validate(5, 16, 6).unwrap(), false).unwrap();
    assert_eq!(d.nonvanishing, plain.nonvanishing);

    let (code, stdout, _) = run(&["report", "--p", "5", "--g", "16", "--l", "6", "--beyond-range"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("beyond-range scan"));
    assert!(stdout.contains("sharp"));
}

#[test]
fn search_counts_and_streams_deterministically() {
    let (code, stdout, _) = run(&["search", "--max-p", "2", "--max-g", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "0 candidates\n");

    let (code, stdout, _) = run(&["search", "--max-p", "5", "--max-g", "16"]);
    assert_eq!(code, 0);
    for needle in [
        "p = 3, g = 7, l = 2",
        "p = 3, g = 7, l = 4",
        "p = 5, g = 16, l = 3",
        "p = 5, g = 16, l = 6",
    ] {
        assert!(stdout.contains(needle), "missing {needle}");
    }
    let expected = enumerate_params(5, 16).len();
    assert!(stdout.ends_with(&format!("{expected} candidates\n")));

    let (_, again, _) = run(&["search", "--max-p", "5", "--max-g", "16"]);
    assert_eq!(stdout, again);
}

#[test]
fn search_json_streams_one_dossier_per_line() {
    let (code, stdout, stderr) = run(&["search", "--max-p", "7", "--max-g", "30", "--json"]);
    assert_eq!(code, 0);
    let expected = enumerate_params(7, 30);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), expected.len());
    for (line, c) in lines.iter().zip(&expected) {
        let d = Dossier::from_json(line).expect("each line is a dossier");
        assert_eq!((d.params.p, d.params.g, d.params.l), (c.p(), c.g(), c.l()));
        assert!(d.flags.conditional_on_tango_curve);
    }
    // the summary stays off the data stream
    assert_eq!(stderr, format!("{} candidates\n", expected.len()));
}

#[test]
fn refute_prints_decompositions_chi_pair_and_verdict() {
    let (code, stdout, _) = run(&["refute", "--p", "5", "--g", "16", "--l", "6", "--k", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("O_P(-1) (x) pi^* N^(0)"));
    assert!(stdout.contains("O_P(-2) (x) pi^* N^(0)"));
    assert!(stdout.contains("chi(O_(kE~)) = -31"));
    assert!(stdout.contains("chi(O_(kE)) = -36"));
    assert!(stdout.contains("MISMATCH"));

    let (code, _, stderr) = run(&["refute", "--p", "5", "--g", "16", "--l", "6", "--k", "1"]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("NoContradiction"));

    let (code, _, stderr) = run(&["refute", "--p", "5", "--g", "16", "--l", "6", "--k", "0"]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("NonPositiveMultiple"));

    // defaults to k = 2
    let (code, stdout, _) = run(&["refute", "--p", "3", "--g", "7", "--l", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("MISMATCH"));
}

#[test]
fn refute_json_parses() {
    let (code, stdout, _) =
        run(&["refute", "--p", "3", "--g", "7", "--l", "4", "--k", "3", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["k"], serde_json::json!(3));
    assert_eq!(v["mismatch"], serde_json::json!(true));
    // chi difference 3*2*6*(1/3 - 1/12) = 9/2 * 6 = ... exact integers either way
    let cover = v["chi_thickening_cover"].as_i64().unwrap();
    let base = v["chi_thickening_base"].as_i64().unwrap();
    assert_eq!(base - cover, -(3 * 2 * 6 / 3 - 3 * 2 * 6 / 12));
}

#[test]
fn check_battery_passes() {
    let (code, stdout, _) = run(&["check", "--p", "5", "--g", "16", "--l", "6"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("self-check: 10/10 passed"));

    let (code, stdout, _) = run(&["check", "--p", "3", "--g", "7", "--l", "2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["passed"] == serde_json::json!(true)));
}

#[test]
fn check_certifies_in_range_twists() {
    let (code, stdout, _) = run(&["check", "--p", "5", "--g", "16", "--l", "6", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("summand index 3: Sym^1(E)^v (x) N^(6)"));
    assert!(stdout.contains("conditional"));

    let (code, stdout, _) =
        run(&["check", "--p", "3", "--g", "7", "--l", "4", "--a", "1", "--b", "1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("summand index 3: Sym^1(E)^v (x) N^(4)"));
}

#[test]
fn check_out_of_range_errors_unless_labeled_scan_requested() {
    let (code, _, stderr) = run(&["check", "--p", "5", "--g", "16", "--l", "6", "--n", "4"]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("OutOfProvenRange"));

    let (code, stdout, _) =
        run(&["check", "--p", "5", "--g", "16", "--l", "6", "--n", "4", "--beyond-range"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("beyond proven range"));
    assert!(stdout.contains("nothing beyond the proven range is asserted"));

    let (code, _, stderr) =
        run(&["check", "--p", "5", "--g", "16", "--l", "6", "--a", "5", "--b", "2"]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("OutOfProvenRange"));

    let (code, stdout, _) = run(&[
        "check", "--p", "5", "--g", "16", "--l", "6", "--a", "5", "--b", "2", "--beyond-range",
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["beyond_proven_range"], serde_json::json!(true));
    assert_eq!(v["a_b"], serde_json::json!([5, 2]));
}

#[test]
fn check_degenerate_corner_is_an_error_not_a_witness() {
    let (code, _, stderr) =
        run(&["check", "--p", "5", "--g", "16", "--l", "6", "--a", "1", "--b", "5"]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("DegenerateWitness"));
}

#[test]
fn check_contradiction_demo() {
    let (code, stdout, _) = run(&[
        "check", "--p", "5", "--g", "16", "--l", "6", "--a", "6", "--b", "3", "--k", "4",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("numerically ample: true"));
    assert!(stdout.contains("CONTRADICTION"));
    assert!(stdout.contains("never yields both twist coordinates positive: true"));

    // inside the proven rectangle nothing contradictory can be assembled
    let (code, stdout, _) = run(&[
        "check", "--p", "5", "--g", "16", "--l", "6", "--a", "2", "--b", "3", "--k", "4",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("no contradiction can be assembled"));

    let (code, stdout, _) = run(&[
        "check", "--p", "5", "--g", "16", "--l", "6", "--a", "6", "--b", "3", "--k", "4",
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["contradiction_flagged"], serde_json::json!(true));
    assert_eq!(v["twist_et_coeff"], serde_json::json!(6));
    assert_eq!(v["twist_base_deg"], serde_json::json!(1));
}

#[test]
fn flag_misuse_is_a_validation_failure() {
    // exit 1, never 2: code 2 is reserved for internal-invariant violations,
    // which cannot be triggered from the command line
    let (code, _, stderr) = run(&[
        "check", "--p", "5", "--g", "16", "--l", "6", "--n", "1", "--a", "1", "--b", "1",
    ]);
    assert_eq!(code, 1);
    assert!(stderr.contains("cannot be used with"));

    let (code, _, stderr) = run(&["check", "--p", "5", "--g", "16", "--l", "6", "--a", "1"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("required"));

    let (code, _, _) = run(&["--help"]);
    assert_eq!(code, 0);
}
