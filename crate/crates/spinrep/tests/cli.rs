//! End-to-end tests of the spinrep binary: frozen examples, error codes,
//! exit statuses, and output determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn spinrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn decompose_trivial_rep_example() {
    let out = spinrep(&["decompose", "--n", "4", "--sigma", "0", "--nu", "3/2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["command"], "decompose");
    assert_eq!(doc["payload"]["count"], 2);
    let subs = doc["payload"]["subquotients"].as_array().unwrap();
    assert!(subs.iter().all(|s| s["case"] == "Even_c"));
    let tau = subs.iter().find(|s| s["label"] == "tau").unwrap();
    assert_eq!(tau["finite_dimensional"], true);
    assert_eq!(tau["unitary"], true);
    assert_eq!(tau["infinitesimal_character"], "3/2,1/2");
}

#[test]
fn verify_partition_example_passes() {
    let out = spinrep(&["verify", "--theorem", "partition", "--n", "5", "--bound", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["payload"]["pass"], true);
    assert_eq!(doc["payload"]["sweeps"][0]["n"], 5);
    assert_eq!(doc["inputs"]["bound"], "4");
}

#[test]
fn infchar_example() {
    let out = spinrep(&["infchar", "--n", "5", "--sigma", "1,0", "--nu", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["payload"]["dominant"], "2,1,0");
    assert_eq!(doc["payload"]["family"], "D3");
}

#[test]
fn reducible_reports_complementary_series() {
    // Inside the complementary series (0 < nu < nu(sigma)): irreducible and
    // unitary. At its end nu = nu(sigma) the representation reduces and the
    // unitarity question moves to the subquotients.
    let inside = spinrep(&["reducible", "--n", "4", "--sigma", "1", "--nu", "1/4"]);
    assert_eq!(inside.status.code(), Some(0));
    let doc = json_of(&inside);
    assert_eq!(doc["payload"]["reducible"], false);
    assert_eq!(doc["payload"]["nu_sigma"], "1/2");
    assert_eq!(doc["payload"]["unitary"], true);

    let at_end = spinrep(&["reducible", "--n", "4", "--sigma", "1", "--nu", "1/2"]);
    assert_eq!(at_end.status.code(), Some(0));
    let doc = json_of(&at_end);
    assert_eq!(doc["payload"]["reducible"], true);
    assert_eq!(doc["payload"]["unitary"], Value::Null);
}

#[test]
fn spectrum_enumerates_window() {
    let out = spinrep(&[
        "spectrum", "--n", "4", "--sigma", "0", "--nu", "3/2", "--label", "tau", "--height", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["payload"]["count"], 1);
    assert_eq!(doc["payload"]["k_types"][0], "0,0");
}

#[test]
fn corners_of_a_discrete_series_class() {
    let out = spinrep(&["corners", "--n", "4", "--lambda", "3/2,1/2", "--index", "omega+"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["payload"]["unitary"], true);
    assert_eq!(doc["payload"]["distinct_fundamental"], 1);
    assert_eq!(doc["payload"]["q"], doc["payload"]["corners"]["q1"]);
}

#[test]
fn classify_lambda_outside_family_set_is_empty() {
    let out = spinrep(&["classify-lambda", "--n", "4", "--lambda", "1/2,1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["payload"]["lambda_class"], "not_in_lambda");
    assert_eq!(doc["payload"]["pairs"].as_array().unwrap().len(), 0);
    assert_eq!(doc["payload"]["classes"].as_array().unwrap().len(), 0);
}

#[test]
fn classify_lambda_lists_full_family() {
    let out = spinrep(&["classify-lambda", "--n", "4", "--lambda", "3/2,1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["payload"]["lambda_class"], "lambda_star");
    assert_eq!(doc["payload"]["pairs"].as_array().unwrap().len(), 2);
    let classes = doc["payload"]["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 4);
    let indices: Vec<&str> = classes.iter().map(|c| c["index"].as_str().unwrap()).collect();
    assert_eq!(indices, ["tau1", "tau2", "omega+", "omega-"]);
    assert!(classes.iter().all(|c| c["unitary"] == true));
}

#[test]
fn enumerate_ghat0_matches_both_parities() {
    let even = spinrep(&["enumerate-ghat0", "--n", "4", "--bound", "3/2"]);
    assert_eq!(even.status.code(), Some(0));
    let doc = json_of(&even);
    assert_eq!(doc["payload"]["count"], doc["payload"]["classes"].as_array().unwrap().len());
    let odd = spinrep(&["enumerate-ghat0", "--n", "5", "--bound", "3"]);
    assert_eq!(odd.status.code(), Some(0));
    let doc = json_of(&odd);
    assert!(doc["payload"]["count"].as_u64().unwrap() > 0);
}

#[test]
fn verify_failure_wrong_parity_is_usage_error() {
    let out = spinrep(&["verify", "--theorem", "2", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let doc = json_of(&out);
    assert_eq!(doc["error"]["code"], "out_of_domain");
}

#[test]
fn error_codes_and_exit_statuses() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["infchar", "--n", "5", "--sigma", "1,bad", "--nu", "1"],
            "bad_weight",
        ),
        (&["infchar", "--n", "3", "--sigma", "1", "--nu", "1"], "unsupported_n"),
        (
            &["infchar", "--n", "4", "--sigma", "1", "--nu", "3/0"],
            "bad_nu",
        ),
        (
            &["spectrum", "--n", "4", "--sigma", "0", "--nu", "3/2", "--label", "zeta", "--height", "2"],
            "bad_index",
        ),
        (
            &["corners", "--n", "4", "--lambda", "3/2,1/2", "--index", "tau9"],
            "bad_index",
        ),
        (
            &["corners", "--n", "4", "--lambda", "1/2,1/2", "--index", "tau1"],
            "not_in_lambda",
        ),
        (
            &["decompose", "--n", "4", "--sigma", "0", "--nu", "1/3"],
            "irreducible",
        ),
        (
            &["infchar", "--n", "4", "--sigma", "1,0", "--nu", "1"],
            "wrong_length",
        ),
        (&["verify", "--theorem", "9"], "out_of_domain"),
    ];
    for (args, code) in cases {
        let out = spinrep(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
        let doc = json_of(&out);
        assert_eq!(doc["error"]["code"], *code, "args: {args:?}");
    }
}

#[test]
fn clap_usage_error_exits_2() {
    let out = spinrep(&["decompose", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = spinrep(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pretty_toggle_preserves_content() {
    let flat = spinrep(&["infchar", "--n", "5", "--sigma", "1,0", "--nu", "1"]);
    let pretty = spinrep(&["infchar", "--n", "5", "--sigma", "1,0", "--nu", "1", "--pretty"]);
    assert_ne!(flat.stdout, pretty.stdout);
    assert_eq!(json_of(&flat), json_of(&pretty));
    assert!(flat.stdout.iter().filter(|&&b| b == b'\n').count() == 1);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["classify-lambda", "--n", "5", "--lambda", "3,2,1"];
    let a = spinrep(&args);
    let b = spinrep(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}
