//! Binary-level tests: commands, exit codes, schema conformance, and
//! output determinism.

mod common;

use common::{assert_valid, exit_code, load_schema, run_cli, stdout_of};

#[test]
fn list_semirings_includes_all_builtins() {
    let output = run_cli(&["list-semirings"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    for id in ["nat", "nonneg-rational", "boolean", "tropical-min-plus", "monoid-nat", "s0"] {
        assert!(text.contains(id), "missing {id} in:\n{text}");
    }

    let output = run_cli(&["list-semirings", "--output", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_valid(&load_schema("list-semirings.schema.json"), &value);
    assert_eq!(value.as_array().unwrap().len(), 6);
}

#[test]
fn eval_compares_the_two_sextic_factorizations() {
    let output = run_cli(&[
        "eval",
        "--semiring",
        "nat",
        "(T+1)*(T^4+T^2+1)",
        "(T^3+1)*(T^2+T+1)",
    ]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout_of(&output), "equal\n");
}

#[test]
fn eval_resolves_the_presentation_relation() {
    let output = run_cli(&["eval", "--semiring", "s0", "x+y", "1"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout_of(&output), "equal\n");
}

#[test]
fn eval_single_expression_renders_canonically() {
    let output = run_cli(&["eval", "--semiring", "boolean", "--output", "json", "(T+1)^3"]);
    assert_eq!(exit_code(&output), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_valid(&load_schema("eval.schema.json"), &value);
    assert_eq!(value["result"], "T^3+T^2+T+1");
    assert_eq!(value["verdict"], serde_json::Value::Null);
}

#[test]
fn parse_errors_exit_2() {
    let output = run_cli(&["eval", "--semiring", "nat", "T+"]);
    assert_eq!(exit_code(&output), 2);
    let output = run_cli(&["factor", "--semiring", "nat", "(T+1"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn unknown_semiring_exits_3() {
    let output = run_cli(&["eval", "--semiring", "octonions", "T"]);
    assert_eq!(exit_code(&output), 3);
}

#[test]
fn factor_over_naturals_finds_both_factorizations() {
    let output =
        run_cli(&["factor", "--semiring", "nat", "--output", "json", "T^5+T^4+T^3+T^2+T+1"]);
    assert_eq!(exit_code(&output), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_valid(&load_schema("factor.schema.json"), &value);
    assert_eq!(value["mode"], "exhaustive");
    assert_eq!(value["bound"], 4);
    let factorizations = value["factorizations"].as_array().unwrap();
    assert_eq!(factorizations.len(), 2);
}

#[test]
fn factor_over_booleans_finds_both_factorizations() {
    let output = run_cli(&["factor", "--semiring", "boolean", "T^3+T^2+T+1"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    assert!(text.contains("factorizations: 2"), "{text}");
    assert!(text.contains("(T+1) * (T+1) * (T+1)"), "{text}");
    assert!(text.contains("(T+1) * (T^2+1)"), "{text}");
}

#[test]
fn factor_certificate_mode_over_tropical() {
    let output = run_cli(&[
        "factor",
        "--semiring",
        "tropical-min-plus",
        "--output",
        "json",
        "T^2+T+t(0)",
    ]);
    assert_eq!(exit_code(&output), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_valid(&load_schema("factor.schema.json"), &value);
    assert_eq!(value["mode"], "certificate");
    assert_eq!(value["certificate"]["verdict"], "reducible");
    assert_eq!(value["certificate"]["reason"], "lemma2");
}

#[test]
fn factor_unsupported_shape_exits_3() {
    let output = run_cli(&["factor", "--semiring", "s0", "T^3+T+1"]);
    assert_eq!(exit_code(&output), 3);
    // Non-monic input over the naturals is outside the oracle's
    // default envelope.
    let output = run_cli(&["factor", "--semiring", "nat", "2*T^2+2"]);
    assert_eq!(exit_code(&output), 3);
}

#[test]
fn verify_theorem_single_semiring_schema_and_content() {
    let output =
        run_cli(&["verify-theorem", "--semiring", "nat", "--output", "json"]);
    assert_eq!(exit_code(&output), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_valid(&load_schema("verify-theorem.schema.json"), &value);
    assert_eq!(value["semiring"], "nat");
    assert_eq!(value["case"], "no-partner");
    assert_eq!(value["verdict"], "not-ufd");
    assert_eq!(value["product"], "T^5+T^4+T^3+T^2+T+1");
}

#[test]
fn verify_theorem_all_reports_every_semiring() {
    let output = run_cli(&["verify-theorem", "--all", "--output", "json"]);
    assert_eq!(exit_code(&output), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    let schema = load_schema("verify-theorem.schema.json");
    let reports = value.as_array().unwrap();
    assert_eq!(reports.len(), 6);
    for report in reports {
        assert_valid(&schema, report);
        assert_eq!(report["verdict"], "not-ufd");
    }
    let ids: Vec<&str> = reports.iter().map(|r| r["semiring"].as_str().unwrap()).collect();
    assert_eq!(
        ids,
        ["boolean", "monoid-nat", "nat", "nonneg-rational", "s0", "tropical-min-plus"]
    );
}

#[test]
fn verify_theorem_s0_lands_in_the_partner_case() {
    let output = run_cli(&["verify-theorem", "--semiring", "s0", "--output", "json"]);
    assert_eq!(exit_code(&output), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(value["case"], "partner");
    assert_eq!(value["partner_witness"], "x");
}

#[test]
fn check_axioms_schema_and_determinism() {
    let args = ["check-axioms", "--semiring", "nat", "--seed", "7", "--output", "json"];
    let first = run_cli(&args);
    assert_eq!(exit_code(&first), 0);
    let second = run_cli(&args);
    assert_eq!(first.stdout, second.stdout, "same seed must give identical bytes");
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&first)).unwrap();
    assert_valid(&load_schema("check-axioms.schema.json"), &value);
    assert_eq!(value["all_passed"], true);
}

#[test]
fn check_axioms_reports_unknown_counts_for_s0() {
    let output = run_cli(&[
        "check-axioms",
        "--semiring",
        "s0",
        "--samples",
        "200",
        "--output",
        "json",
    ]);
    assert_eq!(exit_code(&output), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(value["all_passed"], true);
    assert_eq!(value["unknown_total"], 0);

    // A starved budget surfaces unknown verdicts instead of guessing.
    let output = run_cli(&[
        "check-axioms",
        "--semiring",
        "s0",
        "--samples",
        "200",
        "--budget-nodes",
        "2",
        "--budget-depth",
        "1",
        "--output",
        "json",
    ]);
    assert_eq!(exit_code(&output), 0, "unknowns are reported, not failures");
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(value["all_passed"], true);
    assert!(value["unknown_total"].as_u64().unwrap() > 0);
}

#[test]
fn verify_theorem_text_output_is_deterministic() {
    let args = ["verify-theorem", "--all"];
    let first = run_cli(&args);
    let second = run_cli(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn text_and_json_modes_expose_the_same_facts() {
    let text = stdout_of(&run_cli(&["verify-theorem", "--semiring", "boolean"]));
    let json_output = stdout_of(&run_cli(&[
        "verify-theorem",
        "--semiring",
        "boolean",
        "--output",
        "json",
    ]));
    let value: serde_json::Value = serde_json::from_str(&json_output).unwrap();
    assert!(text.contains("partner(1)"));
    assert_eq!(value["partner_witness"], "1");
    for factors in value["factorizations"].as_array().unwrap() {
        for factor in factors.as_array().unwrap() {
            assert!(text.contains(factor.as_str().unwrap()), "{factor} missing from text");
        }
    }
    assert!(text.contains(value["axiom_report_hash"].as_str().unwrap()));
}
