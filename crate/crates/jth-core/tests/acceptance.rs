//! Acceptance gate: every verification suite must pass at its pinned
//! tolerances and inside its runtime budget. One test per criterion; each
//! prints its summary line (visible with `--nocapture`).

use jth_core::verify::{run_suite, VerifyConfig};

fn run(name: &str) {
    let outcome = run_suite(name, &VerifyConfig::default()).expect("registered suite");
    println!("{}", outcome.summary_line());
    for failure in &outcome.failures {
        println!("    {failure}");
    }
    assert!(outcome.passed(), "{}", outcome.summary_line());
}

#[test]
fn criterion_1_closed_form_identities() {
    run("closed-form");
}

#[test]
fn criterion_2_symmetry_principle() {
    run("symmetry");
}

#[test]
fn criterion_3_triple_oracle_agreement() {
    run("triple-oracle");
}

#[test]
fn criterion_4_component_geometry() {
    run("component-geometry");
}

#[test]
fn criterion_5_sign_change_matches_phi_comparison() {
    run("phi-comparison");
}

#[test]
fn criterion_6_threshold_determinant_limits() {
    run("threshold-limits");
}

#[test]
fn criterion_7_virtual_states() {
    run("virtual-states");
}

#[test]
fn criterion_8_large_coupling() {
    run("large-coupling");
}

#[test]
fn criterion_9_cofactor_system_oracle() {
    run("linear-system");
}
