//! Acceptance suite: one test per criterion, each driving the corresponding
//! check of the verification suite and printing its pass/fail line.

use p3dt_core::euler::EulerTable;
use p3dt_core::suite::{run_suite, SuiteOptions};

fn run_criterion(id: &str) {
    let options = SuiteOptions { table: EulerTable::standard(), only: Some(id.to_string()) };
    let reports = run_suite(&options);
    assert_eq!(reports.len(), 1, "exactly one check matches {id}");
    let report = &reports[0];
    let status = if report.passed { "PASS" } else { "FAIL" };
    println!("{status}  {:<24} {}", report.id, report.details);
    assert!(report.passed, "{}: {}", report.id, report.details);
}

#[test]
fn criterion_1_quadratic_invariants() {
    // quadratic --n 2|4|6 returns exactly 10, 25, -50 in both symbolic and
    // numeric modes, each run well under the 10 s budget
    run_criterion("quadratic-invariants");
}

#[test]
fn criterion_2_odd_vanishing() {
    // n in {1, 3, 5, 7} return exactly 0
    run_criterion("odd-vanishing");
}

#[test]
fn criterion_3_golden_euler_classes() {
    // for n <= 6 every fixed point's factored Euler class matches its
    // printed formula up to canonical factor orientation, and the four
    // zero points carry the trivial-subrepresentation diagnostic
    run_criterion("golden-euler-classes");
}

#[test]
fn criterion_4_parameter_independence() {
    // identical totals for (7,1), (9,1), (11,1), (13,1), (17,3), (19,3),
    // spanning all congruence classes of (a, b) mod 4
    run_criterion("param-independence");
}

#[test]
fn criterion_5_length_eight_refusal() {
    // length eight is refused, naming a fixed point whose Ext^1 trace
    // contains weight 0 (the (x, y^2, z^2) family); the CLI exit code is
    // covered by the command-line crate's tests
    run_criterion("n8-refusal");
}

#[test]
fn criterion_6_classical_crosscheck() {
    // classical degrees 20 and 150 at two distinct generic parameter
    // choices, under the 30 s budget
    run_criterion("classical-crosscheck");
}

#[test]
fn criterion_7_series() {
    // M(-q^2)^{-10} = 1 + 10q^2 + 25q^4 - 50q^6 - 240q^8 exactly, and the
    // series comparison agrees with the computed quadratic degrees
    run_criterion("series");
}

#[test]
fn criterion_8_property_suites() {
    // trace inversion symmetry (sizes <= 4), the Koszul identity
    // (p, q, r <= 3), partition counts against the MacMahon coefficients
    // (m <= 8), and rank/torsion balance at every point with n <= 6
    run_criterion("property-suites");
}
