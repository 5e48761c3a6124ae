//! One test per acceptance criterion. Run with `--nocapture` to see the
//! report lines.

use greedyconv::suite::{self, CheckReport};

fn run(check: fn() -> greedyconv::Result<CheckReport>) {
    let report = check().expect("check failed to run");
    println!("{report}");
    assert!(report.passed, "{report}");
}

#[test]
fn criterion_1_table_fidelity() {
    run(suite::table_fidelity);
}

#[test]
fn criterion_2_structure_laws() {
    run(suite::structure_laws);
}

#[test]
fn criterion_3_sifting_oracles() {
    run(suite::sifting_oracles);
}

#[test]
fn criterion_4_ring_laws() {
    run(suite::ring_laws);
}

#[test]
fn criterion_5_densities() {
    run(suite::densities);
}

#[test]
fn criterion_6_sift_search() {
    run(suite::sift_search);
}

#[test]
fn criterion_7_gap_statistics() {
    run(suite::gap_statistics);
}

#[test]
fn criterion_8_cross_construction() {
    run(suite::cross_construction);
}
