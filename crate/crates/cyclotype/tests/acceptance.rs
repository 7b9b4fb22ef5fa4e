//! Release gate. One test per criterion, each printing its pass/fail line;
//! run with `cargo test --test acceptance -- --nocapture` to see them all.
//!
//! Everything is exact arithmetic with pinned seeds, so each criterion is
//! a zero-tolerance equality check.

use cyclotype::catalog::Catalog;
use cyclotype::crosscheck::{self, CriterionResult};

fn gate(r: &CriterionResult) {
    println!(
        "[{}] {}  ({})",
        if r.passed { "pass" } else { "FAIL" },
        r.name,
        r.detail
    );
    assert!(r.passed, "{}: {}", r.name, r.detail);
}

#[test]
fn criterion_1_oracle_classifier_equivalence() {
    // every admissible partition with n <= 8 for sl and sp, 7 <= n <= 10
    // for so; three oracle trials with seeds 0, 1, 2
    let results = crosscheck::oracle_classifier_equivalence(3, 0);
    gate(&results[0]);
}

#[test]
fn criterion_2_parity_law() {
    let results = crosscheck::oracle_classifier_equivalence(3, 0);
    gate(&results[1]);
}

#[test]
fn criterion_3_nilpotent_jordan_images() {
    // so partitions with n <= 12, n_1 odd, n_1 - n_2 = 1; three seeds each
    gate(&crosscheck::nilpotent_jordan_images(&[0, 1, 2]));
}

#[test]
fn criterion_4_grading_consistency() {
    gate(&crosscheck::grading_consistency());
}

#[test]
fn criterion_5_class_count_table() {
    let cat = Catalog::load().expect("bundled data loads");
    gate(&crosscheck::table01_counts(&cat));
}

#[test]
fn criterion_6_orbit_table_verification() {
    let cat = Catalog::load().expect("bundled data loads");
    gate(&crosscheck::catalog_checks(&cat)[0]);
}

#[test]
fn criterion_7_diagram_tables() {
    let cat = Catalog::load().expect("bundled data loads");
    gate(&crosscheck::catalog_checks(&cat)[1]);
}

#[test]
fn criterion_8_bush_coherence() {
    gate(&crosscheck::bush_coherence());
}
