//! Acceptance suite: one test per criterion, exact arithmetic, zero
//! tolerance. Each test prints a pass line so `--nocapture` yields a
//! criterion-by-criterion report; the assertions carry the failure detail.
//!
//! CONJAL_SEED overrides the sampling seed (default 0).

use conjal::suite::{run_suite, SuiteOutcome};

fn seed() -> u64 {
    std::env::var("CONJAL_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0)
}

fn run_criterion(n: usize, title: &str, suite: &str) -> SuiteOutcome {
    let outcome = run_suite(suite, seed()).expect("known suite");
    assert!(
        outcome.passed,
        "criterion {n} ({title}) failed:\n{}",
        outcome.failures.join("\n")
    );
    println!("CRITERION {n} ({title}): PASS ({} cases)", outcome.cases);
    for note in &outcome.notes {
        println!("  note: {note}");
    }
    outcome
}

#[test]
fn criterion_01_conjugation_axioms() {
    // (ab)* = b*a*, (a*)* = a, aa* = a*a, im(aa*) = 0 on all six catalog
    // algebras: exhaustive basis pairs plus 500 seeded pairs, exact equality
    run_criterion(1, "conjugation axioms", "conj_axioms");
}

#[test]
fn criterion_02_imaginary_products() {
    // 500 random zero-real-part pairs per algebra: (ab)* = ba,
    // re(ab) = re(ba), im(ab) = -im(ba)
    run_criterion(2, "imaginary products", "im_products");
}

#[test]
fn criterion_03_norm_multiplicativity() {
    // associative catalog: (ab)(ab)* = (aa*)(bb*) on all basis pairs and 500
    // random pairs; m in {3,4} factor chains; octonions recorded, not
    // asserted
    let outcome = run_criterion(3, "norm multiplicativity", "norm_mult");
    assert!(
        outcome.notes.iter().any(|n| n.contains("octonion")),
        "the octonion outcome must be recorded"
    );
}

#[test]
fn criterion_04_invertibility_oracle() {
    // quaternion/split-complex/dual over Z/3, exhaustive: classification
    // agrees with brute-force inverse and annihilator search for every
    // element
    run_criterion(4, "invertibility criterion vs oracle", "invertibility_oracle");
}

#[test]
fn criterion_05_inversion_identity() {
    // 500 random invertible integer quaternions: a a^-1 = a^-1 a = 1 in the
    // lift, with a^-1 = N(a)^-1 a*
    run_criterion(5, "inversion identity", "inversion_identity");
}

#[test]
fn criterion_06_fraction_lift() {
    // lift over Z -> Q: entrywise-equal structure constants, homomorphic
    // lift on 500 samples per algebra, d-scaling equivalence on 200 triples
    run_criterion(6, "fraction lift", "fraction_lift");
}

#[test]
fn criterion_07_polynomial_layer() {
    // flatten/eval agreement (50 trees x 50 points), tensor round trip and
    // contraction agreement, conjugation anti-homomorphism at evaluation
    // level, monomial norm polynomial on 200 pairs
    run_criterion(7, "polynomial layer", "polynomial_layer");
}

#[test]
fn criterion_08_conjugation_representability() {
    // quaternions: representation found, verified on all basis vectors and
    // equal to -(1/2)(x + ixi + jxj + kxk); complex: not representable;
    // substitution agreement on 200 points
    run_criterion(8, "conjugation representability", "conj_representability");
}

#[test]
fn criterion_09_ideals() {
    // certificates re-verify, zero-set inclusion exhaustive over Z/3 on
    // split-complex and dual numbers, polynomial membership controls at
    // degree bound 3, closure axioms with a negative control
    run_criterion(9, "ideals", "ideals");
}

#[test]
fn criterion_10_cli() {
    // parser round-trip corpus, CLI outputs equal library results
    // bit-exactly, suite exit code reflects aggregate status
    run_criterion(10, "cli and parser", "parser_cli");

    // the suite command aggregates pass/fail into its exit code
    let out = conjal::cli::run(&conjal::cli::Command::Suite {
        only: Some("invertibility_oracle".into()),
    });
    assert_eq!(out.exit, 0, "suite command failed: {}", out.stderr);
    assert!(out.stdout.contains("suite result: PASS"));
    let out = conjal::cli::run(&conjal::cli::Command::Suite { only: Some("nosuch".into()) });
    assert_eq!(out.exit, 2);

    // aggregate exit logic over synthetic outcomes
    let good = SuiteOutcome {
        name: "synthetic",
        passed: true,
        cases: 1,
        failures: vec![],
        notes: vec![],
    };
    let mut bad = good.clone();
    bad.passed = false;
    assert!(conjal::suite::all_passed(std::slice::from_ref(&good)));
    assert!(!conjal::suite::all_passed(&[good, bad]));
}
