//! Acceptance suite: runs every criterion of the built-in verification
//! corpus and prints one pass/fail line per criterion.
//!
//! Run with `cargo test -p algebroid --test acceptance -- --nocapture` to
//! see the per-criterion lines.

use algebroid::verify;

#[test]
fn acceptance_corpus() {
    let outcomes = verify::run_all();
    assert_eq!(outcomes.len(), 18, "the corpus has 18 criteria");
    let mut failures = Vec::new();
    for o in &outcomes {
        let status = if o.passed { "pass" } else { "FAIL" };
        println!("criterion {:02} [{status}] {}: {}", o.id, o.name, o.detail);
        if !o.passed {
            failures.push(format!("{:02} {}: {}", o.id, o.name, o.detail));
        }
    }
    assert!(
        failures.is_empty(),
        "failed criteria:\n{}",
        failures.join("\n")
    );
}
