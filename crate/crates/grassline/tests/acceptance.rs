//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use grassline::cli::Bounds;
use grassline::selftest::run_suite;

const CRITERIA: [(&str, &str); 9] = [
    ("worked example round trips", "paper-examples"),
    ("normalizer at desk scale", "normalizer"),
    ("iota / pi / e", "iota-pi-e"),
    ("type-A data and dagger", "type-a"),
    ("type-D data and classification", "glr"),
    ("combinatorics golden values", "combinatorics"),
    ("dimension identities", "dimensions"),
    ("monad identity and fiber ranks", "monad"),
    ("property suite", "properties"),
];

fn main() -> ExitCode {
    let bounds = Bounds::default();
    let start = Instant::now();
    let mut failed = 0;
    for (k, (title, suite)) in CRITERIA.iter().enumerate() {
        let t = Instant::now();
        let rep = run_suite(suite, &bounds).expect("known suite");
        let bad: Vec<_> = rep.failures().collect();
        let status = if bad.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {status} {title} [{suite}: {} checks, {:.2}s]",
            k + 1,
            rep.checks.len(),
            t.elapsed().as_secs_f64()
        );
        for c in bad.iter().take(5) {
            println!("    {}: {}", c.name, c.witness.as_deref().unwrap_or(""));
        }
        if !bad.is_empty() {
            failed += 1;
        }
    }
    println!(
        "acceptance: {}/{} criteria passed in {:.2}s",
        CRITERIA.len() - failed,
        CRITERIA.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
