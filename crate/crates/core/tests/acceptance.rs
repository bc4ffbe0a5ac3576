//! Acceptance suite: runs every verification block at its contract bounds
//! and prints one pass/fail line per criterion. All comparisons are exact
//! identities over the rational-function field.

use std::time::Instant;

use cms_core::exec::ExecMode;
use cms_core::verify::{run_suite, Bounds, Suite, SuiteReport};
use cms_core::Context;

fn run(criterion: &str, suite: Suite, bounds: Bounds) -> SuiteReport {
    let ctx = Context::new();
    let start = Instant::now();
    let report = run_suite(&ctx, suite, bounds, ExecMode::Parallel).expect("suite runs");
    let elapsed = start.elapsed().as_secs_f64();
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion}: {verdict} ({} checks, {elapsed:.1}s)",
        report.items.len()
    );
    for item in report.items.iter().filter(|i| !i.pass) {
        println!(
            "  failed: {} -- {}",
            item.label,
            item.detail.clone().unwrap_or_default()
        );
    }
    report
}

#[test]
fn criterion_01_commutators() {
    let report = run(
        "1 (commutator relations, weight <= 5, indices <= 3)",
        Suite::Commutators,
        Bounds { max_weight: Some(5), ..Bounds::default() },
    );
    assert!(report.passed());
}

#[test]
fn criterion_02_actions() {
    let report = run(
        "2 (generator actions on the Jack basis, weight <= 5)",
        Suite::Actions,
        Bounds { max_weight: Some(5), ..Bounds::default() },
    );
    assert!(report.passed());
}

#[test]
fn criterion_03_jack_consistency() {
    let report = run(
        "3 (Jack triangular solve and Schur integrality, weight <= 5)",
        Suite::Jack,
        Bounds { max_weight: Some(5), ..Bounds::default() },
    );
    assert!(report.passed());
}

#[test]
fn criterion_04_stanley() {
    let report = run(
        "4 (evaluation product formula, weight <= 6)",
        Suite::Stanley,
        Bounds { max_weight: Some(6), ..Bounds::default() },
    );
    assert!(report.passed());
}

#[test]
fn criterion_05_hermite_triple() {
    let report = run(
        "5 (hermite constructive = solver = product, weight <= 5)",
        Suite::Hermite,
        Bounds { max_weight: Some(5), ..Bounds::default() },
    );
    assert!(report.passed());
}

#[test]
fn criterion_06_dualities() {
    let report = run(
        "6 (hermite and laguerre dualities, weight <= 4)",
        Suite::Duality,
        Bounds { max_weight: Some(4), ..Bounds::default() },
    );
    assert!(report.passed());
}

#[test]
fn criterion_07_laguerre_symmetry() {
    let report = run(
        "7 (laguerre parameter symmetry, weight <= 4)",
        Suite::Laguerre,
        Bounds { max_weight: Some(4), ..Bounds::default() },
    );
    assert!(report.passed());
}

#[test]
fn criterion_08_pieri() {
    let report = run(
        "8 (Pieri closed forms and structure, weight <= 5 / r <= 2)",
        Suite::Pieri,
        Bounds { max_weight: Some(5), max_r: Some(2), ..Bounds::default() },
    );
    assert!(report.passed());
}

#[test]
fn criterion_09_ideals() {
    let report = run(
        "9 (invariant ideals at special parameter values, weight <= 5)",
        Suite::Ideals,
        Bounds {
            max_weight: Some(5),
            max_n: Some(2),
            max_m: Some(2),
            max_r: Some(2),
            ..Bounds::default()
        },
    );
    assert!(report.passed());
}

#[test]
fn criterion_10_hypergeometric() {
    let report = run(
        "10 (hypergeometric residuals at degree 4, generating functions at 3)",
        Suite::Hyper,
        Bounds { degree: Some(4), ..Bounds::default() },
    );
    assert!(report.passed());
}

#[test]
fn criterion_11_super() {
    let report = run(
        "11 (super kernel, intertwining, swap identity, dualities)",
        Suite::Super,
        Bounds {
            max_weight: Some(4),
            max_n: Some(2),
            max_m: Some(2),
            ..Bounds::default()
        },
    );
    assert!(report.passed());
}

#[test]
fn criterion_12_limits() {
    let report = run(
        "12 (limit transitions to hermite and laguerre, weight <= 3)",
        Suite::Limits,
        Bounds { max_weight: Some(3), ..Bounds::default() },
    );
    assert!(report.passed());
    // the conjectural scaling limit is reported but never gates
    let informational = run(
        "12b (conjectural scaling limit, weight <= 4, informational)",
        Suite::Conjecture,
        Bounds { max_weight: Some(4), ..Bounds::default() },
    );
    println!(
        "conjectural transition verdicts: {}",
        informational
            .items
            .iter()
            .map(|i| format!("{}={}", i.label, if i.pass { "equal" } else { "not-equal" }))
            .collect::<Vec<_>>()
            .join("; ")
    );
}
