//! Acceptance suite: one test per validation criterion, each printing a
//! pass/fail line with the measured value and its pinned tolerance.
//!
//! Run with `cargo test -p softedge --test acceptance` (the workspace test
//! run includes it). The Monte-Carlo tests draw the full budgets
//! (10^6/10^7/10^5 samples) and dominate the runtime.

use softedge::checks::{self, CheckResult};

fn report(result: &CheckResult) {
    println!(
        "[{}] {}: measured {:.6e} vs tolerance {:.6e} ({} ms) - {}",
        if result.passed { "PASS" } else { "FAIL" },
        result.name,
        result.measured,
        result.tolerance,
        result.runtime_ms,
        result.detail
    );
}

fn assert_check(result: CheckResult) {
    report(&result);
    assert!(
        result.passed,
        "criterion `{}` failed: measured {:.6e} vs tolerance {:.6e}; {}",
        result.name, result.measured, result.tolerance, result.detail
    );
}

// Criterion 1 (runtime budget: < 30 s).
#[test]
fn criterion_01_dual_oracle_tracy_widom() {
    let start = std::time::Instant::now();
    assert_check(checks::check_dual_oracle_f2());
    assert!(start.elapsed().as_secs() < 30, "runtime budget exceeded");
}

// Criterion 2.
#[test]
fn criterion_02_gue_density_bounds() {
    assert_check(checks::check_bound_gue_density(false));
    assert_check(checks::check_bound_gue_density(true));
}

// Criterion 3.
#[test]
fn criterion_03_expansion_order() {
    assert_check(checks::check_expansion_order(
        softedge::expansion::EnsembleKind::Gaussian,
    ));
    assert_check(checks::check_expansion_order(
        softedge::expansion::EnsembleKind::Laguerre,
    ));
}

// Criterion 4.
#[test]
fn criterion_04_kernel_expansion() {
    assert_check(checks::check_kernel_expansion(
        softedge::expansion::EnsembleKind::Gaussian,
    ));
    assert_check(checks::check_kernel_expansion(
        softedge::expansion::EnsembleKind::Laguerre,
    ));
}

// Criterion 5.
#[test]
fn criterion_05_part2_algebra_exact() {
    assert_check(checks::check_m1_system());
    assert_check(checks::check_m23_transformations());
}

// Criterion 6.
#[test]
fn criterion_06_part3_recursions_exact() {
    assert_check(checks::check_pq_recursions());
}

// Criterion 7.
#[test]
fn criterion_07_wave_expansion_order() {
    assert_check(checks::check_wave_expansion_order(
        softedge::expansion::WaveCase::Hermite,
    ));
    assert_check(checks::check_wave_expansion_order(
        softedge::expansion::WaveCase::Laguerre,
    ));
}

// Criterion 8 (runtime budget: <= 30 min for the whole Monte-Carlo block).
#[test]
fn criterion_08_monte_carlo() {
    let budget = checks::McBudget::default();
    let start = std::time::Instant::now();
    assert_check(checks::check_mc_calibration(budget.calibration));
    assert_check(checks::check_mc_panel(
        softedge::expansion::EnsembleKind::Gaussian,
        budget.panel,
    ));
    assert_check(checks::check_mc_panel(
        softedge::expansion::EnsembleKind::Laguerre,
        budget.panel,
    ));
    assert_check(checks::check_mc_decimation(budget.decimation));
    assert_check(checks::check_mc_superposition(budget.superposition));
    assert!(
        start.elapsed().as_secs() < 30 * 60,
        "Monte-Carlo runtime budget exceeded"
    );
}

// Criterion 9.
#[test]
fn criterion_09_laguerre_to_gaussian() {
    assert_check(checks::check_laguerre_to_gaussian());
    assert_check(checks::check_wishart_symmetry_det());
}

// Criterion 10.
#[test]
fn criterion_10_appendix_a() {
    assert_check(checks::check_appendix_a());
    assert_check(checks::check_single_coefficient_correction());
}
