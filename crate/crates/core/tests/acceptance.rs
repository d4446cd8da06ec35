use std::io::Write;

use brauer::suites::run_criterion;

fn seed() -> u64 {
    std::env::var("BRAUER_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(20_240_601)
}

fn criterion(id: u8) {
    let r = run_criterion(id, seed());
    let mut report = format!("{}\n", r.line());
    for c in r.checks.iter().filter(|c| !c.passed) {
        report.push_str(&format!("  {}: {}\n", c.name, c.detail));
    }
    // straight to the handle so the line shows up without --nocapture
    std::io::stderr().write_all(report.as_bytes()).unwrap();
    assert!(r.passed, "{}", r.line());
}

#[test]
fn criterion_1_presentation() {
    criterion(1);
}

#[test]
fn criterion_2_jucys_murphy() {
    criterion(2);
}

#[test]
fn criterion_3_representations() {
    criterion(3);
}

#[test]
fn criterion_4_rank_one_fibers() {
    criterion(4);
}

#[test]
fn criterion_5_central_series() {
    criterion(5);
}

#[test]
fn criterion_6_tensor_oracle() {
    criterion(6);
}

#[test]
fn criterion_7_spectral_separation() {
    criterion(7);
}

#[test]
fn criterion_8_affine() {
    criterion(8);
}
