//! Run the full internal cross-check suite and print its report.
//!
//! This exercises every consistency route the library knows about: frozen
//! seed values, the first-Chern-class pattern of each recursion bundle,
//! tower pairings against recursion counts, the dual-route comparison,
//! divisibility and degree facts, and the ring identity satisfied by the
//! marked counts.
//!
//! Run with `cargo run --example verify_report`.

use curve_census::Census;

fn main() {
    let census = Census::new();
    let report = census.verify_all();

    let mut by_prefix: Vec<(&str, usize)> = Vec::new();
    for check in &report.checks {
        let prefix = check.name.split([' ', '[']).next().unwrap_or("other");
        match by_prefix.iter_mut().find(|(p, _)| *p == prefix) {
            Some((_, count)) => *count += 1,
            None => by_prefix.push((prefix, 1)),
        }
    }

    println!("check groups");
    println!("------------");
    for (prefix, count) in &by_prefix {
        println!("{prefix:<28} {count:>4} checks");
    }
    println!();

    for failure in report.failures() {
        println!("FAIL {}: {}", failure.name, failure.detail);
    }
    if report.all_passed() {
        println!("all {} checks passed", report.checks.len());
    } else {
        let failed = report.checks.iter().filter(|c| !c.passed).count();
        println!("{failed} of {} checks failed", report.checks.len());
        std::process::exit(1);
    }
}
