//! Closed-form counts for every supported singularity type.
//!
//! Prints the polynomial `N(X_k, n)` for each supported type with the
//! singular point free (`n = 0`), on one generic line (`n = 1`), and at a
//! fixed generic point (`n = 2`), then evaluates a few of them at small
//! degrees.
//!
//! Run with `cargo run --example census_counts`.

use curve_census::algebra::format_rational;
use curve_census::{Census, SingSpec};

fn main() {
    let census = Census::new();

    println!("closed forms in the degree d");
    println!("----------------------------");
    for spec in SingSpec::all() {
        for n in 0..=2 {
            let poly = census.n_final(spec, n).expect("supported key");
            println!("N({spec}, n={n}) = {poly}");
        }
        println!();
    }

    println!("sample evaluations");
    println!("------------------");
    let samples = [
        ("A1", 0, 2),
        ("A1", 0, 3),
        ("A2", 0, 3),
        ("D4", 1, 3),
        ("A4", 0, 3),
        ("E6", 0, 4),
        ("A7", 0, 8),
    ];
    for (tag, n, d) in samples {
        let spec = SingSpec::parse(tag).expect("valid tag");
        let poly = census.n_final(spec, n).expect("supported key");
        let value = format_rational(&poly.eval(d));
        let bound = spec.validity_bound();
        let note = if d < bound {
            format!("  (below the validity bound d >= {bound})")
        } else {
            String::new()
        };
        println!("N({tag}, n={n}) at d={d}: {value}{note}");
    }
}
