//! Recompute marked counts from Euler-class pairings.
//!
//! Each supported stratum carries a tower of bundle factors over the flag
//! variety; pairing the product of their Euler classes against `a^n lam^m`
//! must reproduce the recursion's marked count `N(PX_k, n, m)`. This runs
//! every route at small `n`, `m` and prints both sides.
//!
//! Run with `cargo run --example tower_cross_check`.

use curve_census::counts::{n_via_tower, tower_routes, Census};

fn main() {
    let census = Census::new();

    for route in tower_routes() {
        println!("route {} (target P{}):", route.label, route.target);
        for n in 0..=2 {
            for m in 0..=1 {
                let via_tower =
                    n_via_tower(route.stratum, route.extra.as_ref(), n, m).expect("tower pairs");
                let via_recursion = census.n_p(route.target, n, m).expect("supported key");
                let verdict = if via_tower == via_recursion {
                    "agree"
                } else {
                    "DISAGREE"
                };
                println!(
                    "  n={n} m={m}: tower = {via_tower} | recursion = {via_recursion}  [{verdict}]"
                );
                assert_eq!(via_tower, via_recursion);
            }
        }
        println!();
    }
    println!("every route agrees with the recursion");
}
