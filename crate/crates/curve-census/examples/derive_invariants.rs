//! Derive the branch obstruction scalars over a fully generic jet.
//!
//! The elimination engines run over rational functions in the jet symbols
//! `f_ij` instead of concrete numbers, so the same code that classifies a
//! germ also produces the closed forms of the obstruction scalars. The
//! higher D-series forms are reported on the locus where the previous
//! obstruction vanishes (no `f40` terms).
//!
//! Run with `cargo run --example derive_invariants`.

use curve_census::normalform::{
    a_invariants, d_invariants, generic_a_jet, generic_d_jet, render_invariant,
};

fn main() {
    println!("A-series");
    println!("--------");
    for k in 3..=7 {
        let inv = a_invariants(&generic_a_jet(k), k).expect("well-posed jet");
        println!("A{k} = {}", render_invariant(inv.a(k).expect("computed")));
    }

    println!();
    println!("D-series");
    println!("--------");
    for k in 6..=8 {
        let inv = d_invariants(&generic_d_jet(k - 2), k).expect("well-posed jet");
        let value = inv.d(k).expect("computed");
        let reported = if k >= 7 {
            value.with_var_zeroed(4, 0)
        } else {
            value.clone()
        };
        println!("D{k} = {}", render_invariant(&reported));
    }
}
