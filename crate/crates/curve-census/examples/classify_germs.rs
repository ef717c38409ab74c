//! Classify germs of plane curves at a point.
//!
//! Builds the model germ of every supported type, plus a few disguised
//! versions (translated away from the origin, sheared, rescaled), and
//! prints the classification of each.
//!
//! Run with `cargo run --example classify_germs`.

use curve_census::algebra::rat;
use curve_census::normalform::classify;
use curve_census::Germ;

fn model(terms: &[(u32, u32, i64)]) -> Germ {
    Germ::from_monomials(terms)
}

fn main() {
    let origin = (rat(0), rat(0));

    let models: Vec<(&str, Germ)> = vec![
        ("y^2 + x^2", model(&[(0, 2, 1), (2, 0, 1)])),
        ("y^2 + x^3", model(&[(0, 2, 1), (3, 0, 1)])),
        ("y^2 + x^4", model(&[(0, 2, 1), (4, 0, 1)])),
        ("y^2 + x^8", model(&[(0, 2, 1), (8, 0, 1)])),
        ("x*y^2 + x^3", model(&[(1, 2, 1), (3, 0, 1)])),
        ("x*y^2 + x^4", model(&[(1, 2, 1), (4, 0, 1)])),
        ("x*y^2 + x^6", model(&[(1, 2, 1), (6, 0, 1)])),
        ("y^3 + x^4", model(&[(0, 3, 1), (4, 0, 1)])),
        ("y^3 + x^3*y", model(&[(0, 3, 1), (3, 1, 1)])),
        ("y^3 + x^5", model(&[(0, 3, 1), (5, 0, 1)])),
        ("x^4 + y^4", model(&[(4, 0, 1), (0, 4, 1)])),
    ];

    println!("model germs at the origin");
    println!("-------------------------");
    for (text, germ) in &models {
        let outcome = classify(germ, (&origin.0, &origin.1), 12).expect("on curve");
        println!("{text:<16} -> {outcome}");
    }

    println!();
    println!("disguised germs");
    println!("---------------");

    // The cusp moved to the point (2, -3).
    let moved = model(&[(0, 2, 1), (3, 0, 1)]).translate(&rat(-2), &rat(3));
    let at = (rat(2), rat(-3));
    let outcome = classify(&moved, (&at.0, &at.1), 12).expect("on curve");
    println!("cusp at (2, -3)      -> {outcome}");

    // The tacnode sheared by x -> x + y.
    let sheared = model(&[(0, 2, 1), (4, 0, 1)]).linear_change(&rat(1), &rat(1), &rat(0), &rat(1));
    let outcome = classify(&sheared, (&origin.0, &origin.1), 12).expect("on curve");
    println!("sheared tacnode      -> {outcome}");

    // A D5 with the repeated tangent direction off-axis, rescaled by 7.
    let tilted = model(&[(1, 2, 1), (4, 0, 1)])
        .linear_change(&rat(1), &rat(0), &rat(1), &rat(1))
        .scale(&rat(7));
    let outcome = classify(&tilted, (&origin.0, &origin.1), 12).expect("on curve");
    println!("tilted, rescaled D5  -> {outcome}");
}
