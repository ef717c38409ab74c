//! Exact counts of singular plane curves.
//!
//! This crate computes, as closed-form polynomials in the degree `d`, the
//! number of degree-`d` plane curves carrying one prescribed singularity of
//! type `A₁..A₇`, `D₄..D₇`, `E₆` or `E₇` and passing through a generic
//! point configuration, with the singular point optionally constrained to
//! generic lines. Everything is exact: coefficients are arbitrary-precision
//! rationals and every count is an integer-coefficient polynomial.
//!
//! The computation runs twice, by design:
//!
//! - [`counts`] drives a recursion in a three-generator intersection ring
//!   ([`cohomology`]), seeded by the nodal-curve counts and corrected by a
//!   fixed table of overcounting multiplicities;
//! - the same ring evaluates independent Euler-class products over the
//!   strata towers of [`bundles`], cross-checking the recursion wherever a
//!   clean tower exists.
//!
//! [`normalform`] re-derives the defining obstruction scalars of each
//! singularity type from truncated power series, both numerically and as
//! closed forms over a generic jet, and classifies explicit rational germs.
//!
//! [`counts::Census::verify_all`] runs every internal consistency check and
//! returns a named report; the `curve-census` binary exposes the whole
//! surface as a command line.

pub mod algebra;
pub mod bundles;
pub mod cli;
pub mod cohomology;
pub mod counts;
pub mod normalform;

pub use algebra::{DPoly, Rational};
pub use counts::{Census, CountError, Family, SingSpec};
pub use normalform::{classify, Germ, SingularityType};
