//! Truncated power-series normal forms.
//!
//! This family of modules re-derives the obstruction scalars that drive the
//! enumerative recursion from first principles: [`series`] provides exact
//! truncated power series over a generic coefficient field, [`elim`] runs the
//! branch eliminations producing the `A_k` and `D_k` scalars and the
//! auxiliary discriminants, [`symbolic`] instantiates the same engines over
//! rational functions of jet symbols to emit closed forms, and [`classify`]
//! decides the singularity type of an explicit rational germ.

pub mod classify;
pub mod elim;
pub mod series;
pub mod symbolic;

pub use classify::{classify, parse_germ, Classification, Germ, SingularityType, Witness};
pub use elim::{
    a_invariants, d_invariants, dual_quantities, solve_b, solve_h, AInvariants, DInvariants,
    DualQuantities,
};
pub use series::{
    ps_arith, ps_compose_x, Coeff, PowerSeries2, PsOp, ShiftVar, UniSeries,
};
pub use symbolic::{generic_a_jet, generic_d_jet, render_invariant, MPoly, RatFunc};

use thiserror::Error;

/// Errors reported by the normal-form engines.
#[derive(Debug, Error)]
pub enum NormalFormError {
    /// Arithmetic on series with different truncation orders.
    #[error("truncation order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    /// The `y²` jet entry vanishes where the branch elimination needs it.
    #[error("degenerate quadratic jet: rho02 vanishes")]
    DegenerateQuadratic,
    /// The `xy²` jet entry vanishes where the vertical elimination needs it.
    #[error("degenerate cubic jet: rho12 vanishes")]
    DegenerateCubic,
    /// The requested invariant index needs a deeper truncation.
    #[error("truncation order {order} is too low to read index {k}")]
    TruncationTooLow { order: u32, k: u32 },
    /// A jet entry that must vanish before elimination does not.
    #[error("jet precondition violated: {symbol} must vanish")]
    JetNotReduced { symbol: &'static str },
    /// The germ does not pass through the requested point.
    #[error("point is not on the curve: germ value {value}")]
    NotOnCurve { value: String },
    /// Malformed germ file.
    #[error("germ parse error: {0}")]
    Parse(String),
    /// An internal consistency guarantee failed; this is a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
