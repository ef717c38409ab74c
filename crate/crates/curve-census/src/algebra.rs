//! Exact rational arithmetic and univariate polynomials in the degree symbol `d`.
//!
//! Every count produced by this crate is a polynomial in the curve degree `d`
//! with exact rational coefficients ([`DPoly`]). Coefficients are
//! arbitrary-precision rationals ([`Rational`]); nothing in the crate ever
//! rounds.
//!
//! Invariants:
//! - `Rational` values are always in lowest terms with a positive denominator
//!   (maintained by the underlying `num_rational::Ratio`).
//! - `DPoly` stores dense ascending coefficients with no trailing zero; the
//!   zero polynomial has an empty coefficient list.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Exact arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parse a rational from `"p"` or `"p/q"` text.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(p))
        }
    }
}

/// Render a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Error raised by [`DPoly::div_exact`] when a coefficient fails to divide.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivError {
    /// A coefficient of the dividend is not an integer multiple of the divisor.
    #[error("non-integral division: coefficient {coeff} is not divisible by {divisor}")]
    NonIntegralDivision { coeff: String, divisor: i64 },
}

/// Polynomial in the symbolic degree `d` with exact rational coefficients.
///
/// Stored dense and ascending: `coeffs[k]` is the coefficient of `d^k`.
/// Canonical form never keeps a trailing zero, so `deg` of a nonzero
/// polynomial is `coeffs.len() - 1` and the zero polynomial is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DPoly {
    coeffs: Vec<Rational>,
}

impl DPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        DPoly { coeffs: Vec::new() }
    }

    /// Constant polynomial.
    pub fn constant(c: Rational) -> Self {
        DPoly::from_coeffs(vec![c])
    }

    /// Constant polynomial from an integer.
    pub fn from_int(n: i64) -> Self {
        DPoly::constant(rat(n))
    }

    /// The monomial `d`.
    pub fn d() -> Self {
        DPoly::from_coeffs(vec![rat(0), rat(1)])
    }

    /// Linear polynomial `a*d + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        DPoly::from_coeffs(vec![rat(b), rat(a)])
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DPoly { coeffs }
    }

    /// Ascending coefficients (no trailing zero).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `d^k` (zero when `k` exceeds the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn add(&self, rhs: &DPoly) -> DPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        DPoly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &DPoly) -> DPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        DPoly::from_coeffs(out)
    }

    pub fn mul(&self, rhs: &DPoly) -> DPoly {
        if self.is_zero() || rhs.is_zero() {
            return DPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> DPoly {
        DPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Scale by an integer.
    pub fn scale(&self, c: i64) -> DPoly {
        let c = rat(c);
        DPoly::from_coeffs(self.coeffs.iter().map(|a| a * &c).collect())
    }

    /// Exact Horner evaluation at an integer value of `d`.
    pub fn eval(&self, d_value: i64) -> Rational {
        let d = rat(d_value);
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &d + c;
        }
        acc
    }

    /// Divide by a nonzero integer, demanding that every coefficient of
    /// `self` is an integer divisible by `c` over the integers.
    ///
    /// Panics if `c == 0`; fails with [`DivError::NonIntegralDivision`] when a
    /// coefficient does not divide, which signals a transcription bug in the
    /// caller's data rather than a user error.
    pub fn div_exact(&self, c: i64) -> Result<DPoly, DivError> {
        assert!(c != 0, "division by zero");
        let divisor = rat(c);
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let q = a / &divisor;
            if !q.denom().is_one() {
                return Err(DivError::NonIntegralDivision {
                    coeff: format_rational(a),
                    divisor: c,
                });
            }
            out.push(q);
        }
        Ok(DPoly::from_coeffs(out))
    }
}

/// Pointwise binary operation selector for [`dpoly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DPolyOp {
    Add,
    Sub,
    Mul,
}

/// Apply `op` to two polynomials, returning the exact canonical result.
pub fn dpoly_arith(lhs: &DPoly, rhs: &DPoly, op: DPolyOp) -> DPoly {
    match op {
        DPolyOp::Add => lhs.add(rhs),
        DPolyOp::Sub => lhs.sub(rhs),
        DPolyOp::Mul => lhs.mul(rhs),
    }
}

impl fmt::Display for DPoly {
    /// Canonical rendering: descending powers, `c_k*d^k ± ... ± c_0`.
    ///
    /// Unit coefficients are elided (`d^2`, not `1*d^2`), exponent one prints
    /// as `d`, and non-integer coefficients print as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            if !unit || k == 0 {
                write!(f, "{}", format_rational(&mag))?;
            }
            if k > 0 {
                if !unit {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "d")?;
                } else {
                    write!(f, "d^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> DPoly {
        DPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn add_matches_expected() {
        // (3d^2 - 6d + 3) + (6d^2 - 33d + 27) = 9d^2 - 39d + 30
        let lhs = p(&[3, -6, 3]);
        let rhs = p(&[27, -33, 6]);
        assert_eq!(dpoly_arith(&lhs, &rhs, DPolyOp::Add), p(&[30, -39, 9]));
    }

    #[test]
    fn mul_matches_expected() {
        // (d - 1)(d - 2) = d^2 - 3d + 2
        let lhs = p(&[-1, 1]);
        let rhs = p(&[-2, 1]);
        assert_eq!(dpoly_arith(&lhs, &rhs, DPolyOp::Mul), p(&[2, -3, 1]));
    }

    #[test]
    fn sub_self_is_zero() {
        let q = p(&[7, 0, -4, 9]);
        assert!(dpoly_arith(&q, &q, DPolyOp::Sub).is_zero());
    }

    #[test]
    fn eval_spot_values() {
        // 3(d-1)^2 = 3d^2 - 6d + 3
        let q = p(&[3, -6, 3]);
        assert_eq!(q.eval(2), rat(3));
        assert_eq!(q.eval(3), rat(12));
        assert_eq!(DPoly::zero().eval(100), rat(0));
    }

    #[test]
    fn div_exact_succeeds_on_divisible() {
        let q = p(&[180, -180, 45]);
        assert_eq!(q.div_exact(3).unwrap(), p(&[60, -60, 15]));
        assert_eq!(p(&[-12, 6]).div_exact(3).unwrap(), p(&[-4, 2]));
    }

    #[test]
    fn div_exact_rejects_non_integral() {
        let q = p(&[1, 1]);
        assert!(matches!(
            q.div_exact(2),
            Err(DivError::NonIntegralDivision { .. })
        ));
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        let q = DPoly::from_coeffs(vec![rat(1), rat(0), rat(0)]);
        assert_eq!(q.degree(), Some(0));
        assert!(DPoly::from_coeffs(vec![rat(0)]).is_zero());
    }

    #[test]
    fn display_follows_descending_convention() {
        assert_eq!(p(&[24, -36, 12]).to_string(), "12*d^2 - 36*d + 24");
        assert_eq!(p(&[2, -3, 1]).to_string(), "d^2 - 3*d + 2");
        assert_eq!(p(&[-3, 3]).to_string(), "3*d - 3");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(DPoly::zero().to_string(), "0");
        let half = DPoly::from_coeffs(vec![rat(0), ratio(1, 2)]);
        assert_eq!(half.to_string(), "1/2*d");
    }

    #[test]
    fn parse_and_format_rationals() {
        assert_eq!(parse_rational("3/4"), Some(ratio(3, 4)));
        assert_eq!(parse_rational("-7"), Some(rat(-7)));
        assert_eq!(parse_rational("4/0"), None);
        assert_eq!(format_rational(&ratio(-3, 6)), "-1/2");
        assert_eq!(format_rational(&rat(5)), "5");
    }
}
