//! Truncated power series with exact coefficients.
//!
//! [`PowerSeries2`] is a bivariate series in `(x, y)` truncated at a fixed
//! total degree; [`UniSeries`] is its univariate companion. Both are generic
//! over an exact coefficient field ([`Coeff`]), which is instantiated with
//! rational numbers for concrete germs and with rational functions of jet
//! symbols for symbolic derivations.
//!
//! Stored coefficients are Taylor coefficients: the entry at `(i, j)` is
//! `c_{ij} = ρ_{ij}/(i!·j!)`, equivalently the monomial coefficient of
//! `x^i y^j`. The `rho`/`set_rho` accessors convert to and from the
//! derivative normalization `ρ_{ij}`.
//!
//! Invariants:
//! - no operation reads or writes beyond the truncation order;
//! - zero coefficients are never stored in the bivariate map.

use crate::algebra::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

use super::NormalFormError;

/// An exact coefficient field.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    /// Exact division. Panics if `rhs` is zero.
    fn div_by(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_int(n: i64) -> Self {
        crate::algebra::rat(n)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div_by(&self, rhs: &Self) -> Self {
        assert!(!Zero::is_zero(rhs), "division by zero coefficient");
        self / rhs
    }

    fn negated(&self) -> Self {
        -self
    }
}

/// `n!` in the coefficient field.
pub fn factorial<C: Coeff>(n: u32) -> C {
    let mut acc = C::one();
    for t in 2..=i64::from(n) {
        acc = acc.times(&C::from_int(t));
    }
    acc
}

/// Binomial coefficient as an exact integer (small arguments only).
pub fn binomial(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for t in 0..k {
        acc = acc * i64::from(n - t) / i64::from(t + 1);
    }
    acc
}

/// Univariate truncated power series, dense up to the truncation order.
#[derive(Debug, Clone, PartialEq)]
pub struct UniSeries<C: Coeff> {
    order: u32,
    coeffs: Vec<C>,
}

impl<C: Coeff> UniSeries<C> {
    /// The zero series at the given order.
    pub fn zeros(order: u32) -> Self {
        UniSeries {
            order,
            coeffs: vec![C::zero(); order as usize + 1],
        }
    }

    /// The constant series `1`.
    pub fn one(order: u32) -> Self {
        let mut s = UniSeries::zeros(order);
        s.coeffs[0] = C::one();
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, i: u32) -> &C {
        &self.coeffs[i as usize]
    }

    pub fn set(&mut self, i: u32, c: C) {
        assert!(i <= self.order, "index {i} beyond truncation {}", self.order);
        self.coeffs[i as usize] = c;
    }

    /// Subtract `c` from the coefficient of `t^i`.
    pub fn sub_at(&mut self, i: u32, c: &C) {
        let cur = self.coeffs[i as usize].minus(c);
        self.coeffs[i as usize] = cur;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "order mismatch");
        UniSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.plus(b))
                .collect(),
        }
    }

    /// Truncated product.
    pub fn times(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "order mismatch");
        let mut out: UniSeries<C> = UniSeries::zeros(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > self.order as usize {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].plus(&a.times(b));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        UniSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.times(c)).collect(),
        }
    }

    /// Multiply by `t^s`, truncating.
    pub fn shift_up(&self, s: u32) -> Self {
        let mut out = UniSeries::zeros(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            let target = i + s as usize;
            if target <= self.order as usize {
                out.coeffs[target] = a.clone();
            }
        }
        out
    }
}

/// Bivariate power series in `(x, y)` truncated at a total degree.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries2<C: Coeff> {
    order: u32,
    coeffs: BTreeMap<(u32, u32), C>,
}

impl<C: Coeff> PowerSeries2<C> {
    /// The zero series at the given truncation order.
    pub fn new(order: u32) -> Self {
        PowerSeries2 {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Taylor coefficient `c_{ij}` (the monomial coefficient of `x^i y^j`).
    pub fn coeff(&self, i: u32, j: u32) -> C {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(C::zero)
    }

    /// Set the Taylor coefficient of `x^i y^j`.
    pub fn set_coeff(&mut self, i: u32, j: u32, c: C) {
        assert!(
            i + j <= self.order,
            "term x^{i} y^{j} beyond truncation order {}",
            self.order
        );
        if c.is_zero() {
            self.coeffs.remove(&(i, j));
        } else {
            self.coeffs.insert((i, j), c);
        }
    }

    /// Add `c` to the Taylor coefficient of `x^i y^j`; silently drops terms
    /// beyond the truncation order.
    pub fn add_to(&mut self, i: u32, j: u32, c: &C) {
        if i + j > self.order || c.is_zero() {
            return;
        }
        let cur = self.coeff(i, j).plus(c);
        self.set_coeff(i, j, cur);
    }

    /// Derivative-normalized jet `ρ_{ij} = i!·j!·c_{ij}`.
    pub fn rho(&self, i: u32, j: u32) -> C {
        self.coeff(i, j)
            .times(&factorial::<C>(i))
            .times(&factorial::<C>(j))
    }

    /// Set the jet `ρ_{ij}`, storing `c_{ij} = ρ_{ij}/(i!·j!)`.
    pub fn set_rho(&mut self, i: u32, j: u32, v: C) {
        let denom = factorial::<C>(i).times(&factorial::<C>(j));
        self.set_coeff(i, j, v.div_by(&denom));
    }

    /// Nonzero terms `((i, j), c_{ij})` in key order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &C)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "order mismatch");
        let mut out = self.clone();
        for ((i, j), c) in rhs.terms() {
            out.add_to(i, j, c);
        }
        out
    }

    /// Truncated product.
    pub fn times(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "order mismatch");
        let mut out = PowerSeries2::new(self.order);
        for ((i1, j1), c1) in self.terms() {
            for ((i2, j2), c2) in rhs.terms() {
                if i1 + i2 + j1 + j2 <= self.order {
                    out.add_to(i1 + i2, j1 + j2, &c1.times(c2));
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = PowerSeries2::new(self.order);
        for ((i, j), v) in self.terms() {
            out.add_to(i, j, &v.times(c));
        }
        out
    }

    /// Restrict to a lower truncation order, dropping higher terms.
    pub fn truncate(&self, order: u32) -> Self {
        assert!(order <= self.order, "cannot raise the truncation order");
        let mut out = PowerSeries2::new(order);
        for ((i, j), c) in self.terms() {
            if i + j <= order {
                out.set_coeff(i, j, c.clone());
            }
        }
        out
    }

    /// The `y^j`-slice as a univariate series in `x`.
    pub fn y_slice(&self, j: u32) -> UniSeries<C> {
        let mut out = UniSeries::zeros(self.order);
        for ((i, jj), c) in self.terms() {
            if jj == j {
                out.set(i, c.clone());
            }
        }
        out
    }

    /// The `x^i`-slice as a univariate series in `y`.
    pub fn x_slice(&self, i: u32) -> UniSeries<C> {
        let mut out = UniSeries::zeros(self.order);
        for ((ii, j), c) in self.terms() {
            if ii == i {
                out.set(j, c.clone());
            }
        }
        out
    }

    /// Exact substitution `(x, y) = (a·x' + b·y', c·x' + d·y')`. A linear
    /// change preserves total degree, so no precision is lost.
    pub fn linear_change(&self, a: &C, b: &C, c: &C, d: &C) -> Self {
        let mut out = PowerSeries2::new(self.order);
        for ((i, j), v) in self.terms() {
            // (a x' + b y')^i expanded as pairs (s, i−s), likewise for j.
            for s in 0..=i {
                let x_part = C::from_int(binomial(i, s))
                    .times(&pow(a, s))
                    .times(&pow(b, i - s));
                if x_part.is_zero() {
                    continue;
                }
                for t in 0..=j {
                    let y_part = C::from_int(binomial(j, t))
                        .times(&pow(c, t))
                        .times(&pow(d, j - t));
                    if y_part.is_zero() {
                        continue;
                    }
                    let term = v.times(&x_part).times(&y_part);
                    out.add_to(s + t, (i - s) + (j - t), &term);
                }
            }
        }
        out
    }

    /// Divide exactly by `x`. The `x^0`-slice must vanish identically up to
    /// truncation; the quotient is reliable only to one order lower.
    ///
    /// Panics when the series is not divisible, which signals a bug in the
    /// caller's elimination step rather than a recoverable condition.
    pub fn div_x_exact(&self) -> Self {
        assert!(self.order >= 1, "cannot divide an order-0 series");
        let mut out = PowerSeries2::new(self.order - 1);
        for ((i, j), c) in self.terms() {
            assert!(
                i >= 1,
                "series not divisible by x: residual term x^0 y^{j} = {c:?}"
            );
            if (i - 1) + j <= out.order {
                out.set_coeff(i - 1, j, c.clone());
            }
        }
        out
    }
}

fn pow<C: Coeff>(base: &C, e: u32) -> C {
    let mut acc = C::one();
    for _ in 0..e {
        acc = acc.times(base);
    }
    acc
}

/// Binary operation selector for [`ps_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsOp {
    Add,
    Mul,
}

/// Checked arithmetic on equal-order series.
pub fn ps_arith<C: Coeff>(
    a: &PowerSeries2<C>,
    b: &PowerSeries2<C>,
    op: PsOp,
) -> Result<PowerSeries2<C>, NormalFormError> {
    if a.order() != b.order() {
        return Err(NormalFormError::OrderMismatch(a.order(), b.order()));
    }
    Ok(match op {
        PsOp::Add => a.plus(b),
        PsOp::Mul => a.times(b),
    })
}

/// Which variable a substitution shifts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftVar {
    /// `x → x₁ + g(y)`
    X,
    /// `y → y₁ + g(x)`
    Y,
}

/// Exact truncated substitution of one variable by itself plus a univariate
/// series in the other variable. `g` must have zero constant term and the
/// same truncation order as `rho`.
pub fn ps_compose_x<C: Coeff>(
    rho: &PowerSeries2<C>,
    g: &UniSeries<C>,
    which: ShiftVar,
) -> PowerSeries2<C> {
    assert_eq!(rho.order(), g.order(), "order mismatch");
    assert!(g.coeff(0).is_zero(), "substitution series must vanish at 0");
    let n = rho.order();
    let mut g_pows: Vec<UniSeries<C>> = Vec::with_capacity(n as usize + 1);
    g_pows.push(UniSeries::one(n));
    for _ in 1..=n {
        g_pows.push(g_pows.last().unwrap().times(g));
    }
    let mut out = PowerSeries2::new(n);
    for ((i, j), c) in rho.terms() {
        // The shifted exponent expands binomially; the unshifted variable's
        // exponent passes through.
        let (shifted_exp, fixed_exp) = match which {
            ShiftVar::X => (i, j),
            ShiftVar::Y => (j, i),
        };
        for s in 0..=shifted_exp {
            let bin = C::from_int(binomial(shifted_exp, s));
            let gp = &g_pows[(shifted_exp - s) as usize];
            for t in 0..=n {
                let gc = gp.coeff(t);
                if gc.is_zero() {
                    continue;
                }
                let term = c.times(&bin).times(gc);
                // g lives in the other variable, so its degree t adds to
                // the fixed variable's exponent.
                let (new_i, new_j) = match which {
                    ShiftVar::X => (s, fixed_exp + t),
                    ShiftVar::Y => (fixed_exp + t, s),
                };
                out.add_to(new_i, new_j, &term);
            }
        }
    }
    out
}
