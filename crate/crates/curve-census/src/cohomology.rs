//! Arithmetic in the cohomology ring of the ambient incidence space.
//!
//! The ring is generated by three classes: `y` (hyperplane class of the
//! linear system of degree-`d` curves), `a` (hyperplane class of the plane),
//! and `λ` (the tautological class on the projectivised tangent bundle),
//! subject to the relations `a³ = 0` and `λ² = −3aλ − 3a²`. Coefficients are
//! polynomials in `d` ([`DPoly`]).
//!
//! Invariants:
//! - Every stored key is fully reduced: `a`-exponent at most 2, `λ`-exponent
//!   at most 1. Relations are applied eagerly on every insertion.
//! - Zero coefficients are never stored.
//! - The `y`-exponent is a small absolute exponent; the symbolic top power
//!   `y^{δ_d}` never enters a class. [`pair`] accounts for it by reading the
//!   coefficient of `y^deficit` against the appropriate fundamental class.

use crate::algebra::DPoly;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Which fundamental class a [`pair`] evaluation integrates against.
///
/// `P2` pairs against `y^{δ_d} a²`; `PTP2` pairs against `y^{δ_d} a² λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Base {
    P2,
    PTP2,
}

/// Error raised by [`pair`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    /// The requested `y`-codimension is negative, so no monomial can match.
    #[error("negative deficit: y-codimension {0} is negative")]
    NegativeDeficit(i64),
}

/// Monomial exponents `(y_power, a_power, lam_power)` of a reduced term.
type Key = (u32, u8, u8);

/// An element of the quotient ring, stored as reduced monomials with
/// [`DPoly`] coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CohClass {
    terms: BTreeMap<Key, DPoly>,
}

impl CohClass {
    /// The zero class.
    pub fn zero() -> Self {
        CohClass::default()
    }

    /// The multiplicative unit.
    pub fn one() -> Self {
        CohClass::monomial(0, 0, 0, DPoly::from_int(1))
    }

    /// The generator `y`.
    pub fn y() -> Self {
        CohClass::monomial(1, 0, 0, DPoly::from_int(1))
    }

    /// The generator `a`.
    pub fn a() -> Self {
        CohClass::monomial(0, 1, 0, DPoly::from_int(1))
    }

    /// The generator `λ`.
    pub fn lam() -> Self {
        CohClass::monomial(0, 0, 1, DPoly::from_int(1))
    }

    /// A single monomial `coeff · y^p a^j λ^l`, reduced on construction.
    ///
    /// Exponents beyond the reduced range are legal inputs: `a^3` collapses
    /// to zero and `λ^l` with `l ≥ 2` is rewritten through the ring relation.
    pub fn monomial(y_power: u32, a_power: u32, lam_power: u32, coeff: DPoly) -> Self {
        let mut class = CohClass::zero();
        class.insert_reduced(y_power, a_power, lam_power, coeff);
        class
    }

    /// Reduced terms in lexicographic key order.
    pub fn terms(&self) -> impl Iterator<Item = (Key, &DPoly)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the reduced monomial `y^p a^j λ^l`.
    pub fn coeff(&self, y_power: u32, a_power: u8, lam_power: u8) -> DPoly {
        self.terms
            .get(&(y_power, a_power, lam_power))
            .cloned()
            .unwrap_or_else(DPoly::zero)
    }

    /// Add `coeff · y^p a^j λ^l`, applying `a³ = 0` and `λ² = −3aλ − 3a²`
    /// until the key is canonical.
    fn insert_reduced(&mut self, y_power: u32, a_power: u32, lam_power: u32, coeff: DPoly) {
        if coeff.is_zero() || a_power >= 3 {
            return;
        }
        if lam_power >= 2 {
            let scaled = coeff.scale(-3);
            self.insert_reduced(y_power, a_power + 1, lam_power - 1, scaled.clone());
            self.insert_reduced(y_power, a_power + 2, lam_power - 2, scaled);
            return;
        }
        let key = (y_power, a_power as u8, lam_power as u8);
        let entry = self.terms.entry(key).or_insert_with(DPoly::zero);
        *entry = entry.add(&coeff);
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, rhs: &CohClass) -> CohClass {
        let mut out = self.clone();
        for ((p, j, l), c) in rhs.terms() {
            out.insert_reduced(p, j as u32, l as u32, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &CohClass) -> CohClass {
        self.add(&rhs.scale_poly(&DPoly::from_int(-1)))
    }

    /// Multiply every coefficient by a fixed polynomial in `d`.
    pub fn scale_poly(&self, factor: &DPoly) -> CohClass {
        let mut out = CohClass::zero();
        for ((p, j, l), c) in self.terms() {
            out.insert_reduced(p, j as u32, l as u32, c.mul(factor));
        }
        out
    }

    /// `self^n` by repeated multiplication.
    pub fn pow(&self, n: u32) -> CohClass {
        let mut out = CohClass::one();
        for _ in 0..n {
            out = coh_mul(&out, self);
        }
        out
    }
}

/// Product in the quotient ring, fully reduced.
pub fn coh_mul(lhs: &CohClass, rhs: &CohClass) -> CohClass {
    let mut out = CohClass::zero();
    for ((p1, j1, l1), c1) in lhs.terms() {
        for ((p2, j2, l2), c2) in rhs.terms() {
            out.insert_reduced(
                p1 + p2,
                j1 as u32 + j2 as u32,
                l1 as u32 + l2 as u32,
                c1.mul(c2),
            );
        }
    }
    out
}

/// Evaluate a class against the fundamental class.
///
/// The caller has conceptually multiplied by `y^{δ_d − y_deficit_codim}`, so
/// the evaluation reads the coefficient of `y^{y_deficit_codim} a² λ` (for
/// [`Base::PTP2`]) or `y^{y_deficit_codim} a²` (for [`Base::P2`]); every
/// other monomial pairs to zero.
pub fn pair(class: &CohClass, base: Base, y_deficit_codim: i64) -> Result<DPoly, PairError> {
    if y_deficit_codim < 0 {
        return Err(PairError::NegativeDeficit(y_deficit_codim));
    }
    let lam_power = match base {
        Base::P2 => 0,
        Base::PTP2 => 1,
    };
    Ok(class.coeff(y_deficit_codim as u32, 2, lam_power))
}

impl fmt::Display for CohClass {
    /// Canonical rendering: `(poly)·y^p a^j λ^l` terms joined by ` + ` in
    /// lexicographic key order, with all three exponents always printed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((p, j, l), c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})·y^{p} a^{j} λ^{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
