//! Exact rational functions in the jet symbols `f_ij`.
//!
//! [`MPoly`] is a multivariate polynomial with rational coefficients over
//! the symbols; [`RatFunc`] is a quotient of two such polynomials. The
//! quotient is kept normalized by cancelling common monomial content, which
//! suffices here because every division performed by the elimination engines
//! is by a monomial times a rational number, so denominators stay monomial.
//!
//! [`RatFunc`] implements [`Coeff`], so the elimination engines run
//! unchanged over a fully generic jet and emit closed forms.

use crate::algebra::{format_rational, rat, Rational};
use num_traits::{One, Signed};
use std::collections::BTreeMap;
use std::fmt;

use super::series::{Coeff, PowerSeries2};

/// A monomial in the jet symbols: variable `(i, j)` to its exponent.
pub type JetMono = BTreeMap<(u32, u32), u32>;

/// Multivariate polynomial in the jet symbols with rational coefficients.
///
/// Canonical form: no zero coefficients, no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<JetMono, Rational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(JetMono::new(), c);
        }
        MPoly { terms }
    }

    /// The symbol `f_ij`.
    pub fn var(i: u32, j: u32) -> Self {
        let mut mono = JetMono::new();
        mono.insert((i, j), 1);
        let mut terms = BTreeMap::new();
        terms.insert(mono, rat(1));
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&JetMono, &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, mono: JetMono, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }

    pub fn negated(&self) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn times(&self, rhs: &Self) -> Self {
        let mut out = MPoly::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in rhs.terms() {
                let mut mono = m1.clone();
                for (&v, &e) in m2 {
                    *mono.entry(v).or_insert(0) += e;
                }
                out.add_term(mono, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// The common monomial factor of every term.
    fn monomial_content(&self) -> JetMono {
        let mut it = self.terms.keys();
        let mut content = match it.next() {
            Some(m) => m.clone(),
            None => return JetMono::new(),
        };
        for m in it {
            content = content
                .iter()
                .filter_map(|(&v, &e)| {
                    let other = m.get(&v).copied().unwrap_or(0);
                    let min = e.min(other);
                    (min > 0).then_some((v, min))
                })
                .collect();
            if content.is_empty() {
                break;
            }
        }
        content
    }

    /// Substitute `f_ij = 0`: every term containing the symbol is dropped.
    pub fn with_var_zeroed(&self, i: u32, j: u32) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.contains_key(&(i, j)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Divide every term by a monomial that divides the content.
    fn div_monomial(&self, mono: &JetMono) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut out = m.clone();
                    for (&v, &e) in mono {
                        let cur = out.get(&v).copied().unwrap_or(0);
                        assert!(cur >= e, "monomial does not divide the term");
                        if cur == e {
                            out.remove(&v);
                        } else {
                            out.insert(v, cur - e);
                        }
                    }
                    (out, c.clone())
                })
                .collect(),
        }
    }
}

fn render_mono(mono: &JetMono) -> String {
    mono.iter()
        .map(|(&(i, j), &e)| {
            if e == 1 {
                format!("f{i}{j}")
            } else {
                format!("f{i}{j}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, c) in self.terms() {
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let mono_str = render_mono(mono);
            if mono_str.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono_str}")?;
            } else {
                write!(f, "{}*{mono_str}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

/// Quotient of two jet polynomials. The denominator is never zero and is
/// kept free of monomial content shared with the numerator.
#[derive(Debug, Clone)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    fn reduced(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc {
                num,
                den: MPoly::one(),
            };
        }
        let num_content = num.monomial_content();
        let den_content = den.monomial_content();
        let common: JetMono = num_content
            .iter()
            .filter_map(|(&v, &e)| {
                let other = den_content.get(&v).copied().unwrap_or(0);
                let min = e.min(other);
                (min > 0).then_some((v, min))
            })
            .collect();
        let mut num = num.div_monomial(&common);
        let mut den = den.div_monomial(&common);
        // Normalize a monomial denominator to coefficient one.
        if den.is_monomial() {
            let (mono, c) = den.terms().next().map(|(m, c)| (m.clone(), c.clone())).unwrap();
            num = num.scale(&(rat(1) / &c));
            let mut terms = BTreeMap::new();
            terms.insert(mono, rat(1));
            den = MPoly { terms };
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: MPoly) -> Self {
        RatFunc {
            num: p,
            den: MPoly::one(),
        }
    }

    /// The symbol `f_ij` as a rational function.
    pub fn var(i: u32, j: u32) -> Self {
        RatFunc::from_poly(MPoly::var(i, j))
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(MPoly::constant(c))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    /// Substitute `f_ij = 0` in both numerator and denominator.
    ///
    /// Panics if the denominator vanishes under the substitution.
    pub fn with_var_zeroed(&self, i: u32, j: u32) -> Self {
        RatFunc::reduced(
            self.num.with_var_zeroed(i, j),
            self.den.with_var_zeroed(i, j),
        )
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        // Cross-multiplied comparison avoids needing full gcd reduction.
        self.num.times(&other.den) == other.num.times(&self.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == MPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Coeff for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(MPoly::zero())
    }

    fn one() -> Self {
        RatFunc::from_poly(MPoly::one())
    }

    fn from_int(n: i64) -> Self {
        RatFunc::from_poly(MPoly::constant(crate::algebra::rat(n)))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn plus(&self, rhs: &Self) -> Self {
        let num = self
            .num
            .times(&rhs.den)
            .plus(&rhs.num.times(&self.den));
        RatFunc::reduced(num, self.den.times(&rhs.den))
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }

    fn times(&self, rhs: &Self) -> Self {
        RatFunc::reduced(self.num.times(&rhs.num), self.den.times(&rhs.den))
    }

    fn div_by(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFunc::reduced(self.num.times(&rhs.den), self.den.times(&rhs.num))
    }

    fn negated(&self) -> Self {
        RatFunc {
            num: self.num.negated(),
            den: self.den.clone(),
        }
    }
}

/// A fully generic jet at the given truncation order with the listed
/// symbols forced to zero; every other jet entry is the free symbol `f_ij`.
pub fn generic_jet(order: u32, zeroed: &[(u32, u32)]) -> PowerSeries2<RatFunc> {
    let mut rho = PowerSeries2::new(order);
    for i in 0..=order {
        for j in 0..=order - i {
            if zeroed.contains(&(i, j)) {
                continue;
            }
            rho.set_rho(i, j, RatFunc::var(i, j));
        }
    }
    rho
}

/// Generic jet reduced for the branch elimination: the 2-jet vanishes
/// except for the free `f02`.
pub fn generic_a_jet(order: u32) -> PowerSeries2<RatFunc> {
    generic_jet(order, &[(0, 0), (1, 0), (0, 1), (2, 0), (1, 1)])
}

/// Generic jet reduced for the vertical elimination: the full 2-jet and the
/// `f30`, `f21` entries vanish; `f12` is free.
pub fn generic_d_jet(order: u32) -> PowerSeries2<RatFunc> {
    generic_jet(
        order,
        &[
            (0, 0),
            (1, 0),
            (0, 1),
            (2, 0),
            (1, 1),
            (0, 2),
            (3, 0),
            (2, 1),
        ],
    )
}

/// Render a derived invariant as a sum of terms with individual monomial
/// denominators, sorted by denominator degree and then lexicographically.
///
/// Examples: `f30`, `f40 - 3*f21^2/f02`, `f50 - 5*f31^2/(3*f12)`.
pub fn render_invariant(rf: &RatFunc) -> String {
    if rf.num.is_zero() {
        return "0".to_string();
    }
    let den_terms: Vec<_> = rf.den.terms().collect();
    if den_terms.len() != 1 {
        return format!("{rf}");
    }
    let (den_mono, den_coef) = (den_terms[0].0.clone(), den_terms[0].1.clone());

    struct Piece {
        den_degree: u32,
        den: JetMono,
        num: JetMono,
        coef: Rational,
    }

    let mut pieces: Vec<Piece> = rf
        .num
        .terms()
        .map(|(mono, c)| {
            let mut num = mono.clone();
            let mut den = den_mono.clone();
            // Cancel shared exponents between this term and the denominator.
            for (&v, &e) in &den_mono {
                let have = num.get(&v).copied().unwrap_or(0);
                let cancel = have.min(e);
                if cancel > 0 {
                    if have == cancel {
                        num.remove(&v);
                    } else {
                        num.insert(v, have - cancel);
                    }
                    if e == cancel {
                        den.remove(&v);
                    } else {
                        den.insert(v, e - cancel);
                    }
                }
            }
            Piece {
                den_degree: den.values().sum(),
                den,
                num,
                coef: c / &den_coef,
            }
        })
        .collect();
    pieces.sort_by(|a, b| {
        (a.den_degree, &a.den, &a.num).cmp(&(b.den_degree, &b.den, &b.num))
    });

    let mut out = String::new();
    for (idx, p) in pieces.iter().enumerate() {
        let negative = p.coef.is_negative();
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = p.coef.abs();
        let num_int = mag.numer();
        let den_int = mag.denom();

        let mut num_parts: Vec<String> = Vec::new();
        if !num_int.is_one() || p.num.is_empty() {
            num_parts.push(num_int.to_string());
        }
        let num_mono = render_mono(&p.num);
        if !num_mono.is_empty() {
            num_parts.push(num_mono);
        }
        out.push_str(&num_parts.join("*"));

        let mut den_parts: Vec<String> = Vec::new();
        if !den_int.is_one() {
            den_parts.push(den_int.to_string());
        }
        let den_mono = render_mono(&p.den);
        if !den_mono.is_empty() {
            den_parts.push(den_mono);
        }
        if !den_parts.is_empty() {
            let atoms = p.den.len() + usize::from(!den_int.is_one());
            let body = den_parts.join("*");
            if atoms > 1 {
                out.push_str(&format!("/({body})"));
            } else {
                out.push_str(&format!("/{body}"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};
    use crate::normalform::elim::{a_invariants, d_invariants};

    fn f(i: u32, j: u32) -> RatFunc {
        RatFunc::var(i, j)
    }

    #[test]
    fn rational_function_field_axioms_on_samples() {
        let a = f(2, 1).div_by(&f(0, 2));
        let b = f(3, 0).div_by(&f(0, 2).times(&f(0, 2)));
        let sum = a.plus(&b);
        assert_eq!(sum.minus(&a), b);
        let prod = a.times(&b);
        assert_eq!(prod.div_by(&a), b);
        assert!(a.minus(&a).is_zero());
    }

    #[test]
    fn cross_multiplied_equality() {
        // f21/f02 equals (f21·f12)/(f02·f12) without reduction.
        let lhs = f(2, 1).div_by(&f(0, 2));
        let rhs = f(2, 1)
            .times(&f(1, 2))
            .div_by(&f(0, 2).times(&f(1, 2)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomial_denominators_stay_monomial() {
        let a = f(2, 1).div_by(&f(0, 2));
        let b = a.times(&a).plus(&f(4, 0));
        assert!(b.den().is_monomial());
    }

    #[test]
    fn first_generic_scalar_is_the_cubic_symbol() {
        let rho = generic_a_jet(3);
        let inv = a_invariants(&rho, 3).unwrap();
        assert_eq!(inv.a(3), Some(&f(3, 0)));
    }

    #[test]
    fn second_generic_scalar_subtracts_the_mixed_square() {
        let rho = generic_a_jet(4);
        let inv = a_invariants(&rho, 4).unwrap();
        let expected = f(4, 0).minus(
            &RatFunc::from_int(3)
                .times(&f(2, 1))
                .times(&f(2, 1))
                .div_by(&f(0, 2)),
        );
        assert_eq!(inv.a(4), Some(&expected));
    }

    #[test]
    fn first_generic_vertical_scalar_is_the_quartic_symbol() {
        let rho = generic_d_jet(4);
        let inv = d_invariants(&rho, 6).unwrap();
        assert_eq!(inv.d(6), Some(&f(4, 0)));
    }

    #[test]
    fn rendered_forms_match_the_published_style() {
        let a3 = a_invariants(&generic_a_jet(3), 3).unwrap();
        assert_eq!(render_invariant(a3.a(3).unwrap()), "f30");

        let a4 = a_invariants(&generic_a_jet(4), 4).unwrap();
        assert_eq!(
            render_invariant(a4.a(4).unwrap()),
            "f40 - 3*f21^2/f02"
        );

        // D₇ is reported on the locus where D₆ = f40 vanishes; off that
        // locus the elimination keeps cross terms in f03*f40.
        let d7 = d_invariants(&generic_d_jet(5), 7).unwrap();
        assert_eq!(
            render_invariant(&d7.d(7).unwrap().with_var_zeroed(4, 0)),
            "f50 - 5*f31^2/(3*f12)"
        );
    }

    #[test]
    fn d8_restricted_to_the_d6_locus_matches_the_frozen_form() {
        let inv = d_invariants(&generic_d_jet(6), 8).unwrap();
        let d8 = inv.d(8).unwrap().with_var_zeroed(4, 0);
        let expected = f(6, 0)
            .plus(
                &RatFunc::from_int(5)
                    .times(&f(0, 3))
                    .times(&f(3, 1))
                    .times(&f(5, 0))
                    .div_by(&RatFunc::from_int(3).times(&f(1, 2)).times(&f(1, 2))),
            )
            .minus(
                &RatFunc::from_int(5)
                    .times(&f(3, 1))
                    .times(&f(4, 1))
                    .div_by(&f(1, 2)),
            )
            .minus(
                &RatFunc::from_int(10)
                    .times(&f(0, 3))
                    .times(&f(3, 1))
                    .times(&f(3, 1))
                    .times(&f(3, 1))
                    .div_by(
                        &RatFunc::from_int(3)
                            .times(&f(1, 2))
                            .times(&f(1, 2))
                            .times(&f(1, 2)),
                    ),
            )
            .plus(
                &RatFunc::from_int(5)
                    .times(&f(2, 2))
                    .times(&f(3, 1))
                    .times(&f(3, 1))
                    .div_by(&f(1, 2).times(&f(1, 2))),
            );
        assert_eq!(d8, expected);
    }

    #[test]
    fn d7_off_the_d6_locus_keeps_the_cross_terms() {
        let d7 = d_invariants(&generic_d_jet(5), 7).unwrap();
        let full = d7.d(7).unwrap();
        // The full form is f50 - (5/(3 f12)) (f31 - f03 f40 / (3 f12))^2.
        let inner = f(3, 1).minus(
            &f(0, 3)
                .times(&f(4, 0))
                .div_by(&RatFunc::from_int(3).times(&f(1, 2))),
        );
        let expected = f(5, 0).minus(
            &RatFunc::from_int(5)
                .times(&inner)
                .times(&inner)
                .div_by(&RatFunc::from_int(3).times(&f(1, 2))),
        );
        assert_eq!(full, &expected);
    }

    #[test]
    fn rendering_splits_terms_by_denominator_degree() {
        let expr = f(5, 0)
            .minus(&RatFunc::from_int(10).times(&f(2, 1)).times(&f(3, 1)).div_by(&f(0, 2)))
            .plus(
                &RatFunc::from_int(15)
                    .times(&f(1, 2))
                    .times(&f(2, 1))
                    .times(&f(2, 1))
                    .div_by(&f(0, 2).times(&f(0, 2))),
            );
        assert_eq!(
            render_invariant(&expr),
            "f50 - 10*f21*f31/f02 + 15*f12*f21^2/f02^2"
        );
    }

    #[test]
    fn rendering_handles_rational_coefficients_and_constants() {
        let expr = RatFunc::constant(ratio(-5, 3))
            .times(&f(3, 1))
            .times(&f(3, 1))
            .div_by(&f(1, 2));
        assert_eq!(render_invariant(&expr), "-5*f31^2/(3*f12)");
        assert_eq!(render_invariant(&RatFunc::constant(rat(7))), "7");
        assert_eq!(render_invariant(&RatFunc::zero()), "0");
    }

    #[test]
    fn display_of_polynomials_is_signed_and_ordered() {
        let p = MPoly::var(0, 2)
            .times(&MPoly::var(0, 2))
            .scale(&rat(3))
            .minus(&MPoly::var(2, 1).scale(&rat(4)));
        assert_eq!(p.to_string(), "3*f02^2 - 4*f21");
    }
}
