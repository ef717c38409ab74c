//! Exact classification of plane-curve germs.
//!
//! The decision tree works entirely in rational arithmetic: translate the
//! point to the origin, inspect the gradient and Hessian, rotate a
//! degenerate direction onto an axis by an invertible rational linear
//! change, and hand the reduced jet to the elimination engines. Corank-one
//! germs are decided by the first nonvanishing `A_k`; vanishing Hessians
//! route through the cubic term's discriminant and its repeated-root
//! direction to the `D_k` and exceptional branches.
//!
//! A germ whose invariants all vanish up to the truncation order is
//! reported as [`SingularityType::Unresolved`] with that order, prompting
//! the caller to retry with a higher bound rather than looping silently.

use crate::algebra::{parse_rational, rat, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

use super::elim::{a_invariants, d_invariants, dual_quantities};
use super::series::{binomial, PowerSeries2};
use super::NormalFormError;

/// The outcome tag of a classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularityType {
    /// The germ does not vanish at the point.
    NotOnCurve,
    /// `A_k` for `k ≥ 0`; `A(0)` is a smooth point, `A(1)` a node.
    A(u32),
    /// `D_k` for `k ≥ 4`.
    D(u32),
    E6,
    E7,
    /// The quartic-in-`x` jet degenerates past the `E7` tests.
    PartialE8,
    /// The cubic term vanishes identically.
    PartialX8,
    /// Undecided at the given truncation order.
    Unresolved(u32),
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityType::NotOnCurve => write!(f, "NotOnCurve"),
            SingularityType::A(k) => write!(f, "A{k}"),
            SingularityType::D(k) => write!(f, "D{k}"),
            SingularityType::E6 => write!(f, "E6"),
            SingularityType::E7 => write!(f, "E7"),
            SingularityType::PartialE8 => write!(f, "PartialE8"),
            SingularityType::PartialX8 => write!(f, "PartialX8"),
            SingularityType::Unresolved(order) => write!(f, "Unresolved(order={order})"),
        }
    }
}

/// The invariant that decided a classification, with its value.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub name: String,
    pub value: Rational,
}

/// A classification outcome: the tag plus the deciding invariant when one
/// exists.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub kind: SingularityType,
    pub witness: Option<Witness>,
}

impl Classification {
    fn plain(kind: SingularityType) -> Self {
        Classification {
            kind,
            witness: None,
        }
    }

    fn with(kind: SingularityType, name: impl Into<String>, value: Rational) -> Self {
        Classification {
            kind,
            witness: Some(Witness {
                name: name.into(),
                value,
            }),
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            Some(w) => write!(
                f,
                "{} ({} = {})",
                self.kind,
                w.name,
                crate::algebra::format_rational(&w.value)
            ),
            None => write!(f, "{}", self.kind),
        }
    }
}

/// An exact plane-curve germ: a polynomial in `x, y` with rational
/// coefficients, stored by monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct Germ {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl Germ {
    pub fn new(terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut map: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for ((i, j), c) in terms {
            let entry = map.entry((i, j)).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                map.remove(&(i, j));
            }
        }
        Germ { terms: map }
    }

    /// Convenience constructor from integer monomial coefficients.
    pub fn from_monomials(terms: &[(u32, u32, i64)]) -> Self {
        Germ::new(terms.iter().map(|&(i, j, c)| ((i, j), rat(c))))
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    /// The monomial coefficient of `x^i y^j`.
    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for ((i, j), c) in self.terms() {
            acc += c * pow_rat(x, i) * pow_rat(y, j);
        }
        acc
    }

    /// The exact translate `ρ(x + p, y + q)`.
    pub fn translate(&self, p: &Rational, q: &Rational) -> Germ {
        let mut out: Vec<((u32, u32), Rational)> = Vec::new();
        for ((i, j), c) in self.terms() {
            for s in 0..=i {
                for t in 0..=j {
                    let coeff = c
                        * rat(binomial(i, s))
                        * rat(binomial(j, t))
                        * pow_rat(p, i - s)
                        * pow_rat(q, j - t);
                    out.push(((s, t), coeff));
                }
            }
        }
        Germ::new(out)
    }

    /// The germ multiplied by a nonzero constant, which never changes the
    /// classification.
    pub fn scale(&self, c: &Rational) -> Germ {
        assert!(!c.is_zero(), "scaling a germ by zero");
        Germ {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// The exact substitution `ρ(a·x + b·y, c·x + d·y)`.
    pub fn linear_change(
        &self,
        a: &Rational,
        b: &Rational,
        c: &Rational,
        d: &Rational,
    ) -> Germ {
        let mut out: Vec<((u32, u32), Rational)> = Vec::new();
        for ((i, j), v) in self.terms() {
            for s in 0..=i {
                let x_part = rat(binomial(i, s)) * pow_rat(a, s) * pow_rat(b, i - s);
                for t in 0..=j {
                    let y_part = rat(binomial(j, t)) * pow_rat(c, t) * pow_rat(d, j - t);
                    out.push(((s + t, (i - s) + (j - t)), v * &x_part * &y_part));
                }
            }
        }
        Germ::new(out)
    }

    /// Truncate into a power series; invariants read below the order are
    /// unaffected by the dropped tail.
    pub fn to_series(&self, order: u32) -> PowerSeries2<Rational> {
        let mut s = PowerSeries2::new(order);
        for ((i, j), c) in self.terms() {
            if i + j <= order {
                s.set_coeff(i, j, c.clone());
            }
        }
        s
    }
}

fn pow_rat(base: &Rational, e: u32) -> Rational {
    let mut acc: Rational = rat(1);
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// Classify the germ at the given rational point, deciding with jets up to
/// `max_order`.
pub fn classify(
    germ: &Germ,
    point: (&Rational, &Rational),
    max_order: u32,
) -> Result<Classification, NormalFormError> {
    let order = max_order.max(6);
    let local = germ.translate(point.0, point.1);
    let value = local.coeff(0, 0);
    if !value.is_zero() {
        return Err(NormalFormError::NotOnCurve {
            value: crate::algebra::format_rational(&value),
        });
    }
    let rho = local.to_series(order);

    let r10 = rho.rho(1, 0);
    let r01 = rho.rho(0, 1);
    if !r10.is_zero() {
        return Ok(Classification::with(SingularityType::A(0), "rho10", r10));
    }
    if !r01.is_zero() {
        return Ok(Classification::with(SingularityType::A(0), "rho01", r01));
    }

    let r20 = rho.rho(2, 0);
    let r11 = rho.rho(1, 1);
    let r02 = rho.rho(0, 2);
    let hessian_det = &r20 * &r02 - &r11 * &r11;
    if !hessian_det.is_zero() {
        return Ok(Classification::with(
            SingularityType::A(1),
            "det(Hessian)",
            hessian_det,
        ));
    }

    if !(r20.is_zero() && r11.is_zero() && r02.is_zero()) {
        // Corank one: rotate the Hessian kernel onto the x-axis.
        let w = if r20.is_zero() && r11.is_zero() {
            (rat(1), rat(0))
        } else {
            (-&r11, r20.clone())
        };
        let rotated = rotate_direction_to_x(&rho, &w);
        let inv = a_invariants(&rotated, order - 2)?;
        return Ok(match inv.first_nonzero() {
            Some((k, v)) => Classification::with(
                SingularityType::A(k - 1),
                format!("A{k}"),
                v.clone(),
            ),
            None => Classification::plain(SingularityType::Unresolved(order)),
        });
    }

    // The Hessian vanishes: branch on the cubic term.
    let c30 = rho.coeff(3, 0);
    let c21 = rho.coeff(2, 1);
    let c12 = rho.coeff(1, 2);
    let c03 = rho.coeff(0, 3);
    if c30.is_zero() && c21.is_zero() && c12.is_zero() && c03.is_zero() {
        return Ok(Classification::plain(SingularityType::PartialX8));
    }
    let beta = dual_quantities(&rho).beta_cubic;
    if !beta.is_zero() {
        return Ok(Classification::with(SingularityType::D(4), "beta", beta));
    }

    // The cubic has a repeated root direction; rotate it onto the x-axis.
    let w = repeated_root_direction(&c30, &c21, &c12, &c03)?;
    let rotated = rotate_direction_to_x(&rho, &w);
    if !rotated.coeff(3, 0).is_zero() || !rotated.coeff(2, 1).is_zero() {
        return Err(NormalFormError::Internal(
            "repeated-root rotation failed to reduce the cubic".to_string(),
        ));
    }

    let r12 = rotated.rho(1, 2);
    if !r12.is_zero() {
        let inv = d_invariants(&rotated, order - 2)?;
        return Ok(match inv.first_nonzero() {
            Some((k, v)) => Classification::with(
                SingularityType::D(k - 1),
                format!("D{k}"),
                v.clone(),
            ),
            None => Classification::plain(SingularityType::Unresolved(order)),
        });
    }

    // Triple root: the cubic is a pure y³ in the rotated frame.
    if rotated.rho(0, 3).is_zero() {
        return Err(NormalFormError::Internal(
            "triple-root frame lost the cubic term".to_string(),
        ));
    }
    let r40 = rotated.rho(4, 0);
    if !r40.is_zero() {
        return Ok(Classification::with(SingularityType::E6, "rho40", r40));
    }
    let r31 = rotated.rho(3, 1);
    if !r31.is_zero() {
        return Ok(Classification::with(SingularityType::E7, "rho31", r31));
    }
    Ok(Classification::plain(SingularityType::PartialE8))
}

/// Substitute `(x, y) = (w.0·x' + u.0·y', w.1·x' + u.1·y')` for a basis
/// completion `u` of the direction `w`, sending `w` to the new x-axis.
fn rotate_direction_to_x(
    rho: &PowerSeries2<Rational>,
    w: &(Rational, Rational),
) -> PowerSeries2<Rational> {
    let (u0, u1) = if w.1.is_zero() {
        (rat(0), rat(1))
    } else {
        (rat(1), rat(0))
    };
    rho.linear_change(&w.0, &u0, &w.1, &u1)
}

/// The repeated root direction `(x : y)` of a binary cubic with vanishing
/// discriminant, from the monomial coefficients of `x³, x²y, xy², y³`.
fn repeated_root_direction(
    c3: &Rational,
    c2: &Rational,
    c1: &Rational,
    c0: &Rational,
) -> Result<(Rational, Rational), NormalFormError> {
    if c3.is_zero() && c2.is_zero() {
        // The cubic is y²·(c1·x + c0·y): the repeated direction is y = 0.
        return Ok((rat(1), rat(0)));
    }
    if c3.is_zero() {
        // One simple root at infinity; the double root solves the quadratic.
        let t = -c1 / (rat(2) * c2);
        return Ok((t, rat(1)));
    }
    // Dehomogenize to p(t) = c3·t³ + c2·t² + c1·t + c0 and locate the
    // repeated root through gcd(p, p′).
    let p = vec![c0.clone(), c1.clone(), c2.clone(), c3.clone()];
    let dp = derivative(&p);
    let g = poly_gcd(p, dp);
    match g.len() {
        2 => Ok((-&g[0] / &g[1], rat(1))),
        3 => {
            // A triple root: the gcd is proportional to (t − t*)².
            let t = -&g[1] / (rat(2) * &g[2]);
            Ok((t, rat(1)))
        }
        _ => Err(NormalFormError::Internal(
            "vanishing discriminant without a rational repeated root".to_string(),
        )),
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    p
}

fn derivative(p: &[Rational]) -> Vec<Rational> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * rat(i as i64))
        .collect()
}

/// Euclidean gcd of univariate rational polynomials, coefficients ascending.
fn poly_gcd(a: Vec<Rational>, b: Vec<Rational>) -> Vec<Rational> {
    let mut a = trim(a);
    let mut b = trim(b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = &r[dr] / lead;
        if !factor.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                let idx = dr - db + i;
                let delta = &factor * bc;
                r[idx] -= delta;
            }
        }
        r.pop();
        r = trim(r);
        if r.is_empty() {
            break;
        }
    }
    trim(r)
}

/// Parse a germ file: either a bare JSON array of term records or an object
/// with `terms` and an optional rational `point`.
pub fn parse_germ(text: &str) -> Result<(Germ, (Rational, Rational)), NormalFormError> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| NormalFormError::Parse(format!("invalid JSON: {e}")))?;
    let (terms_value, point) = match &value {
        serde_json::Value::Array(_) => (&value, (Rational::zero(), Rational::zero())),
        serde_json::Value::Object(map) => {
            let terms = map
                .get("terms")
                .ok_or_else(|| NormalFormError::Parse("missing \"terms\" field".to_string()))?;
            let point = match map.get("point") {
                None => (Rational::zero(), Rational::zero()),
                Some(serde_json::Value::Array(pair)) if pair.len() == 2 => (
                    parse_coordinate(&pair[0])?,
                    parse_coordinate(&pair[1])?,
                ),
                Some(other) => {
                    return Err(NormalFormError::Parse(format!(
                        "\"point\" must be a two-element array, got {other}"
                    )))
                }
            };
            (terms, point)
        }
        other => {
            return Err(NormalFormError::Parse(format!(
                "expected an array of terms or an object, got {other}"
            )))
        }
    };
    let records = terms_value
        .as_array()
        .ok_or_else(|| NormalFormError::Parse("\"terms\" must be an array".to_string()))?;
    let mut terms = Vec::with_capacity(records.len());
    for record in records {
        let obj = record.as_object().ok_or_else(|| {
            NormalFormError::Parse(format!("term must be an object, got {record}"))
        })?;
        let i = read_exponent(obj, "i")?;
        let j = read_exponent(obj, "j")?;
        let c = obj
            .get("c")
            .ok_or_else(|| NormalFormError::Parse("term missing \"c\"".to_string()))?;
        terms.push(((i, j), parse_coordinate(c)?));
    }
    Ok((Germ::new(terms), point))
}

fn read_exponent(
    obj: &serde_json::Map<String, serde_json::Value>,
    key: &str,
) -> Result<u32, NormalFormError> {
    obj.get(key)
        .and_then(serde_json::Value::as_u64)
        .and_then(|v| u32::try_from(v).ok())
        .ok_or_else(|| {
            NormalFormError::Parse(format!("term field \"{key}\" must be a small nonnegative integer"))
        })
}

fn parse_coordinate(v: &serde_json::Value) -> Result<Rational, NormalFormError> {
    match v {
        serde_json::Value::String(s) => parse_rational(s).ok_or_else(|| {
            NormalFormError::Parse(format!("invalid rational literal {s:?}"))
        }),
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(rat)
            .ok_or_else(|| {
                NormalFormError::Parse(format!(
                    "numeric value {n} is not an integer; write rationals as \"p/q\" strings"
                ))
            }),
        other => Err(NormalFormError::Parse(format!(
            "expected a rational value, got {other}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn kind_of(terms: &[(u32, u32, i64)]) -> SingularityType {
        let germ = Germ::from_monomials(terms);
        classify(&germ, (&rat(0), &rat(0)), 12).unwrap().kind
    }

    #[test]
    fn model_germs_classify_to_their_tags() {
        assert_eq!(kind_of(&[(0, 2, 1), (2, 0, 1)]), SingularityType::A(1));
        assert_eq!(kind_of(&[(0, 2, 1), (3, 0, 1)]), SingularityType::A(2));
        assert_eq!(kind_of(&[(0, 2, 1), (4, 0, 1)]), SingularityType::A(3));
        assert_eq!(kind_of(&[(0, 2, 1), (5, 0, 1)]), SingularityType::A(4));
        assert_eq!(kind_of(&[(0, 2, 1), (6, 0, 1)]), SingularityType::A(5));
        assert_eq!(kind_of(&[(0, 2, 1), (7, 0, 1)]), SingularityType::A(6));
        assert_eq!(kind_of(&[(0, 2, 1), (8, 0, 1)]), SingularityType::A(7));
        assert_eq!(kind_of(&[(1, 2, 1), (3, 0, 1)]), SingularityType::D(4));
        assert_eq!(kind_of(&[(1, 2, 1), (4, 0, 1)]), SingularityType::D(5));
        assert_eq!(kind_of(&[(1, 2, 1), (5, 0, 1)]), SingularityType::D(6));
        assert_eq!(kind_of(&[(1, 2, 1), (6, 0, 1)]), SingularityType::D(7));
        assert_eq!(kind_of(&[(0, 3, 1), (4, 0, 1)]), SingularityType::E6);
        assert_eq!(kind_of(&[(0, 3, 1), (3, 1, 1)]), SingularityType::E7);
        assert_eq!(kind_of(&[(0, 3, 1), (5, 0, 1)]), SingularityType::PartialE8);
        assert_eq!(kind_of(&[(4, 0, 1), (0, 4, 1)]), SingularityType::PartialX8);
    }

    #[test]
    fn smooth_and_off_curve_points() {
        let germ = Germ::from_monomials(&[(1, 0, 1), (0, 2, 1)]);
        let got = classify(&germ, (&rat(0), &rat(0)), 12).unwrap();
        assert_eq!(got.kind, SingularityType::A(0));
        assert!(matches!(
            classify(&germ, (&rat(1), &rat(1)), 12),
            Err(NormalFormError::NotOnCurve { .. })
        ));
    }

    #[test]
    fn classification_at_a_translated_point() {
        // A cusp placed at (2, −3): ρ = (y+3)² + (x−2)³.
        let germ = Germ::from_monomials(&[(0, 2, 1), (3, 0, 1)]).translate(&rat(-2), &rat(3));
        assert!(germ.eval(&rat(2), &rat(-3)).is_zero());
        let got = classify(&germ, (&rat(2), &rat(-3)), 12).unwrap();
        assert_eq!(got.kind, SingularityType::A(2));
    }

    #[test]
    fn rotated_node_is_still_a_node() {
        // xy has an invertible Hessian.
        assert_eq!(kind_of(&[(1, 1, 1)]), SingularityType::A(1));
    }

    #[test]
    fn tilted_kernel_direction_is_handled() {
        // (x + y)² + x³ is an ordinary cusp in sheared coordinates.
        let germ = Germ::from_monomials(&[(0, 2, 1), (3, 0, 1)]).linear_change(
            &rat(1),
            &rat(0),
            &rat(1),
            &rat(1),
        );
        let got = classify(&germ, (&rat(0), &rat(0)), 12).unwrap();
        assert_eq!(got.kind, SingularityType::A(2));
    }

    #[test]
    fn repeated_cubic_root_off_axis_is_rotated() {
        // x·(x+y)² + x⁴: the cubic's double root sits along (−1, 1).
        let germ = Germ::from_monomials(&[(1, 2, 1), (4, 0, 1)]).linear_change(
            &rat(1),
            &rat(0),
            &rat(1),
            &rat(1),
        );
        let got = classify(&germ, (&rat(0), &rat(0)), 12).unwrap();
        assert_eq!(got.kind, SingularityType::D(5));
    }

    #[test]
    fn degenerate_square_is_unresolved() {
        let germ = Germ::from_monomials(&[(0, 2, 1)]);
        let got = classify(&germ, (&rat(0), &rat(0)), 9).unwrap();
        assert_eq!(got.kind, SingularityType::Unresolved(9));
    }

    #[test]
    fn witnesses_carry_the_deciding_value() {
        let germ = Germ::from_monomials(&[(0, 2, 1), (5, 0, 1)]);
        let got = classify(&germ, (&rat(0), &rat(0)), 12).unwrap();
        let w = got.witness.unwrap();
        assert_eq!(w.name, "A5");
        assert_eq!(w.value, rat(120));
        assert_eq!(got.kind, SingularityType::A(4));
    }

    #[test]
    fn repeated_root_direction_cases() {
        // y²·(x + y): repeated direction along the x-axis.
        assert_eq!(
            repeated_root_direction(&rat(0), &rat(0), &rat(1), &rat(1)).unwrap(),
            (rat(1), rat(0))
        );
        // (t − 2)²·(t + 1) dehomogenized.
        let p = [rat(4), rat(0), rat(-3), rat(1)];
        assert_eq!(
            repeated_root_direction(&p[3], &p[2], &p[1], &p[0]).unwrap(),
            (rat(2), rat(1))
        );
        // (t + 1/2)³ scaled by 8.
        assert_eq!(
            repeated_root_direction(&rat(8), &rat(12), &rat(6), &rat(1)).unwrap(),
            (ratio(-1, 2), rat(1))
        );
    }

    #[test]
    fn germ_files_parse_with_and_without_points() {
        let bare = r#"[{"i":0,"j":2,"c":"1"},{"i":3,"j":0,"c":1}]"#;
        let (germ, point) = parse_germ(bare).unwrap();
        assert_eq!(germ, Germ::from_monomials(&[(0, 2, 1), (3, 0, 1)]));
        assert_eq!(point, (rat(0), rat(0)));

        let tagged = r#"{"terms":[{"i":0,"j":2,"c":"3/2"}],"point":["1","-2/3"]}"#;
        let (germ, point) = parse_germ(tagged).unwrap();
        assert_eq!(germ.coeff(0, 2), ratio(3, 2));
        assert_eq!(point, (rat(1), ratio(-2, 3)));

        assert!(matches!(
            parse_germ("{\"terms\": 5}"),
            Err(NormalFormError::Parse(_))
        ));
        assert!(matches!(
            parse_germ(r#"[{"i":0,"j":2,"c":0.5}]"#),
            Err(NormalFormError::Parse(_))
        ));
    }

}
