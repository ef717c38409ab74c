//! Elimination engines deriving the obstruction scalars of a reduced jet.
//!
//! For a jet with nondegenerate `y²` term, [`solve_b`] produces the unique
//! branch series `B(x)` killing the linear-in-`y` part after the shift
//! `y → y₁ + B(x)`; the scalars `A_k` read off the resulting `y₁⁰`-slice.
//! For a jet with nondegenerate `xy²` term, [`solve_h`] produces `H(y)` with
//! `ρ(y·H(y), y) ≡ 0`; shifting `x → x₁ + y·H(y)`, dividing by `x₁` exactly
//! and rerunning the first elimination on the quotient reads off `D_k`.
//!
//! All preconditions are checked at runtime; a violated jet precondition is
//! reported as [`NormalFormError::JetNotReduced`] with the offending symbol.

use super::series::{factorial, ps_compose_x, Coeff, PowerSeries2, ShiftVar, UniSeries};
use super::NormalFormError;

const A_JET_ZEROS: [(u32, u32, &str); 5] = [
    (0, 0, "rho00"),
    (1, 0, "rho10"),
    (0, 1, "rho01"),
    (2, 0, "rho20"),
    (1, 1, "rho11"),
];

const D_JET_ZEROS: [(u32, u32, &str); 8] = [
    (0, 0, "rho00"),
    (1, 0, "rho10"),
    (0, 1, "rho01"),
    (2, 0, "rho20"),
    (1, 1, "rho11"),
    (0, 2, "rho02"),
    (3, 0, "rho30"),
    (2, 1, "rho21"),
];

fn check_jets_vanish<C: Coeff>(
    rho: &PowerSeries2<C>,
    jets: &[(u32, u32, &'static str)],
) -> Result<(), NormalFormError> {
    for &(i, j, symbol) in jets {
        if !rho.coeff(i, j).is_zero() {
            return Err(NormalFormError::JetNotReduced { symbol });
        }
    }
    Ok(())
}

/// `ρ(x, B(x))` as a univariate series in `x`.
fn substitute_y<C: Coeff>(rho: &PowerSeries2<C>, b: &UniSeries<C>) -> UniSeries<C> {
    let n = rho.order();
    let mut acc = UniSeries::zeros(n);
    let mut b_pow = UniSeries::one(n);
    for j in 0..=n {
        let slice = rho.y_slice(j);
        if !slice.is_zero() {
            acc = acc.plus(&slice.times(&b_pow));
        }
        if j < n {
            b_pow = b_pow.times(b);
        }
    }
    acc
}

/// `∂ρ/∂y (x, B(x))` as a univariate series in `x`.
fn dy_residual<C: Coeff>(rho: &PowerSeries2<C>, b: &UniSeries<C>) -> UniSeries<C> {
    let n = rho.order();
    let mut acc = UniSeries::zeros(n);
    let mut b_pow = UniSeries::one(n);
    for j in 1..=n {
        let slice = rho.y_slice(j);
        if !slice.is_zero() {
            acc = acc.plus(&slice.times(&b_pow).scale(&C::from_int(i64::from(j))));
        }
        if j < n {
            b_pow = b_pow.times(b);
        }
    }
    acc
}

/// `ρ(y·H(y), y)` as a univariate series in `y`.
fn substitute_x_with_yh<C: Coeff>(rho: &PowerSeries2<C>, h: &UniSeries<C>) -> UniSeries<C> {
    let n = rho.order();
    let mut acc = UniSeries::zeros(n);
    let mut h_pow = UniSeries::one(n);
    for i in 0..=n {
        let slice = rho.x_slice(i);
        if !slice.is_zero() {
            // x^i contributes H(y)^i · y^i against the x^i-slice in y.
            acc = acc.plus(&slice.shift_up(i).times(&h_pow));
        }
        if i < n {
            h_pow = h_pow.times(h);
        }
    }
    acc
}

/// Solve for the branch series `B(x)` with `∂ρ/∂y (x, B(x)) ≡ 0` and
/// `B(0) = 0`, degree by degree up to the truncation order.
///
/// Requires the 2-jet to vanish except for a nonzero `ρ₀₂`.
pub fn solve_b<C: Coeff>(rho: &PowerSeries2<C>) -> Result<UniSeries<C>, NormalFormError> {
    check_jets_vanish(rho, &A_JET_ZEROS)?;
    let c02 = rho.coeff(0, 2);
    if c02.is_zero() {
        return Err(NormalFormError::DegenerateQuadratic);
    }
    let two_c02 = c02.plus(&c02);
    let n = rho.order();
    let mut b = UniSeries::zeros(n);
    for i in 1..=n {
        // The coefficient of x^i in the residual is linear in b_i with
        // slope 2c₀₂; lower-index corrections are already in place.
        let resid = dy_residual(rho, &b);
        let r = resid.coeff(i);
        if !r.is_zero() {
            let delta = r.div_by(&two_c02);
            b.sub_at(i, &delta);
        }
    }
    Ok(b)
}

/// The scalars `A₃..A_K` of a reduced jet: `A_k = k!·[x^k] ρ(x, B(x))`.
///
/// A truncation order of `k_max` suffices: the branch series enters with
/// order at least two, so `[x^k]` only ever reads jet entries of total
/// order at most `k`.
pub fn a_invariants<C: Coeff>(
    rho: &PowerSeries2<C>,
    k_max: u32,
) -> Result<AInvariants<C>, NormalFormError> {
    if k_max > rho.order() {
        return Err(NormalFormError::TruncationTooLow {
            order: rho.order(),
            k: k_max,
        });
    }
    let b = solve_b(rho)?;
    let zhat = substitute_y(rho, &b);
    let values = (3..=k_max)
        .map(|k| zhat.coeff(k).times(&factorial::<C>(k)))
        .collect();
    Ok(AInvariants { values })
}

/// Solve for `H(y)` with `ρ(y·H(y), y) ≡ 0`, degree by degree.
///
/// Requires the full 2-jet and `ρ₃₀`, `ρ₂₁` to vanish with `ρ₁₂ ≠ 0`.
pub fn solve_h<C: Coeff>(rho: &PowerSeries2<C>) -> Result<UniSeries<C>, NormalFormError> {
    check_jets_vanish(rho, &D_JET_ZEROS)?;
    let c12 = rho.coeff(1, 2);
    if c12.is_zero() {
        return Err(NormalFormError::DegenerateCubic);
    }
    let n = rho.order();
    let mut h = UniSeries::zeros(n);
    for t in 0..=n.saturating_sub(3) {
        // The coefficient of y^{t+3} in ρ(yH, y) is linear in h_t with
        // slope c₁₂.
        let resid = substitute_x_with_yh(rho, &h);
        let r = resid.coeff(t + 3);
        if !r.is_zero() {
            let delta = r.div_by(&c12);
            h.sub_at(t, &delta);
        }
    }
    Ok(h)
}

/// The scalars `D₆..D_K` of a reduced jet: shift `x → x₁ + y·H(y)`, divide
/// by `x₁` exactly, and read `D_k = (k−2)!·[x₁^{k−3}]` off the quotient's
/// branch substitution.
///
/// A truncation order of `k_max − 2` suffices: the exact division by `x₁`
/// lowers every order by one, so `[x₁^{k−3}]` of the quotient reads jet
/// entries of total order at most `k − 2`.
pub fn d_invariants<C: Coeff>(
    rho: &PowerSeries2<C>,
    k_max: u32,
) -> Result<DInvariants<C>, NormalFormError> {
    if k_max > rho.order() + 2 {
        return Err(NormalFormError::TruncationTooLow {
            order: rho.order(),
            k: k_max,
        });
    }
    let h = solve_h(rho)?;
    let g_of_y = h.shift_up(1);
    let shifted = ps_compose_x(rho, &g_of_y, ShiftVar::X);
    let quotient = shifted.div_x_exact();
    let b = solve_b(&quotient)?;
    let zhat = substitute_y(&quotient, &b);
    let values = (6..=k_max)
        .map(|k| zhat.coeff(k - 3).times(&factorial::<C>(k - 2)))
        .collect();
    Ok(DInvariants { values })
}

/// The scalars `A₃..A_K`, indexed from `k = 3`.
#[derive(Debug, Clone, PartialEq)]
pub struct AInvariants<C: Coeff> {
    values: Vec<C>,
}

impl<C: Coeff> AInvariants<C> {
    pub fn a(&self, k: u32) -> Option<&C> {
        k.checked_sub(3).and_then(|i| self.values.get(i as usize))
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &C)> {
        self.values.iter().enumerate().map(|(i, c)| (i as u32 + 3, c))
    }

    pub fn first_nonzero(&self) -> Option<(u32, &C)> {
        self.iter().find(|(_, c)| !c.is_zero())
    }
}

/// The scalars `D₆..D_K`, indexed from `k = 6`.
#[derive(Debug, Clone, PartialEq)]
pub struct DInvariants<C: Coeff> {
    values: Vec<C>,
}

impl<C: Coeff> DInvariants<C> {
    pub fn d(&self, k: u32) -> Option<&C> {
        k.checked_sub(6).and_then(|i| self.values.get(i as usize))
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &C)> {
        self.values.iter().enumerate().map(|(i, c)| (i as u32 + 6, c))
    }

    pub fn first_nonzero(&self) -> Option<(u32, &C)> {
        self.iter().find(|(_, c)| !c.is_zero())
    }
}

/// Auxiliary discriminant-type quantities of a jet.
#[derive(Debug, Clone, PartialEq)]
pub struct DualQuantities<C: Coeff> {
    /// Section scalar for the dual route through the five-fold marked locus.
    pub psi_d5_dual: C,
    /// Section scalar for the dual route through the six-fold marked locus.
    pub psi_d6_dual: C,
    /// Section scalar for the quartic-jet route.
    pub psi_j: C,
    /// Discriminant of the cubic term; nonzero exactly when the cubic has
    /// three distinct root directions.
    pub beta_cubic: C,
}

/// Evaluate the auxiliary quantities on the 4-jet of `rho`.
pub fn dual_quantities<C: Coeff>(rho: &PowerSeries2<C>) -> DualQuantities<C> {
    assert!(rho.order() >= 4, "a 4-jet is required");
    let f = |i: u32, j: u32| rho.rho(i, j);
    let term = |k: i64, factors: &[&C]| -> C {
        factors
            .iter()
            .fold(C::from_int(k), |acc, v| acc.times(v))
    };

    let (f30, f21, f12, f03) = (f(3, 0), f(2, 1), f(1, 2), f(0, 3));
    let (f40, f31, f22, f13, f04) = (f(4, 0), f(3, 1), f(2, 2), f(1, 3), f(0, 4));

    let psi_d5_dual = term(3, &[&f12, &f12]).plus(&term(-4, &[&f21, &f03]));

    let psi_d6_dual = term(1, &[&f12, &f12, &f12, &f12, &f40])
        .plus(&term(-8, &[&f12, &f12, &f12, &f21, &f31]))
        .plus(&term(24, &[&f12, &f12, &f21, &f21, &f22]))
        .plus(&term(-32, &[&f12, &f21, &f21, &f21, &f13]))
        .plus(&term(16, &[&f21, &f21, &f21, &f21, &f04]));

    let psi_j = term(-1, &[&f31, &f31, &f31])
        .div_by(&C::from_int(8))
        .plus(&term(3, &[&f22, &f31, &f40]).div_by(&C::from_int(16)))
        .plus(&term(-1, &[&f13, &f40, &f40]).div_by(&C::from_int(16)));

    let beta_cubic = term(1, &[&f30, &f30, &f03, &f03])
        .plus(&term(-6, &[&f03, &f12, &f21, &f30]))
        .plus(&term(4, &[&f12, &f12, &f12, &f30]))
        .plus(&term(4, &[&f03, &f21, &f21, &f21]))
        .plus(&term(-3, &[&f12, &f12, &f21, &f21]));

    DualQuantities {
        psi_d5_dual,
        psi_d6_dual,
        psi_j,
        beta_cubic,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio, Rational};

    fn series(order: u32, terms: &[(u32, u32, i64)]) -> PowerSeries2<Rational> {
        let mut s = PowerSeries2::new(order);
        for &(i, j, c) in terms {
            s.set_coeff(i, j, rat(c));
        }
        s
    }

    #[test]
    fn branch_series_kills_the_y_derivative() {
        // ρ = y² + x²y: B = −x²/2 exactly.
        let rho = series(8, &[(0, 2, 1), (2, 1, 1)]);
        let b = solve_b(&rho).unwrap();
        assert_eq!(*b.coeff(2), ratio(-1, 2));
        assert!(dy_residual(&rho, &b).is_zero());
    }

    #[test]
    fn branch_series_of_pure_square_is_zero() {
        let rho = series(6, &[(0, 2, 1)]);
        assert!(solve_b(&rho).unwrap().is_zero());
    }

    #[test]
    fn degenerate_quadratic_is_reported() {
        let rho = series(6, &[(0, 3, 1)]);
        assert!(matches!(
            solve_b(&rho),
            Err(NormalFormError::DegenerateQuadratic)
        ));
    }

    #[test]
    fn unreduced_jet_is_reported_with_its_symbol() {
        let rho = series(6, &[(0, 2, 1), (1, 1, 3)]);
        match solve_b(&rho) {
            Err(NormalFormError::JetNotReduced { symbol }) => assert_eq!(symbol, "rho11"),
            other => panic!("expected a jet precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn cusp_jet_has_first_scalar_six() {
        // ρ = y² + x³.
        let rho = series(8, &[(0, 2, 1), (3, 0, 1)]);
        let inv = a_invariants(&rho, 6).unwrap();
        assert_eq!(inv.a(3), Some(&rat(6)));
        assert_eq!(inv.a(4), Some(&rat(0)));
        assert_eq!(inv.first_nonzero().map(|(k, _)| k), Some(3));
    }

    #[test]
    fn tacnode_jet_reads_at_degree_four() {
        // ρ = y² + x⁴: A₃ = 0, A₄ = 24.
        let rho = series(8, &[(0, 2, 1), (4, 0, 1)]);
        let inv = a_invariants(&rho, 6).unwrap();
        assert_eq!(inv.a(3), Some(&rat(0)));
        assert_eq!(inv.a(4), Some(&rat(24)));
    }

    #[test]
    fn branch_shift_feeds_back_into_the_scalars() {
        // ρ = y² + x²y: ρ(x, B) = −x⁴/4, so A₄ = −6.
        let rho = series(8, &[(0, 2, 1), (2, 1, 1)]);
        let inv = a_invariants(&rho, 5).unwrap();
        assert_eq!(inv.a(3), Some(&rat(0)));
        assert_eq!(inv.a(4), Some(&rat(-6)));
    }

    #[test]
    fn truncation_guard_for_a_scalars() {
        let rho = series(6, &[(0, 2, 1), (3, 0, 1)]);
        assert!(a_invariants(&rho, 6).is_ok());
        assert!(matches!(
            a_invariants(&rho, 7),
            Err(NormalFormError::TruncationTooLow { order: 6, k: 7 })
        ));
    }

    #[test]
    fn truncation_guard_for_d_scalars() {
        let rho = series(5, &[(1, 2, 1), (4, 0, 1)]);
        assert!(d_invariants(&rho, 7).is_ok());
        assert!(matches!(
            d_invariants(&rho, 8),
            Err(NormalFormError::TruncationTooLow { order: 5, k: 8 })
        ));
    }

    #[test]
    fn a_scalars_do_not_depend_on_extra_truncation_orders() {
        // A messy reduced jet, read at the minimal order and well above it.
        let terms = [
            (0, 2, 3),
            (2, 1, 2),
            (1, 2, -1),
            (3, 0, 5),
            (0, 3, 2),
            (4, 0, -3),
            (3, 1, 1),
            (2, 2, 4),
            (5, 0, 2),
            (4, 1, -2),
            (6, 0, 1),
            (7, 0, -4),
            (5, 2, 3),
        ];
        let tight = a_invariants(&series(7, &terms), 7).unwrap();
        let wide_terms: Vec<_> = terms
            .iter()
            .copied()
            .chain([(8, 0, 9), (0, 8, -5), (4, 4, 7)])
            .collect();
        let wide = a_invariants(&series(10, &wide_terms), 7).unwrap();
        for k in 3..=7 {
            assert_eq!(tight.a(k), wide.a(k), "A_{k} shifts with the order");
        }
    }

    #[test]
    fn d_scalars_do_not_depend_on_extra_truncation_orders() {
        let terms = [
            (1, 2, 2),
            (0, 3, 3),
            (4, 0, -1),
            (3, 1, 2),
            (2, 2, -3),
            (1, 3, 1),
            (0, 4, 2),
            (5, 0, 4),
            (4, 1, -2),
            (6, 0, 5),
            (5, 1, 1),
            (2, 4, -1),
        ];
        let tight = d_invariants(&series(6, &terms), 8).unwrap();
        let wide_terms: Vec<_> = terms
            .iter()
            .copied()
            .chain([(7, 0, 3), (0, 7, -2), (3, 4, 6)])
            .collect();
        let wide = d_invariants(&series(9, &wide_terms), 8).unwrap();
        for k in 6..=8 {
            assert_eq!(tight.d(k), wide.d(k), "D_{k} shifts with the order");
        }
    }

    #[test]
    fn vertical_branch_of_pure_cross_term_is_zero() {
        let rho = series(6, &[(1, 2, 1)]);
        assert!(solve_h(&rho).unwrap().is_zero());
    }

    #[test]
    fn vertical_branch_absorbs_the_cubic_coefficient() {
        // ρ = xy² + y³: H(0) = −ρ₀₃/(3ρ₁₂) = −1.
        let rho = series(8, &[(1, 2, 1), (0, 3, 1)]);
        let h = solve_h(&rho).unwrap();
        assert_eq!(*h.coeff(0), rat(-1));
        assert!(substitute_x_with_yh(&rho, &h).is_zero());
    }

    #[test]
    fn degenerate_cubic_is_reported() {
        let rho = series(6, &[(0, 3, 1)]);
        assert!(matches!(
            solve_h(&rho),
            Err(NormalFormError::DegenerateCubic)
        ));
    }

    #[test]
    fn five_fold_point_reads_at_degree_six() {
        // ρ = xy² + x⁴: D₆ = 4!·1 = 24.
        let rho = series(9, &[(1, 2, 1), (4, 0, 1)]);
        let inv = d_invariants(&rho, 7).unwrap();
        assert_eq!(inv.d(6), Some(&rat(24)));
        assert_eq!(inv.first_nonzero().map(|(k, _)| k), Some(6));
    }

    #[test]
    fn six_fold_point_reads_at_degree_seven() {
        // ρ = xy² + x⁵: D₆ = 0, D₇ = 5!·1 = 120.
        let rho = series(10, &[(1, 2, 1), (5, 0, 1)]);
        let inv = d_invariants(&rho, 8).unwrap();
        assert_eq!(inv.d(6), Some(&rat(0)));
        assert_eq!(inv.d(7), Some(&rat(120)));
        assert_eq!(inv.d(8), Some(&rat(0)));
    }

    #[test]
    fn degenerate_vertical_family_has_no_scalars() {
        let rho = series(9, &[(1, 2, 1)]);
        let inv = d_invariants(&rho, 7).unwrap();
        assert_eq!(inv.first_nonzero(), None);
    }

    #[test]
    fn dual_quantities_on_sample_jets() {
        // f₄₀ = 16, f₃₁ = 2, f₂₂ = 1, f₁₃ = 0 gives the quartic-jet scalar 5.
        let mut rho = PowerSeries2::<Rational>::new(4);
        rho.set_rho(4, 0, rat(16));
        rho.set_rho(3, 1, rat(2));
        rho.set_rho(2, 2, rat(1));
        let q = dual_quantities(&rho);
        assert_eq!(q.psi_j, rat(5));

        // A cubic with three distinct roots has nonzero discriminant.
        let mut cusp = PowerSeries2::<Rational>::new(4);
        cusp.set_rho(3, 0, rat(6));
        cusp.set_rho(0, 3, rat(6));
        let q = dual_quantities(&cusp);
        assert_eq!(q.beta_cubic, rat(36 * 36));

        // A cubic with a repeated root direction has vanishing discriminant.
        let mut degenerate = PowerSeries2::<Rational>::new(4);
        degenerate.set_rho(1, 2, rat(2));
        let q = dual_quantities(&degenerate);
        assert!(q.beta_cubic.is_zero());
        assert_eq!(q.psi_d5_dual, rat(12));
    }

    #[test]
    fn dual_section_scalars_expand_the_jet() {
        let mut rho = PowerSeries2::<Rational>::new(4);
        rho.set_rho(2, 1, rat(1));
        rho.set_rho(0, 3, rat(2));
        rho.set_rho(1, 2, rat(3));
        let q = dual_quantities(&rho);
        assert_eq!(q.psi_d5_dual, rat(3 * 9 - 4 * 2));
        rho.set_rho(4, 0, rat(1));
        rho.set_rho(3, 1, rat(1));
        rho.set_rho(2, 2, rat(1));
        rho.set_rho(1, 3, rat(1));
        rho.set_rho(0, 4, rat(1));
        let q = dual_quantities(&rho);
        assert_eq!(q.psi_d6_dual, rat(81 - 8 * 27 + 24 * 9 - 32 * 3 + 16));
    }
}
