//! Catalog of the line bundles driving the census, their first Chern
//! classes, and the Euler-class towers that cut out closure strata.
//!
//! Every bundle is a formal tensor word in four generator line bundles,
//! recorded as an exponent map. Their first Chern classes are:
//!
//! - `GammaD_dual` (dual tautological bundle on the curve space) → `y`
//! - `GammaP2_dual_d` (d-th power of the dual tautological bundle on the
//!   plane) → `d·a`
//! - `Taut_dual` (dual tautological bundle on the projectivised tangent
//!   bundle) → `λ`
//! - `Quot_dual` (dual of the quotient of the tangent bundle by the
//!   tautological line) → `−(3a + λ)`
//!
//! A handful of strata are transverse intersections of sections of these
//! bundles; [`tower`] returns their ordered Euler-class factors. Strata
//! without such a global description yield [`BundleError::NoCleanTower`]
//! and must be reached through the recursion instead.

use crate::algebra::DPoly;
use crate::cohomology::{coh_mul, Base, CohClass};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Errors raised by catalog and tower lookups.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BundleError {
    /// The requested name (or name/k combination) is not in the catalog.
    #[error("unknown bundle: {name}")]
    UnknownBundle { name: String },
    /// The requested stratum is not a global transverse intersection of
    /// catalog sections; the caller must use the recursion route.
    #[error("no clean tower for stratum {stratum}")]
    NoCleanTower { stratum: String },
}

/// Generator line bundles of the tensor-word monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Generator {
    TautDual,
    QuotDual,
    GammaDDual,
    GammaP2DualD,
}

impl Generator {
    fn label(self) -> &'static str {
        match self {
            Generator::TautDual => "Taut_dual",
            Generator::QuotDual => "Quot_dual",
            Generator::GammaDDual => "GammaD_dual",
            Generator::GammaP2DualD => "GammaP2_dual_d",
        }
    }

    /// First Chern class of the generator.
    fn c1(self) -> CohClass {
        match self {
            Generator::TautDual => CohClass::lam(),
            Generator::QuotDual => {
                let a3 = CohClass::monomial(0, 1, 0, DPoly::from_int(-3));
                a3.sub(&CohClass::lam())
            }
            Generator::GammaDDual => CohClass::y(),
            Generator::GammaP2DualD => CohClass::monomial(0, 1, 0, DPoly::d()),
        }
    }
}

/// A line bundle as a formal tensor word in the four generators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LineBundleDesc {
    powers: BTreeMap<Generator, i64>,
}

impl LineBundleDesc {
    /// Build from (generator, exponent) pairs; zero exponents are dropped.
    pub fn new(powers: impl IntoIterator<Item = (Generator, i64)>) -> Self {
        let mut map = BTreeMap::new();
        for (g, e) in powers {
            if e != 0 {
                *map.entry(g).or_insert(0) += e;
            }
        }
        map.retain(|_, e| *e != 0);
        LineBundleDesc { powers: map }
    }

    /// Exponent of a generator in the word.
    pub fn exponent(&self, g: Generator) -> i64 {
        self.powers.get(&g).copied().unwrap_or(0)
    }

    /// First Chern class, additive over the exponents.
    pub fn c1(&self) -> CohClass {
        c1_of(self)
    }
}

impl fmt::Display for LineBundleDesc {
    /// Tensor word such as `Taut_dual^2 ⊗ Quot_dual ⊗ GammaD_dual`.
    /// The trivial word renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (g, e) in &self.powers {
            if !first {
                write!(f, " ⊗ ")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{}", g.label())?;
            } else {
                write!(f, "{}^{}", g.label(), e)?;
            }
        }
        Ok(())
    }
}

/// First Chern class of a tensor word.
pub fn c1_of(desc: &LineBundleDesc) -> CohClass {
    let mut out = CohClass::zero();
    for (g, e) in &desc.powers {
        out = out.add(&g.c1().scale_poly(&DPoly::from_int(*e)));
    }
    out
}

/// A rank-2 bundle of the form `L ⊗ π*T*P²` for a line bundle `L`,
/// represented by the twisting class `t = c₁(L)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTwoTwist {
    pub twist_c1: CohClass,
}

impl RankTwoTwist {
    pub fn new(twist_c1: CohClass) -> Self {
        RankTwoTwist { twist_c1 }
    }

    /// Euler class of the twist.
    pub fn euler(&self) -> CohClass {
        euler_rank2_twist(&self.twist_c1)
    }
}

/// Euler class `t² − 3a·t + 3a²` of a rank-2 twist by the cotangent bundle
/// of the plane, whose Chern classes are `c₁ = −3a` and `c₂ = 3a²`.
pub fn euler_rank2_twist(t: &CohClass) -> CohClass {
    let a = CohClass::a();
    let t_sq = coh_mul(t, t);
    let cross = coh_mul(&a, t).scale_poly(&DPoly::from_int(-3));
    let a_sq = coh_mul(&a, &a).scale_poly(&DPoly::from_int(3));
    t_sq.add(&cross).add(&a_sq)
}

/// Look up a catalog entry by name.
///
/// Parametric families take `k` either as the argument (`"L_PAk"` with
/// `k = Some(4)`) or baked into the name (`"L_PA4"`); the two must agree
/// when both are given. Valid ranges: `L_PAk` needs `k ≥ 3`, `L_PDk` needs
/// `6 ≤ k ≤ 8`. Everything else is [`BundleError::UnknownBundle`].
pub fn catalog(name: &str, k: Option<u32>) -> Result<LineBundleDesc, BundleError> {
    use Generator::*;
    let unknown = || BundleError::UnknownBundle {
        name: match k {
            Some(k) => format!("{name} (k={k})"),
            None => name.to_string(),
        },
    };
    let make = |powers: &[(Generator, i64)]| Ok(LineBundleDesc::new(powers.iter().copied()));
    let parametric = |family: char, k_from_name: Option<u32>| {
        let k = match (k, k_from_name) {
            (Some(a), Some(b)) if a != b => return Err(unknown()),
            (Some(a), _) => a,
            (None, Some(b)) => b,
            (None, None) => return Err(unknown()),
        };
        let k = i64::from(k);
        match family {
            'A' if k >= 3 => make(&[
                (TautDual, k),
                (QuotDual, 2 * k - 6),
                (GammaDDual, k - 2),
                (GammaP2DualD, k - 2),
            ]),
            'D' if (6..=8).contains(&k) => {
                let eps = match k {
                    6 => 0,
                    7 => 1,
                    _ => 3,
                };
                make(&[
                    (TautDual, k - 2 + eps),
                    (QuotDual, 2 * eps),
                    (GammaDDual, 1 + eps),
                    (GammaP2DualD, 1 + eps),
                ])
            }
            _ => Err(unknown()),
        }
    };
    match name {
        "L_A0" => make(&[(GammaDDual, 1), (GammaP2DualD, 1)]),
        "L_PD4" => make(&[(QuotDual, 2), (GammaDDual, 1), (GammaP2DualD, 1)]),
        "L_PD5" => make(&[
            (TautDual, 2),
            (QuotDual, 1),
            (GammaDDual, 1),
            (GammaP2DualD, 1),
        ]),
        "L_PD5_dual" => make(&[
            (TautDual, 2),
            (QuotDual, 4),
            (GammaDDual, 2),
            (GammaP2DualD, 2),
        ]),
        "L_PD6_dual" => make(&[
            (TautDual, 8),
            (QuotDual, 4),
            (GammaDDual, 5),
            (GammaP2DualD, 5),
        ]),
        "L_PE6" => make(&[
            (TautDual, 1),
            (QuotDual, 2),
            (GammaDDual, 1),
            (GammaP2DualD, 1),
        ]),
        "L_PE7" => make(&[(TautDual, 4), (GammaDDual, 1), (GammaP2DualD, 1)]),
        "L_PE8" => make(&[
            (TautDual, 3),
            (QuotDual, 1),
            (GammaDDual, 1),
            (GammaP2DualD, 1),
        ]),
        "L_PX8" => make(&[(QuotDual, 3), (GammaDDual, 1), (GammaP2DualD, 1)]),
        "L_J" => make(&[
            (TautDual, 9),
            (QuotDual, 3),
            (GammaDDual, 3),
            (GammaP2DualD, 3),
        ]),
        "L_PAk" => parametric('A', None),
        "L_PDk" => parametric('D', None),
        _ => {
            if let Some(rest) = name.strip_prefix("L_PA") {
                if let Ok(k_name) = rest.parse::<u32>() {
                    return parametric('A', Some(k_name));
                }
            }
            if let Some(rest) = name.strip_prefix("L_PD") {
                if let Ok(k_name) = rest.parse::<u32>() {
                    return parametric('D', Some(k_name));
                }
            }
            Err(unknown())
        }
    }
}

/// Closure strata addressable by [`tower`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stratum {
    A0,
    A1,
    A1Sharp,
    PA2,
    PA3,
    PA4,
    PA5,
    PA6,
    PA7,
    PD4,
    PD5,
    PD6,
    PD7,
    PE6,
    PE7,
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            Stratum::A0 => "A0",
            Stratum::A1 => "A1",
            Stratum::A1Sharp => "A1#",
            Stratum::PA2 => "PA2",
            Stratum::PA3 => "PA3",
            Stratum::PA4 => "PA4",
            Stratum::PA5 => "PA5",
            Stratum::PA6 => "PA6",
            Stratum::PA7 => "PA7",
            Stratum::PD4 => "PD4",
            Stratum::PD5 => "PD5",
            Stratum::PD6 => "PD6",
            Stratum::PD7 => "PD7",
            Stratum::PE6 => "PE6",
            Stratum::PE7 => "PE7",
        };
        write!(f, "{tag}-closure")
    }
}

/// One Euler-class factor of a tower, with its rank for codimension
/// bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerFactor {
    pub class: CohClass,
    pub rank: u32,
}

/// Ordered Euler-class factors whose product is the Poincaré dual of a
/// closure stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumTower {
    pub stratum: Stratum,
    pub base: Base,
    pub factors: Vec<TowerFactor>,
}

impl StratumTower {
    /// Sum of factor ranks: the complex codimension of the stratum in its
    /// ambient space.
    pub fn total_codim(&self) -> u32 {
        self.factors.iter().map(|f| f.rank).sum()
    }

    /// Product of all factors.
    pub fn product(&self) -> CohClass {
        let mut out = CohClass::one();
        for f in &self.factors {
            out = coh_mul(&out, &f.class);
        }
        out
    }
}

/// Ordered Euler-class factors cutting out a closure stratum.
///
/// Supported strata and codimensions: `A0` (1) and `A1` (3) over the plane
/// base, then `A1#` (3), `PA2` (5), `PA3` (6), `PD4` (7), `PD5` (8),
/// `PD6` (9) over the marked-direction base, and `PE6` (9) branching off
/// the `PD5` chain. Everything else fails with
/// [`BundleError::NoCleanTower`].
pub fn tower(stratum: Stratum) -> Result<StratumTower, BundleError> {
    let line = |name: &str, k: Option<u32>| -> TowerFactor {
        let desc = catalog(name, k).expect("tower factor names come from the fixed catalog");
        TowerFactor {
            class: c1_of(&desc),
            rank: 1,
        }
    };
    let twist = |t: &CohClass| TowerFactor {
        class: euler_rank2_twist(t),
        rank: 2,
    };

    let a0 = line("L_A0", None);
    let v_a1 = twist(&a0.class);
    let v_pa2 = twist(&CohClass::lam().add(&a0.class));

    let (base, factors) = match stratum {
        Stratum::A0 => (Base::P2, vec![a0]),
        Stratum::A1 => (Base::P2, vec![a0, v_a1]),
        Stratum::A1Sharp => (Base::PTP2, vec![a0, v_a1]),
        Stratum::PA2 => (Base::PTP2, vec![a0, v_a1, v_pa2]),
        Stratum::PA3 => (
            Base::PTP2,
            vec![a0, v_a1, v_pa2, line("L_PAk", Some(3))],
        ),
        Stratum::PD4 => (
            Base::PTP2,
            vec![a0, v_a1, v_pa2, line("L_PAk", Some(3)), line("L_PD4", None)],
        ),
        Stratum::PD5 => (
            Base::PTP2,
            vec![
                a0,
                v_a1,
                v_pa2,
                line("L_PAk", Some(3)),
                line("L_PD4", None),
                line("L_PD5", None),
            ],
        ),
        Stratum::PD6 => (
            Base::PTP2,
            vec![
                a0,
                v_a1,
                v_pa2,
                line("L_PAk", Some(3)),
                line("L_PD4", None),
                line("L_PD5", None),
                line("L_PDk", Some(6)),
            ],
        ),
        Stratum::PE6 => (
            Base::PTP2,
            vec![
                a0,
                v_a1,
                v_pa2,
                line("L_PAk", Some(3)),
                line("L_PD4", None),
                line("L_PD5", None),
                line("L_PE6", None),
            ],
        ),
        Stratum::PA4
        | Stratum::PA5
        | Stratum::PA6
        | Stratum::PA7
        | Stratum::PD7
        | Stratum::PE7 => {
            return Err(BundleError::NoCleanTower {
                stratum: stratum.to_string(),
            })
        }
    };
    Ok(StratumTower {
        stratum,
        base,
        factors,
    })
}
