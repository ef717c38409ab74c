//! The census engine: numbers of degree-`d` plane curves with one
//! prescribed singularity through generic points and lines.
//!
//! [`Census::n_final`] produces `N(X_k, n)`: curves of degree `d` carrying a
//! singularity of type `X_k` whose singular point lies on `n` generic lines,
//! through the complementary number of generic points. The engine first
//! computes the marked-direction refinements `N(PX_k, n, m)` by a memoized
//! recursion seeded at the node count, then descends via `m = 0` (with a
//! three-to-one division for `D₄`). The same numbers are reachable through
//! Euler-class pairings over the closure towers ([`n_via_tower`]), which is
//! the independent cross-check route driven by [`Census::verify_all`].
//!
//! Invariants:
//! - memoized keys are always normalized: `n ≤ 2` and `m ≤ 1`;
//! - the recursion's dependency order is a DAG; re-entering an in-progress
//!   key on the same thread is an internal error, never a hang;
//! - final counts have integer coefficients and degree at most 2 in `d`.

use crate::algebra::{rat, DPoly, DivError};
use crate::bundles::{
    c1_of, catalog, tower, BundleError, LineBundleDesc, RankTwoTwist, Stratum,
};
use crate::cohomology::{coh_mul, pair, Base, CohClass, PairError};
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Mutex;
use std::thread::{self, ThreadId};
use thiserror::Error;

/// Errors raised by the census engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CountError {
    /// The requested singularity/key is outside the supported range.
    #[error("unsupported key: {detail}")]
    UnsupportedKey { detail: String },
    /// An exact division failed; this indicates corrupted recursion data,
    /// not a user error.
    #[error(transparent)]
    NonIntegralDivision(#[from] DivError),
    /// Propagated catalog/tower failure.
    #[error(transparent)]
    Bundle(#[from] BundleError),
    /// Propagated pairing failure.
    #[error(transparent)]
    Pair(#[from] PairError),
    /// An internal invariant was violated.
    #[error("internal invariant violated: {detail}")]
    Internal { detail: String },
}

/// Singularity family tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::D => write!(f, "D"),
            Family::E => write!(f, "E"),
        }
    }
}

/// A singularity type `X_k` addressable by the census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingSpec {
    pub family: Family,
    pub k: u32,
}

impl SingSpec {
    pub const fn new(family: Family, k: u32) -> Self {
        SingSpec { family, k }
    }

    /// True for the supported range: `A₁..A₇`, `D₄..D₇`, `E₆`, `E₇`.
    pub fn is_supported(&self) -> bool {
        match self.family {
            Family::A => (1..=7).contains(&self.k),
            Family::D => (4..=7).contains(&self.k),
            Family::E => (6..=7).contains(&self.k),
        }
    }

    /// Smallest degree `d` for which the count is guaranteed enumerative:
    /// `k+1` for `A_k`, `k−1` for `D_k`, `4` for `E₆` and `E₇`.
    pub fn validity_bound(&self) -> i64 {
        match self.family {
            Family::A => i64::from(self.k) + 1,
            Family::D => i64::from(self.k) - 1,
            Family::E => 4,
        }
    }

    /// All supported types in table order.
    pub fn all() -> Vec<SingSpec> {
        let mut out = Vec::new();
        for k in 1..=7 {
            out.push(SingSpec::new(Family::A, k));
        }
        for k in 4..=7 {
            out.push(SingSpec::new(Family::D, k));
        }
        for k in 6..=7 {
            out.push(SingSpec::new(Family::E, k));
        }
        out
    }

    /// Parse a plain tag such as `A5`, `D6`, or `E7`.
    pub fn parse(tag: &str) -> Result<SingSpec, CountError> {
        let unsupported = || CountError::UnsupportedKey {
            detail: format!("unrecognized singularity tag {tag:?} (expected A1..A7, D4..D7, E6, E7)"),
        };
        let mut chars = tag.chars();
        let family = match chars.next() {
            Some('A') | Some('a') => Family::A,
            Some('D') | Some('d') => Family::D,
            Some('E') | Some('e') => Family::E,
            _ => return Err(unsupported()),
        };
        let k: u32 = chars.as_str().parse().map_err(|_| unsupported())?;
        let spec = SingSpec::new(family, k);
        if spec.is_supported() {
            Ok(spec)
        } else {
            Err(CountError::UnsupportedKey {
                detail: format!("{spec} is outside the supported range (A1..A7, D4..D7, E6, E7)"),
            })
        }
    }
}

impl fmt::Display for SingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.k)
    }
}

/// One multiplicity correction: the counting section for `target` vanishes
/// along the `over` stratum with the given multiplicity, which the recursion
/// subtracts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorrectionEntry {
    pub target: SingSpec,
    pub over: SingSpec,
    pub multiplicity: i64,
}

/// The fixed table of multiplicity corrections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectionTable {
    entries: Vec<CorrectionEntry>,
}

impl CorrectionTable {
    /// The five standard entries.
    pub fn standard() -> Self {
        let entry = |target, over, multiplicity| CorrectionEntry {
            target,
            over,
            multiplicity,
        };
        let a = |k| SingSpec::new(Family::A, k);
        let d = |k| SingSpec::new(Family::D, k);
        let e = |k| SingSpec::new(Family::E, k);
        CorrectionTable {
            entries: vec![
                entry(a(5), d(5), 2),
                entry(a(6), d(6), 4),
                entry(a(6), e(6), 3),
                entry(a(7), d(7), 6),
                entry(a(7), e(7), 7),
            ],
        }
    }

    pub fn entries(&self) -> &[CorrectionEntry] {
        &self.entries
    }

    /// Overwrite the multiplicity of one entry; returns false when the
    /// (target, over) pair is absent. Exists for fault-injection tests.
    pub fn set_multiplicity(&mut self, target: SingSpec, over: SingSpec, multiplicity: i64) -> bool {
        for entry in &mut self.entries {
            if entry.target == target && entry.over == over {
                entry.multiplicity = multiplicity;
                return true;
            }
        }
        false
    }

    fn for_target(&self, target: SingSpec) -> impl Iterator<Item = &CorrectionEntry> {
        self.entries.iter().filter(move |e| e.target == target)
    }
}

impl Default for CorrectionTable {
    fn default() -> Self {
        CorrectionTable::standard()
    }
}

/// One recursion step: the count for `target` in terms of the previous
/// stratum, with coefficient pattern `α·prev(n,m) + β·prev(n,m+1) +
/// γ(d)·prev(n+1,m)` matching the first Chern class `α·y + β·λ + γ·a` of
/// the named catalog bundle.
#[derive(Debug, Clone)]
pub struct RecursionStep {
    pub label: &'static str,
    pub target: SingSpec,
    pub prev: SingSpec,
    pub alpha: i64,
    pub beta: i64,
    pub gamma: DPoly,
    pub bundle_name: &'static str,
    pub bundle_k: Option<u32>,
}

/// The fixed table of all eleven recursion steps.
pub fn recursion_steps() -> Vec<RecursionStep> {
    let a = |k| SingSpec::new(Family::A, k);
    let d = |k| SingSpec::new(Family::D, k);
    let e = |k| SingSpec::new(Family::E, k);
    let step = |label, target, prev, alpha, beta, g1, g0, bundle_name, bundle_k| RecursionStep {
        label,
        target,
        prev,
        alpha,
        beta,
        gamma: DPoly::linear(g1, g0),
        bundle_name,
        bundle_k,
    };
    vec![
        step("PA3", a(3), a(2), 1, 3, 1, 0, "L_PAk", Some(3)),
        step("PA4", a(4), a(3), 2, 2, 2, -6, "L_PAk", Some(4)),
        step("PA5", a(5), a(4), 3, 1, 3, -12, "L_PAk", Some(5)),
        step("PA6", a(6), a(5), 4, 0, 4, -18, "L_PAk", Some(6)),
        step("PA7", a(7), a(6), 5, -1, 5, -24, "L_PAk", Some(7)),
        step("PD4", d(4), a(3), 1, -2, 1, -6, "L_PD4", None),
        step("PD5", d(5), d(4), 1, 1, 1, -3, "L_PD5", None),
        step("PD6", d(6), d(5), 1, 4, 1, 0, "L_PDk", Some(6)),
        step("PD7", d(7), d(6), 2, 4, 2, -6, "L_PDk", Some(7)),
        step("PE6", e(6), d(5), 1, -1, 1, -6, "L_PE6", None),
        step("PE7", e(7), d(6), 1, -1, 1, -6, "L_PE6", None),
    ]
}

/// Base of the recursion: curves with a node on `n` generic lines.
/// `3(d−1)²` for `n = 0`, `3(d−1)` for `n = 1`, `1` for `n = 2`, zero
/// beyond.
pub fn n_a1(n: u32) -> DPoly {
    match n {
        0 => DPoly::from_coeffs(vec![rat(3), rat(-6), rat(3)]),
        1 => DPoly::linear(3, -3),
        2 => DPoly::from_int(1),
        _ => DPoly::zero(),
    }
}

/// An additional Euler-class factor appended to a tower by
/// [`n_via_tower`].
#[derive(Debug, Clone)]
pub enum ExtraFactor {
    /// A line bundle; contributes its first Chern class, rank 1.
    Line(LineBundleDesc),
    /// A rank-2 cotangent twist; contributes its Euler class, rank 2.
    Twist(RankTwoTwist),
}

/// Compute a count by pairing Euler classes instead of running the
/// recursion: the product of the stratum tower's factors (times the extra
/// factor, when given) times `a^n λ^m`, evaluated against the fundamental
/// class.
pub fn n_via_tower(
    stratum: Stratum,
    extra: Option<&ExtraFactor>,
    n: u32,
    m: u32,
) -> Result<DPoly, CountError> {
    let tower = tower(stratum)?;
    let mut class = tower.product();
    let mut codim = tower.total_codim();
    match extra {
        Some(ExtraFactor::Line(desc)) => {
            class = coh_mul(&class, &c1_of(desc));
            codim += 1;
        }
        Some(ExtraFactor::Twist(twist)) => {
            class = coh_mul(&class, &twist.euler());
            codim += 2;
        }
        None => {}
    }
    class = coh_mul(&class, &CohClass::monomial(0, n, m, DPoly::from_int(1)));
    let fibre_dim = match tower.base {
        Base::P2 => 2,
        Base::PTP2 => 3,
    };
    let deficit = i64::from(codim) + i64::from(n) + i64::from(m) - fibre_dim;
    Ok(pair(&class, tower.base, deficit)?)
}

/// A tower route known to reproduce a recursion count: the stratum (plus
/// optional extra factor) whose pairing equals `N(P target, n, m)`.
#[derive(Debug, Clone)]
pub struct TowerRoute {
    pub label: &'static str,
    pub stratum: Stratum,
    pub extra: Option<ExtraFactor>,
    pub target: SingSpec,
}

/// The fixed list of marked-count tower routes (valid for all `n`, `m`).
pub fn tower_routes() -> Vec<TowerRoute> {
    let v_pa2 = RankTwoTwist::new(
        CohClass::lam()
            .add(&CohClass::y())
            .add(&CohClass::monomial(0, 1, 0, DPoly::d())),
    );
    let pe6_line = catalog("L_PE6", None).expect("fixed catalog entry");
    vec![
        TowerRoute {
            label: "PA2",
            stratum: Stratum::A1Sharp,
            extra: Some(ExtraFactor::Twist(v_pa2)),
            target: SingSpec::new(Family::A, 2),
        },
        TowerRoute {
            label: "PA3",
            stratum: Stratum::PA3,
            extra: None,
            target: SingSpec::new(Family::A, 3),
        },
        TowerRoute {
            label: "PD4",
            stratum: Stratum::PD4,
            extra: None,
            target: SingSpec::new(Family::D, 4),
        },
        TowerRoute {
            label: "PD5",
            stratum: Stratum::PD5,
            extra: None,
            target: SingSpec::new(Family::D, 5),
        },
        TowerRoute {
            label: "PD6",
            stratum: Stratum::PD6,
            extra: None,
            target: SingSpec::new(Family::D, 6),
        },
        TowerRoute {
            label: "PE6",
            stratum: Stratum::PE6,
            extra: None,
            target: SingSpec::new(Family::E, 6),
        },
        TowerRoute {
            label: "PE7",
            stratum: Stratum::PD6,
            extra: Some(ExtraFactor::Line(pe6_line)),
            target: SingSpec::new(Family::E, 7),
        },
    ]
}

type MemoKey = (SingSpec, u32, u32);

/// The memoizing census engine.
///
/// The memo table admits concurrent readers with serialized insertion; each
/// thread tracks its own in-progress keys so that a same-thread re-entry
/// (a cycle in the recursion data) surfaces as an internal error.
pub struct Census {
    memo: Mutex<HashMap<MemoKey, DPoly>>,
    in_progress: Mutex<HashSet<(ThreadId, MemoKey)>>,
    corrections: CorrectionTable,
}

impl Default for Census {
    fn default() -> Self {
        Census::new()
    }
}

impl Census {
    pub fn new() -> Self {
        Census::with_corrections(CorrectionTable::standard())
    }

    /// Build with a custom correction table (fault-injection hook).
    pub fn with_corrections(corrections: CorrectionTable) -> Self {
        Census {
            memo: Mutex::new(HashMap::new()),
            in_progress: Mutex::new(HashSet::new()),
            corrections,
        }
    }

    /// The marked-direction count `N(PX_k, n, m)` as an exact polynomial.
    pub fn n_p(&self, spec: SingSpec, n: u32, m: u32) -> Result<DPoly, CountError> {
        if !spec.is_supported() {
            return Err(CountError::UnsupportedKey {
                detail: format!("{spec} is outside the supported range"),
            });
        }
        if spec == SingSpec::new(Family::A, 1) {
            return Err(CountError::UnsupportedKey {
                detail: "no marked-direction count is defined for A1; use the final count"
                    .to_string(),
            });
        }
        if spec == SingSpec::new(Family::A, 7) && m >= 1 {
            return Err(CountError::UnsupportedKey {
                detail: "N(PA7, n, m) is defined only at m = 0".to_string(),
            });
        }
        if n >= 3 {
            return Ok(DPoly::zero());
        }
        if m >= 2 {
            let t1 = self.n_p(spec, n + 1, m - 1)?.scale(-3);
            let t2 = self.n_p(spec, n + 2, m - 2)?.scale(-3);
            return Ok(t1.add(&t2));
        }
        let key = (spec, n, m);
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let guard = (thread::current().id(), key);
        if !self.in_progress.lock().unwrap().insert(guard) {
            return Err(CountError::Internal {
                detail: format!("recursion re-entered {spec} n={n} m={m}; dependency cycle"),
            });
        }
        let result = self.compute(spec, n, m);
        self.in_progress.lock().unwrap().remove(&guard);
        let poly = result?;
        self.memo.lock().unwrap().insert(key, poly.clone());
        Ok(poly)
    }

    fn compute(&self, spec: SingSpec, n: u32, m: u32) -> Result<DPoly, CountError> {
        if spec == SingSpec::new(Family::A, 2) {
            return Ok(match m {
                // 2·N(A₁,n) + (2d−6)·N(A₁,n+1)
                0 => n_a1(n)
                    .scale(2)
                    .add(&n_a1(n + 1).mul(&DPoly::linear(2, -6))),
                // N(A₁,n) + (2d−9)·N(A₁,n+1) + (d²−9d+18)·N(A₁,n+2)
                _ => n_a1(n)
                    .add(&n_a1(n + 1).mul(&DPoly::linear(2, -9)))
                    .add(&n_a1(n + 2).mul(&DPoly::from_coeffs(vec![rat(18), rat(-9), rat(1)]))),
            });
        }
        let step = recursion_steps()
            .into_iter()
            .find(|s| s.target == spec)
            .ok_or_else(|| CountError::Internal {
                detail: format!("no recursion step for {spec}"),
            })?;
        let mut acc = DPoly::zero();
        if step.alpha != 0 {
            acc = acc.add(&self.n_p(step.prev, n, m)?.scale(step.alpha));
        }
        if step.beta != 0 {
            acc = acc.add(&self.n_p(step.prev, n, m + 1)?.scale(step.beta));
        }
        if !step.gamma.is_zero() {
            acc = acc.add(&self.n_p(step.prev, n + 1, m)?.mul(&step.gamma));
        }
        for entry in self.corrections.for_target(spec) {
            acc = acc.sub(&self.n_p(entry.over, n, m)?.scale(entry.multiplicity));
        }
        Ok(acc)
    }

    /// The final count `N(X_k, n)`: `A₁` from the base case, `D₄` from the
    /// three-to-one marked count, everything else the `m = 0` marked count.
    pub fn n_final(&self, spec: SingSpec, n: u32) -> Result<DPoly, CountError> {
        if !spec.is_supported() {
            return Err(CountError::UnsupportedKey {
                detail: format!("{spec} is outside the supported range"),
            });
        }
        if spec == SingSpec::new(Family::A, 1) {
            return Ok(n_a1(n));
        }
        let marked = self.n_p(spec, n, 0)?;
        if spec == SingSpec::new(Family::D, 4) {
            return Ok(marked.div_exact(3)?);
        }
        Ok(marked)
    }

    /// Run the complete cross-check battery.
    pub fn verify_all(&self) -> VerifyReport {
        let mut checks = Vec::new();

        for step in recursion_steps() {
            match catalog(step.bundle_name, step.bundle_k) {
                Ok(desc) => checks.push(check_c1_pattern(&step, &desc)),
                Err(e) => checks.push(CheckResult {
                    name: format!("c1[{}]", step.label),
                    passed: false,
                    detail: e.to_string(),
                }),
            }
        }

        for n in 0..=2 {
            checks.push(self.compare(
                format!("tower[A1 n={n}]"),
                n_via_tower(Stratum::A1, None, n, 0),
                Ok(n_a1(n)),
            ));
        }
        for route in tower_routes() {
            for n in 0..=2 {
                for m in 0..=1 {
                    checks.push(self.compare(
                        format!("tower[{} n={n} m={m}]", route.label),
                        n_via_tower(route.stratum, route.extra.as_ref(), n, m),
                        self.n_p(route.target, n, m),
                    ));
                }
            }
        }
        let dual = catalog("L_PD5_dual", None).map(ExtraFactor::Line);
        for n in 0..=2 {
            let got = dual
                .clone()
                .map_err(CountError::from)
                .and_then(|extra| n_via_tower(Stratum::PD4, Some(&extra), n, 0));
            checks.push(self.compare(
                format!("dual[D5 n={n}]"),
                got,
                self.n_p(SingSpec::new(Family::D, 5), n, 0),
            ));
        }

        let spot_values: &[(Family, u32, u32, i64, i64)] = &[
            (Family::A, 1, 0, 2, 3),
            (Family::A, 1, 0, 3, 12),
            (Family::A, 1, 1, 2, 3),
            (Family::A, 2, 0, 3, 24),
            (Family::A, 2, 0, 4, 72),
            (Family::A, 4, 0, 3, 0),
            (Family::D, 4, 0, 3, 15),
            (Family::D, 4, 1, 3, 6),
            (Family::E, 6, 0, 4, 147),
        ];
        for &(family, k, n, d, want) in spot_values {
            let spec = SingSpec::new(family, k);
            let name = format!("value[{spec} n={n} d={d}]");
            match self.n_final(spec, n) {
                Ok(poly) => {
                    let got = poly.eval(d);
                    checks.push(CheckResult {
                        passed: got == rat(want),
                        detail: if got == rat(want) {
                            format!("= {want}")
                        } else {
                            format!("got {got}, want {want}")
                        },
                        name,
                    });
                }
                Err(e) => checks.push(CheckResult {
                    name,
                    passed: false,
                    detail: e.to_string(),
                }),
            }
        }

        let frozen_forms: &[(Family, u32, u32, [i64; 3])] = &[
            (Family::A, 1, 0, [3, -6, 3]),
            (Family::A, 2, 0, [24, -36, 12]),
            (Family::D, 4, 0, [60, -60, 15]),
            (Family::D, 4, 1, [-12, 6, 0]),
            (Family::A, 4, 0, [900, -840, 180]),
            (Family::E, 6, 0, [567, -441, 84]),
        ];
        for &(family, k, n, coeffs) in frozen_forms {
            let spec = SingSpec::new(family, k);
            let want = DPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect());
            checks.push(self.compare(
                format!("form[{spec} n={n}]"),
                self.n_final(spec, n),
                Ok(want),
            ));
        }

        for n in 0..=2 {
            let name = format!("divisibility[PD4 n={n}]");
            match self.n_p(SingSpec::new(Family::D, 4), n, 0) {
                Ok(poly) => {
                    let ok = poly.div_exact(3).is_ok();
                    checks.push(CheckResult {
                        name,
                        passed: ok,
                        detail: if ok {
                            format!("{poly} divisible by 3")
                        } else {
                            format!("{poly} not divisible by 3")
                        },
                    });
                }
                Err(e) => checks.push(CheckResult {
                    name,
                    passed: false,
                    detail: e.to_string(),
                }),
            }
        }

        for spec in SingSpec::all() {
            let name = format!("integrality[{spec}]");
            let mut detail = Vec::new();
            let mut passed = true;
            for n in 0..=2 {
                match self.n_final(spec, n) {
                    Ok(poly) => {
                        let ok = poly.has_integer_coeffs()
                            && poly.degree().unwrap_or(0) <= 2;
                        if !ok {
                            passed = false;
                            detail.push(format!("n={n}: {poly} violates integrality/degree"));
                        }
                    }
                    Err(e) => {
                        passed = false;
                        detail.push(format!("n={n}: {e}"));
                    }
                }
            }
            checks.push(CheckResult {
                name,
                passed,
                detail: if passed {
                    "integer coefficients, degree ≤ 2 for n = 0..2".to_string()
                } else {
                    detail.join("; ")
                },
            });
        }

        for spec in SingSpec::all() {
            if spec.family == Family::A && (spec.k == 1 || spec.k == 7) {
                continue;
            }
            for n in 0..=2 {
                let want: Result<DPoly, CountError> = (|| {
                    let t1 = self.n_p(spec, n + 1, 1)?.scale(-3);
                    let t2 = self.n_p(spec, n + 2, 0)?.scale(-3);
                    Ok(t1.add(&t2))
                })();
                checks.push(self.compare(
                    format!("ringp[{spec} n={n}]"),
                    self.n_p(spec, n, 2),
                    want,
                ));
            }
        }
        for route in tower_routes() {
            for n in 0..=2 {
                checks.push(self.compare(
                    format!("ringp-tower[{} n={n}]", route.label),
                    n_via_tower(route.stratum, route.extra.as_ref(), n, 2),
                    self.n_p(route.target, n, 2),
                ));
            }
        }

        VerifyReport { checks }
    }

    fn compare(
        &self,
        name: String,
        got: Result<DPoly, CountError>,
        want: Result<DPoly, CountError>,
    ) -> CheckResult {
        match (got, want) {
            (Ok(g), Ok(w)) => CheckResult {
                passed: g == w,
                detail: if g == w {
                    format!("= {g}")
                } else {
                    format!("got {g}, want {w}")
                },
                name,
            },
            (g, w) => CheckResult {
                name,
                passed: false,
                detail: format!("error: got {g:?}, want {w:?}"),
            },
        }
    }

    #[cfg(test)]
    fn memoized_keys(&self) -> Vec<MemoKey> {
        self.memo.lock().unwrap().keys().copied().collect()
    }
}

/// Check that a recursion step's coefficient pattern `α·y + β·λ + γ·a`
/// equals the first Chern class of the given bundle word.
pub fn check_c1_pattern(step: &RecursionStep, desc: &LineBundleDesc) -> CheckResult {
    let want = CohClass::monomial(1, 0, 0, DPoly::from_int(step.alpha))
        .add(&CohClass::monomial(0, 0, 1, DPoly::from_int(step.beta)))
        .add(&CohClass::monomial(0, 1, 0, step.gamma.clone()));
    let got = c1_of(desc);
    CheckResult {
        name: format!("c1[{}]", step.label),
        passed: got == want,
        detail: if got == want {
            format!("{got}")
        } else {
            format!("got {got}, want {want}")
        },
    }
}

/// Outcome of one verification check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Structured result of [`Census::verify_all`].
#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}
