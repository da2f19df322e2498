//! Curve configurations and the obstruction inequalities evaluated per
//! spin-c level `k = 1, …, d-2`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::CurveError;
use crate::knotified::{v_top_bot_composite, CompositeKnotSpec, LinkInvariants};
use crate::rational::Q;
use crate::semigroup::{r_closed_form_t2, CountingFunction, NumericalSemigroup};

/// An irreducible curve of degree `d` and genus `g` with cusps (unibranched
/// singular points given by their semigroups) and `T(2,2n)` link
/// singularities of either sign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveConfig {
    pub degree: i64,
    pub genus: i64,
    pub cusps: Vec<NumericalSemigroup>,
    pub positive: BTreeMap<i64, i64>,
    pub negative: BTreeMap<i64, i64>,
    pub allow_genus_slack: bool,
}

/// Quantities derived from a configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derived {
    #[serde(flatten)]
    pub links: LinkInvariants,
    pub rho: i64,
    pub g3: i64,
    /// `(d-1)(d-2)/2 - g_3 - (κ₊ + κ₋)`.
    pub genus_from_formula: i64,
}

impl CurveConfig {
    /// Validates ranges and, unless `allow_genus_slack`, the genus formula.
    pub fn new(
        degree: i64,
        genus: i64,
        cusps: Vec<NumericalSemigroup>,
        positive: BTreeMap<i64, i64>,
        negative: BTreeMap<i64, i64>,
        allow_genus_slack: bool,
    ) -> Result<Self, CurveError> {
        if degree < 3 {
            return Err(CurveError::DegreeTooSmall { min: 3, got: degree });
        }
        if genus < 0 {
            return Err(CurveError::NegativeGenus(genus));
        }
        for (&n, &count) in positive.iter().chain(negative.iter()) {
            if n < 1 || count < 1 {
                return Err(CurveError::BadLinkEntry { n, count });
            }
        }
        let c = CurveConfig { degree, genus, cusps, positive, negative, allow_genus_slack };
        let expected = c.derived().genus_from_formula;
        if !allow_genus_slack && expected != genus {
            return Err(CurveError::GenusFormula { expected, got: genus });
        }
        Ok(c)
    }

    pub fn spec(&self) -> CompositeKnotSpec {
        CompositeKnotSpec {
            cusps: self.cusps.clone(),
            positive: self.positive.clone(),
            negative: self.negative.clone(),
            genus: self.genus,
        }
    }

    pub fn derived(&self) -> Derived {
        let links = self.spec().invariants();
        let g3 = self.cusps.iter().map(NumericalSemigroup::genus).sum();
        let d = self.degree;
        Derived {
            links,
            rho: 2 * self.genus + links.eta_pos + links.eta_neg,
            g3,
            genus_from_formula: (d - 1) * (d - 2) / 2 - g3 - (links.kappa_pos + links.kappa_neg),
        }
    }

    pub fn genus_formula_holds(&self) -> bool {
        self.derived().genus_from_formula == self.genus
    }

    pub fn counting_function(&self) -> CountingFunction {
        self.spec().counting_function()
    }
}

/// A spin-c level `j = m·d` extending over the curve complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpincLevel {
    pub k: i64,
    pub m: Q,
    pub j: i64,
}

/// Levels `j = m·d` with `m = k - (d-3)/2`, `k = 1, …, d-2`.
pub fn spinc_levels(d: i64) -> Vec<SpincLevel> {
    (1..=d - 2)
        .map(|k| {
            let m = Q::int(k) - Q::new(d - 3, 2);
            let j = m * Q::int(d);
            debug_assert!(j.is_integer());
            SpincLevel { k, m, j: j.numer() }
        })
        .collect()
}

/// `((q - 2m)² - q)/(4q) - 2V`.
pub fn surgery_d_formula(q: i64, m: Q, v: Q) -> Q {
    let qq = Q::int(q);
    let t = qq - Q::int(2) * m;
    (t * t - qq) * Q::new(1, 4 * q) - Q::int(2) * v
}

/// `(-(ρ+e-1)/2, (ρ+e-1)/2)` with `e = 1`.
pub fn ambient_bounds(config: &CurveConfig) -> (Q, Q) {
    let rho = config.derived().rho;
    (Q::new(-rho, 2), Q::new(rho, 2))
}

/// One side of an inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub lhs: i64,
    pub rhs: i64,
    /// `"<="` or `">="`.
    pub relation: Relation,
    pub holds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
}

impl Inequality {
    fn at_most(lhs: i64, rhs: i64) -> Self {
        Inequality { lhs, rhs, relation: Relation::AtMost, holds: lhs <= rhs }
    }

    fn at_least(lhs: i64, rhs: i64) -> Self {
        Inequality { lhs, rhs, relation: Relation::AtLeast, holds: lhs >= rhs }
    }
}

/// The same row recomputed through `V^⊤`/`V^⊥` and the d-invariant bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub v_top: Q,
    pub v_bot: Q,
    pub d_top: Q,
    pub d_bot: Q,
    pub lower: Q,
    pub upper: Q,
    pub top_ok: bool,
    pub bot_ok: bool,
    /// Whether both paths agree on every inequality of the row.
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub k: i64,
    pub m: Q,
    pub level: i64,
    pub inequality1: Inequality,
    pub inequality2: Inequality,
    pub cross_check: Option<CrossCheck>,
}

impl Row {
    pub fn passes(&self) -> bool {
        self.inequality1.holds && self.inequality2.holds
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Consistent,
    Obstructed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub k: i64,
    /// 1 or 2: which inequality fails.
    pub inequality: u8,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub theorem: Theorem,
    pub rows: Vec<Row>,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    /// False when some cross-checked row disagrees between the two paths.
    pub cross_check_agrees: bool,
}

impl ObstructionReport {
    fn assemble(theorem: Theorem, rows: Vec<Row>) -> Self {
        let mut witnesses = Vec::new();
        for r in &rows {
            for (idx, ineq) in [(1u8, r.inequality1), (2, r.inequality2)] {
                if !ineq.holds {
                    witnesses.push(Witness { k: r.k, inequality: idx, lhs: ineq.lhs, rhs: ineq.rhs });
                }
            }
        }
        let verdict = if witnesses.is_empty() { Verdict::Consistent } else { Verdict::Obstructed };
        let cross_check_agrees = rows.iter().all(|r| r.cross_check.is_none_or(|c| c.agrees));
        ObstructionReport { theorem, rows, verdict, witnesses, cross_check_agrees }
    }
}

fn triangular(k: i64) -> i64 {
    (k + 1) * (k + 2) / 2
}

fn cross_check(
    config: &CurveConfig,
    level: &SpincLevel,
    ineq_top: bool,
    ineq_bot: bool,
) -> Result<Option<CrossCheck>, CurveError> {
    if !config.genus_formula_holds() {
        return Ok(None);
    }
    let (v_top, v_bot) = v_top_bot_composite(&config.spec(), level.j)?;
    let q = config.degree * config.degree;
    let jm = Q::int(level.j);
    let d_top = surgery_d_formula(q, jm, v_top);
    let d_bot = surgery_d_formula(q, jm, v_bot);
    let (lower, upper) = ambient_bounds(config);
    let top_ok = d_top <= upper;
    let bot_ok = d_bot >= lower;
    Ok(Some(CrossCheck {
        v_top,
        v_bot,
        d_top,
        d_bot,
        lower,
        upper,
        top_ok,
        bot_ok,
        agrees: top_ok == ineq_top && bot_ok == ineq_bot,
    }))
}

/// Obstruction for curves with cusps and positive `T(2,2n)` links only:
/// (1) `max_{0≤j≤g} min_{0≤i≤κ₊-η₊} R(kd+1-η₊-2i-2j)+i+j ≤ K+g` and
/// (2) `min_{0≤j≤g+κ₊} R(kd+1-2j)+j ≥ K`, with `K = (k+1)(k+2)/2`.
pub fn check_positive(config: &CurveConfig) -> Result<ObstructionReport, CurveError> {
    if !config.negative.is_empty() {
        return Err(CurveError::ConfigMismatch("negative links present; use the negative-link check".into()));
    }
    let r = config.counting_function();
    let links = config.derived().links;
    let (d, g) = (config.degree, config.genus);
    let (kp, ep) = (links.kappa_pos, links.eta_pos);
    let rows = spinc_levels(d)
        .into_iter()
        .map(|lvl| {
            let k = lvl.k;
            let big_k = triangular(k);
            let upper = (0..=g)
                .map(|j| (0..=kp - ep).map(|i| r.eval(k * d + 1 - ep - 2 * i - 2 * j) + i + j).min().expect("i = 0"))
                .max()
                .expect("j = 0");
            let lower = (0..=g + kp).map(|j| r.eval(k * d + 1 - 2 * j) + j).min().expect("j = 0");
            let inequality1 = Inequality::at_most(upper, big_k + g);
            let inequality2 = Inequality::at_least(lower, big_k);
            let cross_check = cross_check(config, &lvl, inequality2.holds, inequality1.holds)?;
            Ok(Row { k, m: lvl.m, level: lvl.j, inequality1, inequality2, cross_check })
        })
        .collect::<Result<Vec<_>, CurveError>>()?;
    Ok(ObstructionReport::assemble(Theorem::Positive, rows))
}

/// Obstruction for curves with one cusp and negative `T(2,2n)` links:
/// (1) `max_{0≤j≤g+κ₋} R(kd+1-2j)+j ≤ K+g+κ₋` and
/// (2) `min_{0≤i≤g} max_{0≤j≤κ₋-η₋} R(kd+1-2i-2j-η₋)+i+j ≥ K+κ₋-η₋`.
pub fn check_negative(config: &CurveConfig) -> Result<ObstructionReport, CurveError> {
    if !config.positive.is_empty() {
        return Err(CurveError::ConfigMismatch("positive links present; mixed configurations have no theorem".into()));
    }
    if config.cusps.len() != 1 {
        return Err(CurveError::ConfigMismatch(format!(
            "the negative-link check needs exactly one cusp, got {}",
            config.cusps.len()
        )));
    }
    let r = config.counting_function();
    let links = config.derived().links;
    let (d, g) = (config.degree, config.genus);
    let (kn, en) = (links.kappa_neg, links.eta_neg);
    let rows = spinc_levels(d)
        .into_iter()
        .map(|lvl| {
            let k = lvl.k;
            let big_k = triangular(k);
            let upper = (0..=g + kn).map(|j| r.eval(k * d + 1 - 2 * j) + j).max().expect("j = 0");
            let lower = (0..=g)
                .map(|i| (0..=kn - en).map(|j| r.eval(k * d + 1 - 2 * i - 2 * j - en) + i + j).max().expect("j = 0"))
                .min()
                .expect("i = 0");
            let inequality1 = Inequality::at_most(upper, big_k + g + kn);
            let inequality2 = Inequality::at_least(lower, big_k + kn - en);
            let cross_check = cross_check(config, &lvl, inequality2.holds, inequality1.holds)?;
            Ok(Row { k, m: lvl.m, level: lvl.j, inequality1, inequality2, cross_check })
        })
        .collect::<Result<Vec<_>, CurveError>>()?;
    Ok(ObstructionReport::assemble(Theorem::Negative, rows))
}

/// Dispatches to the positive or negative check by the links present.
pub fn check(config: &CurveConfig) -> Result<ObstructionReport, CurveError> {
    match (config.positive.is_empty(), config.negative.is_empty()) {
        (_, true) => check_positive(config),
        (true, false) => check_negative(config),
        (false, false) => Err(CurveError::ConfigMismatch(
            "mixed positive and negative links have no obstruction theorem".into(),
        )),
    }
}

/// `A(d) = (d²-6d+5)/4` for odd `d`, `(d²-6d+4)/4` for even `d`.
pub fn a_threshold(d: i64) -> i64 {
    if d % 2 != 0 {
        (d * d - 6 * d + 5) / 4
    } else {
        (d * d - 6 * d + 4) / 4
    }
}

fn half_bound(d: i64, extra: i64) -> i64 {
    (Q::new((d - 1) * (d - 2), 2) - Q::new(a_threshold(d), 2) - Q::new(extra, 2)).floor()
}

/// Largest number of ordinary cusps allowed on a degree-`d` curve with `a` nodes.
pub fn cusp_count_bound(d: i64, a: i64) -> i64 {
    half_bound(d, a)
}

/// Largest `n` allowed for an `A_{2n}` singularity on a degree-`d` curve with `h` nodes.
pub fn max_a2n_bound(d: i64, h: i64) -> i64 {
    half_bound(d, h)
}

/// `(direct, closed)`: direct is `R_m(kd+1-η) ≤ (k+1)(k+2)/2 + g` for all
/// `k = 1, …, d-2` with `m = (d-1)(d-2)/2 - η - g`; closed is `2g + η ≥ A(d)`.
pub fn rm_bound_equivalence(d: i64, eta: i64, g: i64) -> Result<(bool, bool), CurveError> {
    let m = (d - 1) * (d - 2) / 2 - eta - g;
    if m <= 0 {
        return Err(CurveError::NonpositiveM(m));
    }
    let direct = (1..=d - 2).all(|k| r_closed_form_t2(m, k * d + 1 - eta) <= triangular(k) + g);
    let closed = 2 * g + eta >= a_threshold(d);
    Ok((direct, closed))
}
