//! Chain-level models of knotified `T(2,2n)` links, their mirrors and the
//! Borromean knot, the split-tower calculus for `V^⊤`/`V^⊥`, and the
//! four-case composite formula.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::oracle::{BigradedComplex, Bigrading, ComplexWithActions, SparseMap};
use crate::rational::Q;
use crate::semigroup::{CountingFunction, NumericalSemigroup};
use crate::staircase::{shifted_v, v_s_with_negative_basics, v_s_with_positive_basics, Staircase};
use crate::error::StaircaseError;

/// A summand `(C_1 ⊗ … ⊗ C_ν ⊗ S^basic){shift}` with positive staircases `C_i`
/// (`S^{basic}` is the dual basic staircase when `basic < 0`, rank one when 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerPart {
    pub cusps: Vec<Staircase>,
    pub basic: i64,
    /// Doubled shift `(2a, 2b)`.
    pub shift: Bigrading,
}

impl TowerPart {
    pub fn basic(basic: i64, shift: Bigrading) -> Self {
        TowerPart { cusps: Vec::new(), basic, shift }
    }

    /// `V_t` of the summand from the closed formulas and the grading-shift rule.
    pub fn v(&self, t: i64) -> Result<Q, ModelError> {
        let base = |u: i64| -> Result<Q, ModelError> {
            let v = if self.basic >= 0 {
                v_s_with_positive_basics(&self.cusps, self.basic, u)?
            } else {
                v_s_with_negative_basics(&self.cusps, -self.basic, u).map_err(|e| match e {
                    StaircaseError::MultiStaircaseUnsupported(k) => ModelError::UnsupportedMixedCase(k),
                    other => other.into(),
                })?
            };
            Ok(Q::int(v))
        };
        shifted_v(base, self.shift.w, self.shift.z, t)
    }

    /// The summand as a chain complex.
    pub fn to_complex(&self) -> Result<BigradedComplex, ModelError> {
        let mut c = BigradedComplex::rank_one(Bigrading::new(0, 0));
        for s in &self.cusps {
            c = c.tensor(&s.to_complex())?;
        }
        if self.basic != 0 {
            c = c.tensor(&Staircase::basic(self.basic)?.to_complex())?;
        }
        Ok(c.shift(self.shift.w, self.shift.z))
    }
}

/// A knot complex described by its top and bottom towers, with an optional
/// chain-level model carrying the homology actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitTowerModel {
    pub name: String,
    /// `(C^⊤, C^⊥)`, or `None` when the model does not have split towers.
    pub towers: Option<(TowerPart, TowerPart)>,
    pub full_model: Option<ComplexWithActions>,
}

impl SplitTowerModel {
    pub fn is_split(&self) -> bool {
        self.towers.is_some()
    }

    pub fn c_top(&self) -> Result<&TowerPart, ModelError> {
        self.towers.as_ref().map(|t| &t.0).ok_or(ModelError::NotSplitTowers)
    }

    pub fn c_bot(&self) -> Result<&TowerPart, ModelError> {
        self.towers.as_ref().map(|t| &t.1).ok_or(ModelError::NotSplitTowers)
    }

    pub fn full(&self) -> Result<&ComplexWithActions, ModelError> {
        self.full_model.as_ref().ok_or(ModelError::NoFullModel)
    }
}

/// The unknot: rank one at `(0, 0)`, both towers trivial.
pub fn unknot_model() -> SplitTowerModel {
    let trivial = TowerPart::basic(0, Bigrading::new(0, 0));
    SplitTowerModel {
        name: "unknot".into(),
        towers: Some((trivial.clone(), trivial)),
        full_model: Some(ComplexWithActions::plain(BigradedComplex::rank_one(Bigrading::new(0, 0)))),
    }
}

/// Chain-level model of the knotified `T(2,2n)`: generators `y_0..y_{2n}`
/// (indices `0..=2n`) then `x_1..x_{2n-1}`, all at `(½-2n+i, ½-i)`, with
/// `∂x_i = 𝒱 y_{i-1} + 𝒰 y_{i+1}` and the homotopy-corrected action.
pub fn knotified_full_model(n: usize) -> ComplexWithActions {
    assert!(n >= 1, "knotified models need n >= 1");
    let y = |i: usize| i;
    let x = |i: usize| 2 * n + i;
    let grading = |i: usize| Bigrading::new(1 - 4 * n as i64 + 2 * i as i64, 1 - 2 * i as i64);
    let mut gens: Vec<Bigrading> = (0..=2 * n).map(grading).collect();
    gens.extend((1..2 * n).map(grading));
    let mut diff = SparseMap::new();
    for i in 1..2 * n {
        diff.add(x(i), y(i - 1), 0, 1);
        diff.add(x(i), y(i + 1), 1, 0);
    }
    let mut action = SparseMap::new();
    for i in 0..n {
        action.add(y(2 * i), y(2 * i + 1), 1, 0);
    }
    for i in 0..n - 1 {
        action.add(x(2 * i + 1), x(2 * i + 2), 1, 0);
    }
    action.add(y(2 * n), y(2 * n - 1), 0, 1);
    let complex = BigradedComplex::new(gens, diff).expect("knotified model is a complex");
    ComplexWithActions::new(complex, vec![action]).expect("action is a chain map")
}

/// Knotified `T(2,2n)`: `C^⊤ = S^n{½,½}`, `C^⊥ = S^{n-1}{-½,-½}`.
pub fn knotified_t2_2n(n: usize) -> SplitTowerModel {
    SplitTowerModel {
        name: format!("knotified T(2,{})", 2 * n),
        towers: Some((
            TowerPart::basic(n as i64, Bigrading::new(1, 1)),
            TowerPart::basic(n as i64 - 1, Bigrading::new(-1, -1)),
        )),
        full_model: Some(knotified_full_model(n)),
    }
}

/// Knotified mirror of `T(2,2n)`: `C^⊤ = S^{-(n-1)}{½,½}`, `C^⊥ = S^{-n}{-½,-½}`.
pub fn knotified_mirror_t2_2n(n: usize) -> SplitTowerModel {
    SplitTowerModel {
        name: format!("knotified mirror T(2,{})", 2 * n),
        towers: Some((
            TowerPart::basic(-(n as i64 - 1), Bigrading::new(1, 1)),
            TowerPart::basic(-(n as i64), Bigrading::new(-1, -1)),
        )),
        full_model: Some(knotified_full_model(n).dual()),
    }
}

/// The Borromean knot: generators `1, x, y, xy` at `(1,-1), (0,0), (0,0), (-1,1)`,
/// zero differential, actions `A_{y*}` and `A_{x*}`. Not split.
pub fn borromean_full_model() -> ComplexWithActions {
    let gens = vec![
        Bigrading::actual(1, -1),
        Bigrading::actual(0, 0),
        Bigrading::actual(0, 0),
        Bigrading::actual(-1, 1),
    ];
    let (one, x, y, xy) = (0, 1, 2, 3);
    let a_y: SparseMap = [(one, y, 0, 1), (x, one, 1, 0), (x, xy, 0, 1), (xy, y, 1, 0)]
        .into_iter()
        .collect();
    let a_x: SparseMap = [(one, x, 0, 1), (xy, x, 1, 0), (y, one, 1, 0), (y, xy, 0, 1)]
        .into_iter()
        .collect();
    let complex = BigradedComplex::new(gens, SparseMap::new()).expect("zero differential");
    ComplexWithActions::new(complex, vec![a_y, a_x]).expect("actions have bidegree (-1,-1)")
}

pub fn borromean_model() -> SplitTowerModel {
    SplitTowerModel { name: "Borromean".into(), towers: None, full_model: Some(borromean_full_model()) }
}

/// `V^⊤`/`V^⊥` of the model connected-summed with `n` Borromean knots:
/// `-n/2 + min_j (V_{s+2j-n}(C^⊤) + j)` and `-n/2 + max_j (V_{s+2j-n}(C^⊥) + j)`.
pub fn v_split_with_borromean(model: &SplitTowerModel, n: i64, s: i64) -> Result<(Q, Q), ModelError> {
    let (top, bot) = model.towers.as_ref().ok_or(ModelError::NotSplitTowers)?;
    let mut vt = Vec::new();
    let mut vb = Vec::new();
    for j in 0..=n {
        vt.push(top.v(s + 2 * j - n)? + Q::int(j));
        vb.push(bot.v(s + 2 * j - n)? + Q::int(j));
    }
    let shift = Q::new(-n, 2);
    Ok((
        shift + vt.into_iter().min().expect("j = 0"),
        shift + vb.into_iter().max().expect("j = 0"),
    ))
}

/// Cusp semigroups, positive and negative `T(2,2n)` link counts and the
/// number of Borromean summands.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CompositeKnotSpec {
    pub cusps: Vec<NumericalSemigroup>,
    /// `n ↦ m_n`.
    pub positive: BTreeMap<i64, i64>,
    /// `n ↦ m̄_n`.
    pub negative: BTreeMap<i64, i64>,
    pub genus: i64,
}

/// Quantities derived from the link counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkInvariants {
    pub kappa_pos: i64,
    pub kappa_neg: i64,
    pub eta_pos: i64,
    pub eta_neg: i64,
    pub delta1: i64,
    pub delta2: i64,
}

impl CompositeKnotSpec {
    pub fn invariants(&self) -> LinkInvariants {
        let kappa = |m: &BTreeMap<i64, i64>| m.iter().map(|(n, c)| n * c).sum::<i64>();
        let eta = |m: &BTreeMap<i64, i64>| m.values().sum::<i64>();
        let (kp, kn) = (kappa(&self.positive), kappa(&self.negative));
        let (ep, en) = (eta(&self.positive), eta(&self.negative));
        LinkInvariants {
            kappa_pos: kp,
            kappa_neg: kn,
            eta_pos: ep,
            eta_neg: en,
            delta1: kp - (kn - en),
            delta2: (kp - ep) - kn,
        }
    }

    /// `R = R_1 ⋄ … ⋄ R_ν` of the cuspidal part.
    pub fn counting_function(&self) -> CountingFunction {
        let fns: Vec<CountingFunction> = self.cusps.iter().map(|s| s.counting_function()).collect();
        CountingFunction::convolve_all(&fns)
    }

    /// Top and bottom towers of `K # K₊ # K₋` (before the Borromean summands).
    pub fn split_model(&self) -> Result<SplitTowerModel, ModelError> {
        let inv = self.invariants();
        let cusps = self
            .cusps
            .iter()
            .map(Staircase::from_semigroup)
            .collect::<Result<Vec<_>, _>>()?;
        let eta = inv.eta_pos + inv.eta_neg;
        Ok(SplitTowerModel {
            name: "composite".into(),
            towers: Some((
                TowerPart { cusps: cusps.clone(), basic: inv.delta1, shift: Bigrading::new(eta, eta) },
                TowerPart { cusps, basic: inv.delta2, shift: Bigrading::new(-eta, -eta) },
            )),
            full_model: None,
        })
    }

    /// Chain-level model of `K̂`: cusp staircases, knotified links and
    /// Borromean summands tensored together.
    pub fn full_model(&self) -> Result<ComplexWithActions, ModelError> {
        let mut c = ComplexWithActions::plain(BigradedComplex::rank_one(Bigrading::new(0, 0)));
        for s in &self.cusps {
            c = c.tensor(&ComplexWithActions::plain(Staircase::from_semigroup(s)?.to_complex()))?;
        }
        for (&n, &count) in &self.positive {
            for _ in 0..count {
                c = c.tensor(&knotified_full_model(n as usize))?;
            }
        }
        for (&n, &count) in &self.negative {
            for _ in 0..count {
                c = c.tensor(&knotified_full_model(n as usize).dual())?;
            }
        }
        for _ in 0..self.genus {
            c = c.tensor(&borromean_full_model())?;
        }
        Ok(c)
    }
}

/// `(V_s^⊤, V_s^⊥)` of `K̂` through the four-case formula, with
/// `V_t(K) = R(g_3 + t) - t`.
pub fn v_top_bot_composite(spec: &CompositeKnotSpec, s: i64) -> Result<(Q, Q), ModelError> {
    let inv = spec.invariants();
    let r = spec.counting_function();
    let v = |t: i64| r.v(t);
    let g = spec.genus;
    let eta = inv.eta_pos + inv.eta_neg;
    let nu = spec.cusps.len();
    let (d1, d2) = (inv.delta1, inv.delta2);

    let top = if d1 >= 0 {
        Q::new(-g, 2) - Q::new(eta, 4) + Q::int((0..=d1 + g).map(|j| v(s + 2 * j - d1 - g) + j).min().expect("j = 0"))
    } else {
        if nu > 1 {
            return Err(ModelError::UnsupportedMixedCase(nu));
        }
        let inner = (0..=g)
            .map(|i| (0..=-d1).map(|j| v(s - 2 * j - 2 * i + g - d1) - i - j).max().expect("j = 0"))
            .min()
            .expect("i = 0");
        Q::new(g, 2) - Q::new(eta, 4) + Q::int(inner)
    };
    let bot = if d2 >= 0 {
        let inner = (0..=g)
            .map(|i| (0..=d2).map(|j| v(s + 2 * j + 2 * i - g - d2) + i + j).min().expect("j = 0"))
            .max()
            .expect("i = 0");
        Q::new(-g, 2) + Q::new(eta, 4) + Q::int(inner)
    } else {
        if nu > 1 {
            return Err(ModelError::UnsupportedMixedCase(nu));
        }
        Q::new(g, 2) + Q::new(eta, 4) + Q::int((0..=g - d2).map(|j| v(s - 2 * j + g - d2) - j).max().expect("j = 0"))
    };
    Ok((top, bot))
}
