//! Staircase complexes of L-space knots, the basic complexes `S^n`, `S^{-n}`,
//! and the closed-form `V_s` computations for their tensor products.
//!
//! A positive staircase has generators `x_0, y_1, x_2, …, y_{2r-1}, x_{2r}`
//! with `∂y_{2i+1} = 𝒰^{β_{2i+1}} x_{2i} + 𝒱^{β_{2i+2}} x_{2i+2}`, and `x_0`
//! at `gr_w = 0`. The negative staircase is the dual complex.

use serde::{Deserialize, Serialize};

use crate::error::StaircaseError;
use crate::oracle::{BigradedComplex, Bigrading, SparseMap};
use crate::rational::Q;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

/// A staircase complex with doubled gradings, listed as `x_0, y_1, …, x_{2r}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Staircase {
    sign: Sign,
    steps: Vec<i64>,
    gradings: Vec<Bigrading>,
}

impl Staircase {
    /// Staircase of the L-space knot whose semigroup is `s`.
    pub fn from_semigroup(s: &NumericalSemigroup) -> Result<Self, StaircaseError> {
        Self::from_alexander(&alexander_coefficients(s))
    }

    /// Staircase from Alexander coefficients `c_0, c_1, …` (index = exponent).
    /// Nonzero coefficients must alternate `+1, -1, …, +1`.
    pub fn from_alexander(coeffs: &[i64]) -> Result<Self, StaircaseError> {
        let exps: Vec<(i64, i64)> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| (e as i64, c))
            .collect();
        let alternating = exps
            .iter()
            .enumerate()
            .all(|(i, &(_, c))| c == if i % 2 == 0 { 1 } else { -1 });
        if exps.is_empty() || !alternating || exps.len().is_multiple_of(2) {
            return Err(StaircaseError::AlternationFailure);
        }
        let alphas: Vec<i64> = exps.iter().map(|&(e, _)| e - exps[0].0).collect();
        Self::from_exponents(&alphas)
    }

    /// Positive staircase from Alexander exponents `0 = α_0 < α_1 < … < α_{2r}`.
    pub fn from_exponents(alphas: &[i64]) -> Result<Self, StaircaseError> {
        if alphas.first() != Some(&0) || alphas.len().is_multiple_of(2) || alphas.windows(2).any(|w| w[0] >= w[1]) {
            return Err(StaircaseError::AlternationFailure);
        }
        let steps: Vec<i64> = alphas.windows(2).map(|w| w[1] - w[0]).collect();
        if steps.iter().ne(steps.iter().rev()) {
            return Err(StaircaseError::NotSymmetric);
        }
        let genus = alphas[alphas.len() - 1] / 2;
        let mut gradings = Vec::with_capacity(alphas.len());
        let mut r = 0; // R(α_{2i}): semigroup elements below α_{2i}
        for i in 0..=steps.len() / 2 {
            let a = alphas[2 * i];
            let x = Bigrading::new(-4 * r, 4 * (a - r) - 4 * genus);
            gradings.push(x);
            if 2 * i < steps.len() {
                let b = steps[2 * i];
                gradings.push(x.shifted(-4 * b + 2, 2));
                r += b;
            }
        }
        Ok(Staircase { sign: Sign::Positive, steps, gradings })
    }

    /// `S^n` for `n > 0`, its dual `S^{-|n|}` for `n < 0`.
    pub fn basic(n: i64) -> Result<Self, StaircaseError> {
        if n == 0 {
            return Err(StaircaseError::ZeroBasic);
        }
        let pos = Self::from_exponents(&(0..=2 * n.abs()).collect::<Vec<_>>())?;
        Ok(if n > 0 { pos } else { pos.dualize() })
    }

    /// Dual staircase: sign flipped, gradings negated, arrows reversed.
    pub fn dualize(&self) -> Self {
        Staircase {
            sign: match self.sign {
                Sign::Positive => Sign::Negative,
                Sign::Negative => Sign::Positive,
            },
            steps: self.steps.clone(),
            gradings: self.gradings.iter().map(Bigrading::negated).collect(),
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Step exponents `β_1, …, β_{2r}`.
    pub fn steps(&self) -> &[i64] {
        &self.steps
    }

    /// Doubled gradings of `x_0, y_1, …, x_{2r}` (or their duals).
    pub fn gradings(&self) -> &[Bigrading] {
        &self.gradings
    }

    /// Genus `g_3`, half the Alexander degree.
    pub fn genus(&self) -> i64 {
        self.steps.iter().sum::<i64>() / 2
    }

    /// The staircase as a bigraded complex, generators in the listed order.
    pub fn to_complex(&self) -> BigradedComplex {
        let mut diff = SparseMap::new();
        for i in 0..self.steps.len() / 2 {
            let y = 2 * i + 1;
            let (bu, bv) = (self.steps[2 * i] as u32, self.steps[2 * i + 1] as u32);
            match self.sign {
                Sign::Positive => {
                    diff.add(y, y - 1, bu, 0);
                    diff.add(y, y + 1, 0, bv);
                }
                Sign::Negative => {
                    diff.add(y - 1, y, bu, 0);
                    diff.add(y + 1, y, 0, bv);
                }
            }
        }
        BigradedComplex::new(self.gradings.clone(), diff).expect("staircases are valid complexes")
    }

    /// `(α, β) = (-gr_w/2, -gr_z/2)` of the filtration-level-0 generators.
    pub fn zero_level(&self) -> GradedGeneratorSet {
        GradedGeneratorSet {
            pairs: self.gradings.iter().step_by(2).map(|g| (-g.w / 4, -g.z / 4)).collect(),
        }
    }
}

/// Expanded `1 + (t - 1)·Σ t^{gap}`; index = exponent.
pub fn alexander_coefficients(s: &NumericalSemigroup) -> Vec<i64> {
    let top = (2 * s.genus()).max(s.frobenius() + 1).max(0) as usize;
    let mut c = vec![0i64; top + 1];
    c[0] = 1;
    for &g in s.gaps() {
        c[g as usize + 1] += 1;
        c[g as usize] -= 1;
    }
    while c.len() > 1 && c[c.len() - 1] == 0 {
        c.pop();
    }
    c
}

/// `(α, β)` pairs of the level-0 generators of a multi-staircase.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedGeneratorSet {
    pub pairs: Vec<(i64, i64)>,
}

impl GradedGeneratorSet {
    /// The rank-one complex at `(0, 0)`.
    pub fn trivial() -> Self {
        GradedGeneratorSet { pairs: vec![(0, 0)] }
    }

    /// Generator set of a tensor product: coordinatewise sums.
    pub fn product(&self, other: &GradedGeneratorSet) -> Self {
        let mut pairs: Vec<(i64, i64)> = self
            .pairs
            .iter()
            .flat_map(|&(a, b)| other.pairs.iter().map(move |&(c, d)| (a + c, b + d)))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        GradedGeneratorSet { pairs }
    }

    pub fn product_of<'a>(factors: impl IntoIterator<Item = &'a Staircase>) -> Self {
        factors
            .into_iter()
            .fold(Self::trivial(), |acc, f| acc.product(&f.zero_level()))
    }

    /// `min_x max(α(x), β(x) - s)`: `V_s` of a positive multi-staircase.
    pub fn v_s(&self, s: i64) -> i64 {
        self.pairs
            .iter()
            .map(|&(a, b)| a.max(b - s))
            .min()
            .expect("generator sets are nonempty")
    }
}

fn ensure_positive(factors: &[Staircase]) -> Result<(), StaircaseError> {
    if factors.iter().all(|f| f.sign == Sign::Positive) {
        Ok(())
    } else {
        Err(StaircaseError::SignMismatch)
    }
}

/// `V_s` of a tensor product of positive staircases; `max(0, -s)` for none.
pub fn v_s_positive(factors: &[Staircase], s: i64) -> Result<i64, StaircaseError> {
    ensure_positive(factors)?;
    Ok(GradedGeneratorSet::product_of(factors).v_s(s))
}

/// `V_s(C ⊗ S^n) = min_{0≤j≤n} V_{s+2j-n}(C) + j` for `n ≥ 0`.
pub fn v_s_with_positive_basics(c: &[Staircase], n: i64, s: i64) -> Result<i64, StaircaseError> {
    ensure_positive(c)?;
    let set = GradedGeneratorSet::product_of(c);
    Ok((0..=n.max(0)).map(|j| set.v_s(s + 2 * j - n) + j).min().expect("j = 0"))
}

/// `V_s(C ⊗ S^{-n}) = max_{0≤j≤n} V_{s-2j+n}(C) - j` for a single positive
/// staircase `C` (or none, the unknot).
pub fn v_s_with_negative_basics(c: &[Staircase], n: i64, s: i64) -> Result<i64, StaircaseError> {
    ensure_positive(c)?;
    if c.len() > 1 {
        return Err(StaircaseError::MultiStaircaseUnsupported(c.len()));
    }
    let set = GradedGeneratorSet::product_of(c);
    Ok((0..=n.max(0)).map(|j| set.v_s(s - 2 * j + n) - j).max().expect("j = 0"))
}

/// `max_{x∈N_0} min_{y∈P_0} max(α_x+α_y, β_x+β_y-s)`, a lower bound for
/// `V_s(N ⊗ P)`, exact when `P` is a single staircase.
pub fn v_s_mixed_bound(n0: &GradedGeneratorSet, p0: &GradedGeneratorSet, s: i64) -> i64 {
    n0.pairs
        .iter()
        .map(|&(ax, bx)| {
            p0.pairs
                .iter()
                .map(|&(ay, by)| (ax + ay).max(bx + by - s))
                .min()
                .expect("nonempty")
        })
        .max()
        .expect("nonempty")
}

/// `V_t(C{a,b}) = V_{t-(a-b)/2}(C) - a/2`, with the shift `(a, b)` given
/// doubled as `(a2, b2)`.
pub fn shifted_v<E>(
    v: impl Fn(i64) -> Result<Q, E>,
    a2: i64,
    b2: i64,
    t: i64,
) -> Result<Q, E>
where
    E: From<StaircaseError>,
{
    if (a2 - b2) % 4 != 0 {
        return Err(StaircaseError::HalfIntegerLevel(a2, b2).into());
    }
    Ok(v(t - (a2 - b2) / 4)? - Q::new(a2, 4))
}
