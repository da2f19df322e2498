//! Free finitely generated bigraded complexes over `F[𝒰, 𝒱]`.
//!
//! Gradings are stored doubled: a generator at `(gr_w, gr_z)` is recorded as
//! `(2·gr_w, 2·gr_z)`, so the half-integer shifts of link models stay integral.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::OracleError;

/// Environment variable overriding the generator cap.
pub const GENERATOR_CAP_VAR: &str = "CUSP_FLOER_GENERATOR_CAP";

/// Default maximum number of generators of any complex built by the oracle.
pub const DEFAULT_GENERATOR_CAP: usize = 5000;

/// Current generator cap: the value of [`GENERATOR_CAP_VAR`] if it parses, else the default.
pub fn generator_cap() -> usize {
    std::env::var(GENERATOR_CAP_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_GENERATOR_CAP)
}

pub(crate) fn check_cap(n: usize) -> Result<(), OracleError> {
    let cap = generator_cap();
    if n > cap {
        Err(OracleError::CapExceeded { got: n, cap })
    } else {
        Ok(())
    }
}

/// A doubled bigrading `(2·gr_w, 2·gr_z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bigrading {
    pub w: i64,
    pub z: i64,
}

impl Bigrading {
    pub const fn new(w: i64, z: i64) -> Self {
        Bigrading { w, z }
    }

    /// Bigrading given in actual (undoubled) units.
    pub const fn actual(w: i64, z: i64) -> Self {
        Bigrading { w: 2 * w, z: 2 * z }
    }

    /// Alexander level `(gr_w - gr_z)/2`, if integral.
    pub fn level(&self) -> Option<i64> {
        let d = self.w - self.z;
        (d % 4 == 0).then_some(d / 4)
    }

    pub fn shifted(&self, dw: i64, dz: i64) -> Self {
        Bigrading { w: self.w + dw, z: self.z + dz }
    }

    pub fn negated(&self) -> Self {
        Bigrading { w: -self.w, z: -self.z }
    }
}

impl std::ops::Add for Bigrading {
    type Output = Bigrading;
    fn add(self, o: Bigrading) -> Bigrading {
        Bigrading { w: self.w + o.w, z: self.z + o.z }
    }
}

/// A sum of monomials `𝒰^a 𝒱^b` with coefficients in the two-element field.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MonomialSum(BTreeSet<(u32, u32)>);

impl MonomialSum {
    pub fn monomial(a: u32, b: u32) -> Self {
        MonomialSum([(a, b)].into_iter().collect())
    }

    /// Adds a monomial; adding it twice cancels.
    pub fn toggle(&mut self, a: u32, b: u32) {
        if !self.0.remove(&(a, b)) {
            self.0.insert((a, b));
        }
    }

    pub fn add_assign(&mut self, other: &MonomialSum) {
        for &(a, b) in &other.0 {
            self.toggle(a, b);
        }
    }

    pub fn mul(&self, other: &MonomialSum) -> MonomialSum {
        let mut out = MonomialSum::default();
        for &(a, b) in &self.0 {
            for &(c, d) in &other.0 {
                out.toggle(a + c, b + d);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(u32, u32)> for MonomialSum {
    fn from_iter<I: IntoIterator<Item = (u32, u32)>>(iter: I) -> Self {
        let mut m = MonomialSum::default();
        for (a, b) in iter {
            m.toggle(a, b);
        }
        m
    }
}

/// A sparse module map, keyed by `(from, to)`: the entry is the coefficient
/// of generator `to` in the image of generator `from`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseMap(BTreeMap<(usize, usize), MonomialSum>);

impl SparseMap {
    pub fn new() -> Self {
        SparseMap::default()
    }

    /// Adds `𝒰^a 𝒱^b · to` to the image of `from`.
    pub fn add(&mut self, from: usize, to: usize, a: u32, b: u32) {
        let e = self.0.entry((from, to)).or_default();
        e.toggle(a, b);
        if e.is_zero() {
            self.0.remove(&(from, to));
        }
    }

    pub fn add_sum(&mut self, from: usize, to: usize, sum: &MonomialSum) {
        for (a, b) in sum.iter() {
            self.add(from, to, a, b);
        }
    }

    pub fn get(&self, from: usize, to: usize) -> Option<&MonomialSum> {
        self.0.get(&(from, to))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &MonomialSum)> + '_ {
        self.0.iter().map(|(&(f, t), m)| (f, t, m))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entries grouped by source generator.
    pub fn columns(&self, n: usize) -> Vec<Vec<(usize, &MonomialSum)>> {
        let mut cols = vec![Vec::new(); n];
        for (f, t, m) in self.entries() {
            cols[f].push((t, m));
        }
        cols
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &SparseMap, n: usize) -> SparseMap {
        let cols = self.columns(n);
        let mut out = SparseMap::new();
        for (f, mid, m1) in first.entries() {
            for &(t, m2) in &cols[mid] {
                out.add_sum(f, t, &m1.mul(m2));
            }
        }
        out
    }

    pub fn sum(&self, other: &SparseMap) -> SparseMap {
        let mut out = self.clone();
        for (f, t, m) in other.entries() {
            out.add_sum(f, t, m);
        }
        out
    }

    pub fn transpose(&self) -> SparseMap {
        let mut out = SparseMap::new();
        for (f, t, m) in self.entries() {
            out.add_sum(t, f, m);
        }
        out
    }

    /// Reindexes sources and targets.
    pub fn reindex(&self, idx: impl Fn(usize) -> usize) -> SparseMap {
        let mut out = SparseMap::new();
        for (f, t, m) in self.entries() {
            out.add_sum(idx(f), idx(t), m);
        }
        out
    }

    fn check_bounds(&self, n: usize) -> Result<(), OracleError> {
        match self.entries().find(|&(f, t, _)| f >= n || t >= n) {
            Some((f, t, _)) => Err(OracleError::IndexOutOfRange(f.max(t))),
            None => Ok(()),
        }
    }

    /// Checks that every monomial lowers the bigrading by exactly `(1, 1)`.
    pub fn check_bidegree(&self, gens: &[Bigrading]) -> Result<(), OracleError> {
        self.check_bounds(gens.len())?;
        for (f, t, m) in self.entries() {
            for (a, b) in m.iter() {
                let ok = gens[t].w - 4 * a as i64 == gens[f].w - 2
                    && gens[t].z - 4 * b as i64 == gens[f].z - 2;
                if !ok {
                    return Err(OracleError::Inhomogeneous { from: f, to: t });
                }
            }
        }
        Ok(())
    }
}

impl FromIterator<(usize, usize, u32, u32)> for SparseMap {
    fn from_iter<I: IntoIterator<Item = (usize, usize, u32, u32)>>(iter: I) -> Self {
        let mut m = SparseMap::new();
        for (f, t, a, b) in iter {
            m.add(f, t, a, b);
        }
        m
    }
}

/// A free bigraded complex with differential of bidegree `(-1, -1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BigradedComplex {
    gens: Vec<Bigrading>,
    diff: SparseMap,
}

impl BigradedComplex {
    /// Validates bidegree and `∂² = 0`.
    pub fn new(gens: Vec<Bigrading>, diff: SparseMap) -> Result<Self, OracleError> {
        diff.check_bidegree(&gens)?;
        let c = BigradedComplex { gens, diff };
        if !c.diff.after(&c.diff, c.len()).is_zero() {
            return Err(OracleError::NotAComplex);
        }
        Ok(c)
    }

    /// The rank-one complex with zero differential.
    pub fn rank_one(at: Bigrading) -> Self {
        BigradedComplex { gens: vec![at], diff: SparseMap::new() }
    }

    pub fn gens(&self) -> &[Bigrading] {
        &self.gens
    }

    pub fn diff(&self) -> &SparseMap {
        &self.diff
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Negates gradings and transposes the differential.
    pub fn dual(&self) -> Self {
        BigradedComplex {
            gens: self.gens.iter().map(Bigrading::negated).collect(),
            diff: self.diff.transpose(),
        }
    }

    /// Adds `(dw, dz)` (doubled units) to every grading.
    pub fn shift(&self, dw: i64, dz: i64) -> Self {
        BigradedComplex {
            gens: self.gens.iter().map(|g| g.shifted(dw, dz)).collect(),
            diff: self.diff.clone(),
        }
    }

    /// `C ⊗ D` with generator `(i, j)` at index `i·|D| + j`.
    pub fn tensor(&self, other: &BigradedComplex) -> Result<Self, OracleError> {
        let (n, m) = (self.len(), other.len());
        check_cap(n * m)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|&a| other.gens.iter().map(move |&b| a + b))
            .collect();
        let diff = tensor_map(&self.diff, n, m, Side::Left).sum(&tensor_map(&other.diff, n, m, Side::Right));
        Ok(BigradedComplex { gens, diff })
    }

    /// Whether `[∂, A] = ∂A + A∂` vanishes.
    pub fn commutes_with(&self, a: &SparseMap) -> bool {
        let n = self.len();
        self.diff.after(a, n).sum(&a.after(&self.diff, n)).is_zero()
    }

    /// Checks bidegree `(-1, -1)` and the chain-map condition for each action.
    pub fn validate_actions(&self, actions: &[SparseMap]) -> Result<(), OracleError> {
        for (i, a) in actions.iter().enumerate() {
            a.check_bidegree(&self.gens)?;
            if !self.commutes_with(a) {
                return Err(OracleError::ActionNotChainMap(i));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

/// Extends a map on one tensor factor by the identity on the other.
fn tensor_map(map: &SparseMap, n: usize, m: usize, side: Side) -> SparseMap {
    let mut out = SparseMap::new();
    for (f, t, sum) in map.entries() {
        match side {
            Side::Left => {
                for j in 0..m {
                    out.add_sum(f * m + j, t * m + j, sum);
                }
            }
            Side::Right => {
                for i in 0..n {
                    out.add_sum(i * m + f, i * m + t, sum);
                }
            }
        }
    }
    out
}

/// A complex together with a list of homological actions on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComplexWithActions {
    pub complex: BigradedComplex,
    pub actions: Vec<SparseMap>,
}

impl ComplexWithActions {
    pub fn new(complex: BigradedComplex, actions: Vec<SparseMap>) -> Result<Self, OracleError> {
        complex.validate_actions(&actions)?;
        Ok(ComplexWithActions { complex, actions })
    }

    pub fn plain(complex: BigradedComplex) -> Self {
        ComplexWithActions { complex, actions: Vec::new() }
    }

    /// Tensor product; actions become `A ⊗ 1` and `1 ⊗ B`.
    pub fn tensor(&self, other: &ComplexWithActions) -> Result<Self, OracleError> {
        let (n, m) = (self.complex.len(), other.complex.len());
        let complex = self.complex.tensor(&other.complex)?;
        let actions = self
            .actions
            .iter()
            .map(|a| tensor_map(a, n, m, Side::Left))
            .chain(other.actions.iter().map(|b| tensor_map(b, n, m, Side::Right)))
            .collect();
        Ok(ComplexWithActions { complex, actions })
    }

    /// Dual complex with transposed actions.
    pub fn dual(&self) -> Self {
        ComplexWithActions {
            complex: self.complex.dual(),
            actions: self.actions.iter().map(SparseMap::transpose).collect(),
        }
    }

    pub fn shift(&self, dw: i64, dz: i64) -> Self {
        ComplexWithActions { complex: self.complex.shift(dw, dz), actions: self.actions.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> BigradedComplex {
        let gens = vec![Bigrading::new(0, -4), Bigrading::new(-2, -2), Bigrading::new(-4, 0)];
        let diff = [(1, 0, 1, 0), (1, 2, 0, 1)].into_iter().collect();
        BigradedComplex::new(gens, diff).unwrap()
    }

    #[test]
    fn validation_catches_errors() {
        let gens = vec![Bigrading::new(0, -4), Bigrading::new(-2, -2)];
        let bad: SparseMap = [(1, 0, 0, 0)].into_iter().collect();
        assert!(matches!(
            BigradedComplex::new(gens, bad),
            Err(OracleError::Inhomogeneous { .. })
        ));
        let t = trefoil();
        assert_eq!(t.len(), 3);
        assert_eq!(t.gens()[1].level(), Some(0));
    }

    #[test]
    fn tensor_unit_and_dual() {
        let t = trefoil();
        let unit = BigradedComplex::rank_one(Bigrading::new(0, 0));
        assert_eq!(t.tensor(&unit).unwrap(), t);
        assert_eq!(t.dual().dual(), t);
        let tt = t.tensor(&t).unwrap();
        assert_eq!(tt.len(), 9);
        assert!(BigradedComplex::new(tt.gens().to_vec(), tt.diff().clone()).is_ok());
    }

    #[test]
    fn monomial_sums_cancel() {
        let mut m = MonomialSum::monomial(1, 0);
        m.toggle(1, 0);
        assert!(m.is_zero());
        let p: MonomialSum = [(1, 0), (0, 1)].into_iter().collect();
        let sq = p.mul(&p);
        assert_eq!(sq.iter().collect::<Vec<_>>(), vec![(0, 2), (2, 0)]);
    }
}
