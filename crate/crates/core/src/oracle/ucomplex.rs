//! Alexander-level subcomplexes `𝒜_s`, viewed over `F[U]` with `U = 𝒰𝒱`.

use std::collections::BTreeMap;

use crate::error::OracleError;

use super::complex::{BigradedComplex, Bigrading, SparseMap};

/// Sparse map over `F[U]`: `(from, to) ↦ c` means `U^c · to` occurs in the image of `from`.
pub type UMap = BTreeMap<(usize, usize), u32>;

/// A free graded complex over `F[U]` with doubled `gr_w` gradings; `U` has degree -4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedUComplex {
    pub gradings: Vec<i64>,
    pub diff: UMap,
}

impl GradedUComplex {
    /// Validates homogeneity of degree -2 (doubled) and `∂² = 0`.
    pub fn new(gradings: Vec<i64>, diff: UMap) -> Result<Self, OracleError> {
        let c = GradedUComplex { gradings, diff };
        c.check_map(&c.diff)?;
        let n = c.len();
        let mut cols: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(f, t) in c.diff.keys() {
            cols[f].push(t);
        }
        let mut sq: BTreeMap<(usize, usize), bool> = BTreeMap::new();
        for &(f, t) in c.diff.keys() {
            for &u in &cols[t] {
                *sq.entry((f, u)).or_default() ^= true;
            }
        }
        if sq.values().any(|&v| v) {
            return Err(OracleError::NotAComplex);
        }
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.gradings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gradings.is_empty()
    }

    /// Checks `gr(to) - 4c = gr(from) - 2` for every entry.
    pub fn check_map(&self, map: &UMap) -> Result<(), OracleError> {
        let n = self.len();
        for (&(f, t), &c) in map {
            if f >= n || t >= n {
                return Err(OracleError::IndexOutOfRange(f.max(t)));
            }
            if self.gradings[t] - 4 * c as i64 != self.gradings[f] - 2 {
                return Err(OracleError::Inhomogeneous { from: f, to: t });
            }
        }
        Ok(())
    }
}

/// Integral Alexander levels of all generators.
pub fn levels(gens: &[Bigrading]) -> Result<Vec<i64>, OracleError> {
    gens.iter()
        .enumerate()
        .map(|(i, g)| g.level().ok_or(OracleError::HalfIntegerLevel(i)))
        .collect()
}

/// Rewrites a bidegree `(-1, -1)` map in the basis `e_x = 𝒰^{p_x} 𝒱^{q_x} x` of `𝒜_s`,
/// where `p_x = max(0, s_x - s)` and `q_x = max(0, s - s_x)`.
pub fn restrict_map(lv: &[i64], map: &SparseMap, s: i64) -> Result<UMap, OracleError> {
    let p = |x: usize| (lv[x] - s).max(0);
    let mut out = UMap::new();
    for (f, t, sum) in map.entries() {
        for (a, _) in sum.iter() {
            let c = a as i64 + p(f) - p(t);
            debug_assert!(c >= 0, "negative U-power in the level-{s} subcomplex");
            let c = u32::try_from(c).map_err(|_| OracleError::Inhomogeneous { from: f, to: t })?;
            // Distinct monomials of one homogeneous entry cannot reach the same power.
            if out.remove(&(f, t)).is_none() {
                out.insert((f, t), c);
            }
        }
    }
    Ok(out)
}

/// The subcomplex `𝒜_s` of elements with `gr_w - gr_z = 2s`, as a complex over `F[U]`.
pub fn a_s_subcomplex(c: &BigradedComplex, s: i64) -> Result<GradedUComplex, OracleError> {
    let lv = levels(c.gens())?;
    let gradings = c
        .gens()
        .iter()
        .zip(&lv)
        .map(|(g, &l)| g.w - 4 * (l - s).max(0))
        .collect();
    let diff = restrict_map(&lv, c.diff(), s)?;
    Ok(GradedUComplex { gradings, diff })
}
