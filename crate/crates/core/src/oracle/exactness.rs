//! Exactness of filtered complexes at positive filtration levels.
//!
//! Homology is computed bigrading by bigrading over the field. A piece at
//! doubled bigrading `(p, q)` is spanned by `𝒰^a 𝒱^b x` with
//! `gr(x) - (4a, 4b) = (p, q)`. Once `p` (or `q`) is two below every generator
//! the pieces repeat with period 4, so a finite window decides vanishing.

use crate::error::OracleError;

use super::complex::BigradedComplex;
use super::f2::{rank, BitVec};

/// True iff homology vanishes at every filtration level `≥ 1`. The
/// differential must lower `level` by exactly one.
pub fn exactness_check(c: &BigradedComplex, level: &[u32]) -> Result<bool, OracleError> {
    if level.len() != c.len() {
        return Err(OracleError::InvalidLevels);
    }
    for (f, t, _) in c.diff().entries() {
        if level[f] != level[t] + 1 {
            return Err(OracleError::InvalidLevels);
        }
    }
    let gens = c.gens();
    let Some(top) = level.iter().copied().max() else {
        return Ok(true);
    };
    let (wmin, wmax) = bounds(gens.iter().map(|g| g.w));
    let (zmin, zmax) = bounds(gens.iter().map(|g| g.z));
    let cols = c.diff().columns(c.len());
    let basis = |lvl: u32, p: i64, q: i64| -> Vec<usize> {
        (0..gens.len())
            .filter(|&x| {
                let g = gens[x];
                level[x] == lvl
                    && g.w >= p
                    && g.z >= q
                    && (g.w - p) % 4 == 0
                    && (g.z - q) % 4 == 0
            })
            .collect()
    };
    let boundary_rank = |src: &[usize], dst: &[usize]| -> usize {
        let vectors: Vec<BitVec> = src
            .iter()
            .map(|&x| {
                let mut v = BitVec::zeros(dst.len());
                for &(t, m) in &cols[x] {
                    if m.len() % 2 == 1 {
                        if let Ok(pos) = dst.binary_search(&t) {
                            v.flip(pos);
                        }
                    }
                }
                v
            })
            .collect();
        rank(&vectors)
    };
    for p in wmin - 6..=wmax + 2 {
        for q in zmin - 6..=zmax + 2 {
            for lvl in 1..=top {
                let here = basis(lvl, p, q);
                if here.is_empty() {
                    continue;
                }
                let below = basis(lvl - 1, p - 2, q - 2);
                let above = basis(lvl + 1, p + 2, q + 2);
                let kernel = here.len() - boundary_rank(&here, &below);
                if kernel > boundary_rank(&above, &here) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn bounds(it: impl Iterator<Item = i64>) -> (i64, i64) {
    it.fold((i64::MAX, i64::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)))
}
