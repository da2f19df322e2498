//! d-invariants and `V_s`, `V_s^⊤`, `V_s^⊥` of bigraded complexes.

use crate::error::OracleError;
use crate::rational::Q;

use super::complex::{check_cap, BigradedComplex, SparseMap};
use super::f2::{BitVec, EchelonBasis};
use super::homology::graded_homology;
use super::ucomplex::{a_s_subcomplex, levels, restrict_map, GradedUComplex};

/// Maximal doubled grading of a non-torsion homology class.
pub fn d_invariant(a: &GradedUComplex) -> Result<i64, OracleError> {
    graded_homology(a).top_free_grading().ok_or(OracleError::NoTower)
}

/// `V_s = -d(𝒜_s)/2` in actual units.
pub fn v_s_oracle(c: &BigradedComplex, s: i64) -> Result<Q, OracleError> {
    check_cap(c.len())?;
    let d = d_invariant(&a_s_subcomplex(c, s)?)?;
    Ok(Q::new(-d, 4))
}

/// `(V_s^⊤, V_s^⊥)` computed from the free part of `H_*(𝒜_s)` and the
/// induced actions: the top tower lives in the cokernel of the summed
/// images, the bottom tower in the intersection of the kernels.
pub fn v_top_bot_oracle(
    c: &BigradedComplex,
    actions: &[SparseMap],
    s: i64,
) -> Result<(Q, Q), OracleError> {
    check_cap(c.len())?;
    c.validate_actions(actions)?;
    let lv = levels(c.gens())?;
    let a = a_s_subcomplex(c, s)?;
    let h = graded_homology(&a);
    if h.free.is_empty() {
        return Err(OracleError::NoTower);
    }
    let mats = actions
        .iter()
        .map(|m| Ok(h.induced_matrix(c.len(), &restrict_map(&lv, m, s)?)))
        .collect::<Result<Vec<_>, OracleError>>()?;
    let k = h.free.len();
    let grading: Vec<i64> = h.free.iter().map(|f| f.grading).collect();

    let mut images = EchelonBasis::new();
    for m in &mats {
        for i in 0..k {
            let mut col = BitVec::zeros(k);
            for (j, row) in m.iter().enumerate() {
                if row.get(i) {
                    col.flip(j);
                }
            }
            images.insert(&col);
        }
    }
    let top = (0..k)
        .filter(|&j| !images.contains(&BitVec::unit(k, j)))
        .map(|j| grading[j])
        .max()
        .ok_or(OracleError::NoTower)?;

    let mut candidates: Vec<i64> = grading.clone();
    candidates.sort_unstable_by(|a, b| b.cmp(a));
    candidates.dedup();
    let bottom = candidates
        .into_iter()
        .find(|&t| {
            let support: Vec<usize> = (0..k)
                .filter(|&i| grading[i] >= t && (grading[i] - t) % 4 == 0)
                .collect();
            kernel_nonzero(&mats, &support)
        })
        .ok_or(OracleError::NoTower)?;
    Ok((Q::new(-top, 4), Q::new(-bottom, 4)))
}

/// Whether some nonzero vector supported on `support` is killed by all matrices.
fn kernel_nonzero(mats: &[Vec<BitVec>], support: &[usize]) -> bool {
    let mut basis = EchelonBasis::new();
    let rank = support
        .iter()
        .filter(|&&i| {
            let mut col = BitVec::zeros(mats.iter().map(Vec::len).sum());
            let mut offset = 0;
            for m in mats {
                for (j, row) in m.iter().enumerate() {
                    if row.get(i) {
                        col.flip(offset + j);
                    }
                }
                offset += m.len();
            }
            basis.insert(&col)
        })
        .count();
    rank < support.len()
}

/// `(V^⊤, V^⊥)` at a level given in half-units `s2 = 2s`. Complexes whose
/// Alexander levels are all half-integral are shifted by `(½, -½)` first and
/// corrected by `V_s(C) = V_{s+½}(C{½,-½}) + ¼`.
pub fn v_top_bot_half_level(
    c: &BigradedComplex,
    actions: &[SparseMap],
    s2: i64,
) -> Result<(Q, Q), OracleError> {
    // Residue of 2·gr_w - 2·gr_z mod 4 that every generator must have at this level.
    let want = if s2 % 2 == 0 { 0 } else { 2 };
    if let Some(i) = c.gens().iter().position(|g| (g.w - g.z).rem_euclid(4) != want) {
        return Err(OracleError::HalfIntegerLevel(i));
    }
    if want == 0 {
        return v_top_bot_oracle(c, actions, s2 / 2);
    }
    let (t, b) = v_top_bot_oracle(&c.shift(1, -1), actions, (s2 + 1) / 2)?;
    Ok((t + Q::new(1, 4), b + Q::new(1, 4)))
}
