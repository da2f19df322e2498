use std::collections::BTreeMap;

use cusp_floer::knotified::*;
use cusp_floer::oracle::*;
use cusp_floer::{torus_knot_semigroup, ModelError, Q};

fn oracle(m: &ComplexWithActions, s: i64) -> (Q, Q) {
    v_top_bot_oracle(&m.complex, &m.actions, s).unwrap()
}

fn half(n: i64) -> Q {
    Q::new(n, 2)
}

#[test]
fn hopf_model_relabels() {
    let m = knotified_full_model(1);
    // y0 = h_c, y1 = h_d + h_b, y2 = h_a, x1 = h_b.
    let expected: Vec<Bigrading> = vec![
        Bigrading::new(-3, 1),
        Bigrading::new(-1, -1),
        Bigrading::new(1, -3),
        Bigrading::new(-1, -1),
    ];
    assert_eq!(m.complex.gens(), &expected[..]);
    let diff: SparseMap = [(3, 0, 0, 1), (3, 2, 1, 0)].into_iter().collect();
    assert_eq!(m.complex.diff(), &diff);
    let action: SparseMap = [(0, 1, 1, 0), (2, 1, 0, 1)].into_iter().collect();
    assert_eq!(m.actions, vec![action]);
}

/// The action before the homotopy correction, in the basis `h_a, h_b, h_c, h_d`.
fn raw_hopf() -> ComplexWithActions {
    let gens = vec![Bigrading::new(1, -3), Bigrading::new(-1, -1), Bigrading::new(-3, 1), Bigrading::new(-1, -1)];
    let (a, b, c, d) = (0, 1, 2, 3);
    let diff: SparseMap = [(b, a, 1, 0), (b, c, 0, 1), (d, a, 1, 0), (d, c, 0, 1)].into_iter().collect();
    let action: SparseMap = [(a, b, 0, 1), (a, d, 0, 1), (b, a, 1, 0), (c, b, 1, 0), (c, d, 1, 0), (d, a, 1, 0)]
        .into_iter()
        .collect();
    ComplexWithActions::new(BigradedComplex::new(gens, diff).unwrap(), vec![action]).unwrap()
}

#[test]
fn raw_and_simplified_hopf_actions_agree() {
    let raw = raw_hopf();
    let simple = knotified_full_model(1);
    for s in -3..=3 {
        assert_eq!(oracle(&raw, s), oracle(&simple, s), "s={s}");
    }
}

#[test]
fn knotified_sizes() {
    for n in 1..=5 {
        assert_eq!(knotified_full_model(n).complex.len(), 4 * n);
    }
    assert_eq!(knotified_full_model(3).complex.len(), 12);
}

#[test]
fn knotified_oracle_matches_towers() {
    for n in 1..=4usize {
        let m = knotified_t2_2n(n);
        let mirror = knotified_mirror_t2_2n(n);
        assert_eq!(mirror.full().unwrap(), &m.full().unwrap().dual());
        let bound = n as i64 + 1;
        for s in -bound..=bound {
            let closed = v_split_with_borromean(&m, 0, s).unwrap();
            assert_eq!(oracle(m.full().unwrap(), s), closed, "T(2,{}) s={s}", 2 * n);
            let closed = v_split_with_borromean(&mirror, 0, s).unwrap();
            assert_eq!(oracle(mirror.full().unwrap(), s), closed, "mirror T(2,{}) s={s}", 2 * n);
        }
    }
    // Hopf: S^1{½,½} on top, S^0{-½,-½} on the bottom.
    let m = knotified_t2_2n(1);
    assert_eq!(oracle(m.full().unwrap(), 0), (Q::new(3, 4), Q::new(1, 4)));
}

#[test]
fn closed_values_of_t2_4() {
    let m = knotified_t2_2n(2);
    let (top, bot) = v_split_with_borromean(&m, 0, 0).unwrap();
    // V_0(S^2) = 1, V_0(S^1) = 1, shifted by ∓¼.
    assert_eq!((top, bot), (Q::new(3, 4), Q::new(5, 4)));
}

#[test]
fn borromean_model_properties() {
    let b = borromean_model();
    assert!(!b.is_split());
    assert_eq!(v_split_with_borromean(&b, 1, 0), Err(ModelError::NotSplitTowers));
    let full = b.full().unwrap();
    for a in &full.actions {
        assert!(a.check_bidegree(full.complex.gens()).is_ok());
        assert!(a.after(a, 4).is_zero());
    }
    assert_eq!(oracle(full, 0), (half(1), half(1)));
    assert_eq!(oracle(full, 1), (half(-1), half(1)));
    assert_eq!(oracle(full, -1), (half(1), half(3)));
    let u = unknot_model();
    for s in -4..=4 {
        assert_eq!(oracle(full, s), v_split_with_borromean(&u, 1, s).unwrap(), "s={s}");
    }
    assert_eq!(v_split_with_borromean(&u, 1, 0).unwrap(), (half(1), half(1)));
}

#[test]
fn split_with_borromean_matches_oracle() {
    let b = borromean_full_model();
    for model in [knotified_t2_2n(1), knotified_t2_2n(2), knotified_mirror_t2_2n(2)] {
        let mut full = model.full().unwrap().clone();
        for n in 0..=2 {
            for s in -4..=4 {
                assert_eq!(oracle(&full, s), v_split_with_borromean(&model, n, s).unwrap(), "{} n={n} s={s}", model.name);
            }
            full = full.tensor(&b).unwrap();
        }
    }
}

#[test]
fn split_with_borromean_is_monotone() {
    for model in [unknot_model(), knotified_t2_2n(3), knotified_mirror_t2_2n(2)] {
        for n in 0..=3 {
            for s in -6..6 {
                let (t0, b0) = v_split_with_borromean(&model, n, s).unwrap();
                let (t1, b1) = v_split_with_borromean(&model, n, s + 1).unwrap();
                assert!(t1 <= t0 && b1 <= b0);
            }
        }
    }
}

fn spec(cusps: &[(i64, i64)], positive: &[(i64, i64)], negative: &[(i64, i64)], genus: i64) -> CompositeKnotSpec {
    CompositeKnotSpec {
        cusps: cusps.iter().map(|&(p, q)| torus_knot_semigroup(p, q).unwrap()).collect(),
        positive: positive.iter().copied().collect::<BTreeMap<_, _>>(),
        negative: negative.iter().copied().collect::<BTreeMap<_, _>>(),
        genus,
    }
}

#[test]
fn composite_examples() {
    let e = spec(&[], &[], &[], 0);
    for s in -3..=3 {
        let v = Q::int(0.max(-s));
        assert_eq!(v_top_bot_composite(&e, s).unwrap(), (v, v));
    }
    let t45 = spec(&[(4, 5)], &[(1, 1)], &[], 0);
    assert_eq!(t45.invariants().delta1, 1);
    assert_eq!(v_top_bot_composite(&t45, 0).unwrap().0, Q::new(11, 4));

    let trade_down = spec(&[(8, 55)], &[], &[(1, 1)], 0);
    let inv = trade_down.invariants();
    assert_eq!((inv.delta1, inv.delta2), (0, -1));
    assert!(v_top_bot_composite(&trade_down, -126).is_ok());

    let mixed = spec(&[(2, 3), (2, 5)], &[], &[(2, 1)], 0);
    assert_eq!(v_top_bot_composite(&mixed, 0), Err(ModelError::UnsupportedMixedCase(2)));
}

#[test]
fn composite_formula_matches_oracle() {
    let cases = [
        spec(&[(2, 3)], &[(1, 1)], &[], 0),
        spec(&[(2, 3)], &[(1, 1)], &[], 1),
        spec(&[(2, 3)], &[], &[(1, 1)], 0),
        spec(&[(2, 3)], &[], &[(1, 1)], 1),
        spec(&[(2, 3)], &[], &[(2, 1)], 0),
        spec(&[(2, 5)], &[(1, 1)], &[(1, 1)], 0),
        spec(&[(4, 5)], &[(1, 1)], &[], 0),
        spec(&[(3, 4)], &[], &[(2, 1)], 1),
        spec(&[(2, 3), (2, 3)], &[(1, 1)], &[], 0),
        spec(&[], &[(1, 2)], &[], 0),
        spec(&[], &[], &[(1, 1)], 2),
    ];
    for c in &cases {
        let full = c.full_model().unwrap();
        let split = c.split_model().unwrap();
        for s in -5..=5 {
            let formula = v_top_bot_composite(c, s).unwrap();
            assert_eq!(formula, v_split_with_borromean(&split, c.genus, s).unwrap(), "{c:?} s={s}");
            assert_eq!(formula, oracle(&full, s), "{c:?} s={s}");
        }
    }
}
