use cusp_floer::oracle::{v_s_oracle, Bigrading};
use cusp_floer::semigroup::*;
use cusp_floer::staircase::*;

fn torus(p: i64, q: i64) -> Staircase {
    Staircase::from_semigroup(&torus_knot_semigroup(p, q).unwrap()).unwrap()
}

/// Listed bigradings in actual units: y-generators moved to the corner of
/// their two neighbours, ordered from the far end of the staircase.
fn corner_listing(s: &Staircase) -> Vec<(i64, i64)> {
    let corner = match s.sign() {
        Sign::Positive => -1,
        Sign::Negative => 1,
    };
    s.gradings()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let bump = if i % 2 == 1 { corner } else { 0 };
            (g.w / 2 + bump, g.z / 2 + bump)
        })
        .rev()
        .collect()
}

fn torus_pairs(max_pq: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for p in 2..=max_pq {
        for q in p + 1..=max_pq {
            if p * q <= max_pq && num_integer::Integer::gcd(&p, &q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

#[test]
fn listed_bigradings() {
    let t45 = corner_listing(&torus(4, 5));
    assert_eq!(t45, vec![(-12, 0), (-12, -2), (-6, -2), (-6, -6), (-2, -6), (-2, -12), (0, -12)]);
    let t67 = torus(6, 7);
    let xs: Vec<(i64, i64)> = corner_listing(&t67).into_iter().step_by(2).collect();
    assert_eq!(xs, vec![(-30, 0), (-20, -2), (-12, -6), (-6, -12), (-2, -20), (0, -30)]);
    assert_eq!(&corner_listing(&t67)[..3], &[(-30, 0), (-30, -2), (-20, -2)]);
    let dual = torus(2, 3).dualize();
    let mut listed = corner_listing(&dual);
    listed.sort();
    assert_eq!(listed, vec![(0, 2), (2, 0), (2, 2)]);
}

#[test]
fn trefoil_and_basics() {
    let t = torus(2, 3);
    assert_eq!(t.gradings().len(), 3);
    assert_eq!(t, Staircase::basic(1).unwrap());
    let xs: Vec<Bigrading> = t.gradings().iter().step_by(2).copied().collect();
    assert_eq!(xs, vec![Bigrading::actual(0, -2), Bigrading::actual(-2, 0)]);
    let s2 = Staircase::basic(2).unwrap();
    assert_eq!(s2.gradings().len(), 5);
    let xs: Vec<Bigrading> = s2.gradings().iter().step_by(2).copied().collect();
    assert_eq!(xs, vec![Bigrading::actual(0, -4), Bigrading::actual(-2, -2), Bigrading::actual(-4, 0)]);
    let sm1 = Staircase::basic(-1).unwrap();
    assert_eq!(sm1.sign(), Sign::Negative);
    let xs: Vec<Bigrading> = sm1.gradings().iter().step_by(2).copied().collect();
    assert_eq!(xs, vec![Bigrading::actual(0, 2), Bigrading::actual(2, 0)]);
    for n in 1..5 {
        let s = Staircase::basic(n).unwrap();
        assert_eq!(s.dualize(), Staircase::basic(-n).unwrap());
        assert_eq!(s.dualize().dualize(), s);
        for (j, g) in s.gradings().iter().enumerate() {
            assert_eq!(*g, Bigrading::actual(-(j as i64), j as i64 - 2 * n));
        }
    }
}

#[test]
fn staircase_invariants() {
    for (p, q) in torus_pairs(60) {
        let s = torus(p, q);
        let c = s.to_complex(); // validated: bidegree (-1,-1) and ∂² = 0
        assert_eq!(c.len(), s.gradings().len());
        assert!(s.gradings().iter().any(|g| g.w == 0));
        assert!(s.gradings().iter().any(|g| g.z == 0));
        assert!(s.steps().iter().eq(s.steps().iter().rev()));
        assert_eq!(s.genus(), (p - 1) * (q - 1) / 2);
        let d = s.dualize().to_complex();
        assert_eq!(d, c.dual());
    }
}

#[test]
fn v_positive_matches_counting_function() {
    for (p, q) in torus_pairs(60) {
        let s = torus(p, q);
        let r = counting_function(&torus_knot_semigroup(p, q).unwrap());
        let g = r.tail_offset();
        for t in -g - 2..=g + 2 {
            assert_eq!(v_s_positive(std::slice::from_ref(&s), t).unwrap(), v_from_r(&r, g, t), "T({p},{q}) s={t}");
        }
    }
    assert_eq!(v_s_positive(&[torus(4, 5)], 0).unwrap(), 3);
    let tt = [torus(2, 3), torus(2, 3)];
    assert_eq!(v_s_positive(&tt, 0).unwrap(), 1);
    assert_eq!(v_s_positive(&tt, 0).unwrap(), CountingFunction::t2(2).v(0));
    assert_eq!(v_s_positive(&[], -3).unwrap(), 3);
    assert_eq!(v_s_positive(&[], 2).unwrap(), 0);
    assert_eq!(v_s_positive(&tt, 2).unwrap(), 0);
    assert_eq!(v_s_positive(&[Staircase::basic(-1).unwrap()], 0), Err(cusp_floer::StaircaseError::SignMismatch));
}

#[test]
fn basics_examples() {
    assert_eq!(v_s_with_positive_basics(&[], 1, 0).unwrap(), 1);
    let t = torus(2, 3);
    for s in -3..=3 {
        assert_eq!(
            v_s_with_positive_basics(std::slice::from_ref(&t), 0, s).unwrap(),
            v_s_positive(std::slice::from_ref(&t), s).unwrap()
        );
    }
    // V-table of T(4,5): V_{-2} = 3, V_0 = 3, V_2 = 1.
    let t45 = torus(4, 5);
    let v = |s| v_s_positive(std::slice::from_ref(&t45), s).unwrap();
    assert_eq!((v(-2), v(0), v(2)), (3, 3, 1));
    assert_eq!(v_s_with_positive_basics(std::slice::from_ref(&t45), 2, 0).unwrap(), 3);
    assert_eq!(v_s_with_negative_basics(std::slice::from_ref(&t), 1, 0).unwrap(), 0);
    assert_eq!(v_s_with_negative_basics(std::slice::from_ref(&t45), 2, 0).unwrap(), 2);
    for n in 0..4 {
        for s in 1 + n..1 + n + 3 {
            assert_eq!(v_s_with_negative_basics(std::slice::from_ref(&t), n, s).unwrap(), 0);
        }
    }
    assert_eq!(
        v_s_with_negative_basics(&[t.clone(), t.clone()], 1, 0),
        Err(cusp_floer::StaircaseError::MultiStaircaseUnsupported(2))
    );
}

#[test]
fn basics_agree_with_oracle() {
    let t45 = torus(4, 5);
    let c = t45.to_complex().tensor(&Staircase::basic(2).unwrap().to_complex()).unwrap();
    let expected = v_s_with_positive_basics(std::slice::from_ref(&t45), 2, 0).unwrap();
    assert_eq!(v_s_oracle(&c, 0).unwrap(), cusp_floer::Q::int(expected));
    let c = t45.to_complex().tensor(&Staircase::basic(-2).unwrap().to_complex()).unwrap();
    assert_eq!(v_s_oracle(&c, 0).unwrap(), cusp_floer::Q::int(2));
}

#[test]
fn mixed_bound_examples() {
    let n0 = Staircase::basic(-1).unwrap().zero_level();
    assert_eq!(n0.pairs, vec![(0, -1), (-1, 0)]);
    let p0 = GradedGeneratorSet::product_of([&torus(6, 7), &torus(4, 5)]);
    assert_eq!(v_s_mixed_bound(&n0, &p0, 0), 6);
    for s in -8..=8 {
        assert_eq!(
            v_s_mixed_bound(&GradedGeneratorSet::trivial(), &p0, s),
            p0.v_s(s),
        );
    }
    let single = torus(4, 5).zero_level();
    let c = Staircase::basic(-1).unwrap().to_complex().tensor(&torus(4, 5).to_complex()).unwrap();
    for s in -7..=7 {
        assert_eq!(cusp_floer::Q::int(v_s_mixed_bound(&n0, &single, s)), v_s_oracle(&c, s).unwrap());
    }
}
