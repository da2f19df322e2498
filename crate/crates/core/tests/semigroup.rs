use cusp_floer::semigroup::*;
use proptest::prelude::*;

/// Independent oracle: count `a·p + b·q < k` by enumeration.
fn brute_r(p: i64, q: i64, k: i64) -> i64 {
    let mut elems = std::collections::BTreeSet::new();
    for a in 0..=k.max(0) / p {
        for b in 0..=k.max(0) / q {
            if a * p + b * q < k {
                elems.insert(a * p + b * q);
            }
        }
    }
    elems.len() as i64
}

/// Independent oracle for `⋄`: minimize over a wide window without tail reasoning.
fn brute_convolve(r1: &CountingFunction, r2: &CountingFunction, m: i64) -> i64 {
    (-5..=m + 5).map(|i| r1.eval(i) + r2.eval(m - i)).min().unwrap()
}

#[test]
fn semigroup_8_55_elements() {
    let s = torus_knot_semigroup(8, 55).unwrap();
    assert_eq!(s.elements_below(63), vec![0, 8, 16, 24, 32, 40, 48, 55, 56]);
    assert_eq!(counting_function(&s).eval(63), 9);
    assert_eq!(brute_r(8, 55, 63), 9);
}

#[test]
fn large_semigroups() {
    let s = torus_knot_semigroup(10, 73).unwrap();
    assert_eq!(s.genus(), 324);
    assert_eq!(s.gaps().len(), 9 * 72 / 2);
    assert_eq!(counting_function(&s).eval(324), 92);
    assert_eq!(brute_r(10, 73, 324), 92);
    let s = torus_knot_semigroup(12, 91).unwrap();
    assert_eq!(counting_function(&s).eval(231), 37);
    assert_eq!(brute_r(12, 91, 231), 37);
}

#[test]
fn trefoil_values() {
    let r = counting_function(&torus_knot_semigroup(2, 3).unwrap());
    assert_eq!((0..=5).map(|k| r.eval(k)).collect::<Vec<_>>(), vec![0, 1, 1, 2, 3, 4]);
    assert_eq!(r.eval(0), 0);
    assert_eq!(v_from_r(&r, 1, 0), 1);
    let r45 = counting_function(&torus_knot_semigroup(4, 5).unwrap());
    assert_eq!(r45.eval(6), 3);
    assert_eq!(v_from_r(&r45, 6, 0), 3);
}

#[test]
fn closed_form_matches_t2_semigroups() {
    for n in 1..=20 {
        let r = counting_function(&torus_knot_semigroup(2, 2 * n + 1).unwrap());
        for k in -5..=4 * n + 5 {
            assert_eq!(r.eval(k), r_closed_form_t2(n, k), "n={n} k={k}");
        }
    }
    assert_eq!(r_closed_form_t2(1, 3), 2);
    assert_eq!(r_closed_form_t2(5, -2), 0);
    assert_eq!(r_closed_form_t2(3, 9), 6);
}

#[test]
fn convolution_examples() {
    let tref = counting_function(&torus_knot_semigroup(2, 3).unwrap());
    let two = infimal_convolution(&tref, &tref);
    for k in -3..=15 {
        assert_eq!(two.eval(k), r_closed_form_t2(2, k));
    }
    let three = infimal_convolution(&two, &tref);
    for k in -2..=12 {
        assert_eq!(three.eval(k), r_closed_form_t2(3, k));
        assert_eq!(three.eval(k), brute_convolve(&two, &tref, k));
    }
    let r = counting_function(&torus_knot_semigroup(4, 7).unwrap());
    let with_unknot = infimal_convolution(&r, &CountingFunction::unknot());
    for k in -3..=40 {
        assert_eq!(with_unknot.eval(k), r.eval(k));
    }
}

fn coprime_pair() -> impl Strategy<Value = (i64, i64)> {
    (2i64..12, 2i64..25).prop_filter("coprime", |&(p, q)| num_integer::Integer::gcd(&p, &q) == 1)
}

fn counting_fn() -> impl Strategy<Value = CountingFunction> {
    prop::collection::vec(any::<bool>(), 0..20).prop_map(|steps| {
        let mut table = vec![0i64];
        for s in &steps {
            table.push(table.last().unwrap() + *s as i64);
        }
        let t = table.len() as i64 - 1;
        let offset = t - table[t as usize];
        // Extend by one unit step so the tail starts at the stored threshold.
        table.push(table[t as usize] + 1);
        CountingFunction::new(table, offset).unwrap()
    })
}

proptest! {
    #[test]
    fn semigroup_counting_invariants((p, q) in coprime_pair()) {
        let s = torus_knot_semigroup(p, q).unwrap();
        prop_assert_eq!(s.genus(), (p - 1) * (q - 1) / 2);
        let r = s.counting_function();
        for k in -3..=2 * s.frobenius() + 5 {
            prop_assert!((0..=1).contains(&(r.eval(k + 1) - r.eval(k))));
            prop_assert_eq!(r.eval(k), brute_r(p, q, k));
            if k > s.frobenius() {
                prop_assert_eq!(r.eval(k), k - s.genus());
            }
        }
        let via_gaps = NumericalSemigroup::from_gaps(s.gaps()).unwrap();
        prop_assert_eq!(via_gaps.generators(), &[p.min(q), p.max(q)][..]);
    }

    #[test]
    fn convolution_is_commutative_and_associative(a in counting_fn(), b in counting_fn(), c in counting_fn()) {
        let ab = a.convolve(&b);
        let ba = b.convolve(&a);
        let ab_c = ab.convolve(&c);
        let a_bc = a.convolve(&b.convolve(&c));
        let horizon = a.threshold() + b.threshold() + c.threshold() + 3;
        for m in -2..=horizon {
            prop_assert_eq!(ab.eval(m), ba.eval(m));
            prop_assert_eq!(ab.eval(m), brute_convolve(&a, &b, m));
            prop_assert_eq!(ab_c.eval(m), a_bc.eval(m));
            prop_assert!((0..=1).contains(&(ab.eval(m + 1) - ab.eval(m))));
        }
        prop_assert_eq!(ab.tail_offset(), a.tail_offset() + b.tail_offset());
    }

    #[test]
    fn v_from_r_properties((p, q) in coprime_pair(), (p2, q2) in coprime_pair()) {
        let r = counting_function(&torus_knot_semigroup(p, q).unwrap())
            .convolve(&counting_function(&torus_knot_semigroup(p2, q2).unwrap()));
        let g = r.tail_offset();
        for s in -g - 3..=g + 3 {
            let v = v_from_r(&r, g, s);
            let step = v - v_from_r(&r, g, s + 1);
            prop_assert!((0..=1).contains(&step));
            if s >= g {
                prop_assert_eq!(v, 0);
            }
        }
    }
}
