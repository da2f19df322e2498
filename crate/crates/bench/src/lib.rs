//! Inputs shared by the benchmarks.

use cusp_floer::{torus_knot_semigroup, BigradedComplex, CountingFunction, CurveConfig, Staircase};

fn torus(p: i64, q: i64) -> Staircase {
    Staircase::from_semigroup(&torus_knot_semigroup(p, q).expect("coprime")).expect("positive staircase")
}

/// The 231-generator product of the dual trefoil with `T(6,7)` and `T(4,5)`.
pub fn triple_product() -> BigradedComplex {
    Staircase::basic(-1)
        .expect("nonzero")
        .to_complex()
        .tensor(&torus(6, 7).to_complex())
        .and_then(|c| c.tensor(&torus(4, 5).to_complex()))
        .expect("below the generator cap")
}

/// Counting functions of a handful of torus-knot cusps.
pub fn cusp_functions() -> Vec<CountingFunction> {
    [(8, 55), (10, 73), (12, 91), (3, 7), (5, 9)]
        .iter()
        .map(|&(p, q)| torus_knot_semigroup(p, q).expect("coprime").counting_function())
        .collect()
}

/// Degree 27 with a `(10,73)` cusp and one node.
pub fn fg27() -> CurveConfig {
    CurveConfig::new(
        27,
        0,
        vec![torus_knot_semigroup(10, 73).expect("coprime")],
        [(1, 1)].into_iter().collect(),
        Default::default(),
        false,
    )
    .expect("genus formula holds")
}
