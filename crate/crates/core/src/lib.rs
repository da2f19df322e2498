//! Knot Floer V-invariants of staircase complexes and obstructions to
//! singular plane curves.
//!
//! - [`semigroup`]: numerical semigroups, counting functions `R`, infimal convolution.
//! - [`staircase`]: staircase complexes, `S^n`, closed-form `V_s` formulas.
//! - [`oracle`]: bigraded complexes and exact homology over `F[U]`.
//! - [`knotified`]: knotified `T(2,2n)`, Borromean models, split towers.
//! - [`curves`]: curve configurations and the per-level obstruction checks.

pub mod curves;
pub mod error;
pub mod knotified;
pub mod oracle;
pub mod rational;
pub mod semigroup;
pub mod staircase;

pub use curves::{
    ambient_bounds, check, check_negative, check_positive, cusp_count_bound, max_a2n_bound,
    rm_bound_equivalence, spinc_levels, surgery_d_formula, CurveConfig, ObstructionReport, Verdict,
};
pub use error::{CurveError, ModelError, OracleError, SemigroupError, StaircaseError};
pub use knotified::{
    borromean_model, knotified_mirror_t2_2n, knotified_t2_2n, unknot_model, v_split_with_borromean,
    v_top_bot_composite, CompositeKnotSpec, SplitTowerModel, TowerPart,
};
pub use oracle::{BigradedComplex, Bigrading, ComplexWithActions};
pub use rational::Q;
pub use semigroup::{
    counting_function, infimal_convolution, r_closed_form_t2, torus_knot_semigroup, v_from_r,
    CountingFunction, NumericalSemigroup,
};
pub use staircase::{
    v_s_mixed_bound, v_s_positive, v_s_with_negative_basics, v_s_with_positive_basics,
    GradedGeneratorSet, Sign, Staircase,
};
