//! Brute-force verification engine: free bigraded complexes, their
//! Alexander-level subcomplexes, exact homology over `F[U]`, and the
//! correction terms `V_s`, `V_s^⊤`, `V_s^⊥`.

pub mod complex;
pub mod exactness;
pub mod f2;
pub mod homology;
pub mod json;
pub mod ucomplex;
pub mod vtop;

pub use complex::{
    generator_cap, BigradedComplex, Bigrading, ComplexWithActions, MonomialSum, SparseMap,
    DEFAULT_GENERATOR_CAP, GENERATOR_CAP_VAR,
};
pub use exactness::exactness_check;
pub use homology::{graded_homology, FreeGenerator, GradedHomology, TorsionSummand};
pub use json::ComplexFile;
pub use ucomplex::{a_s_subcomplex, GradedUComplex, UMap};
pub use vtop::{d_invariant, v_s_oracle, v_top_bot_half_level, v_top_bot_oracle};
