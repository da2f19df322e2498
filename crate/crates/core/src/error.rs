//! Error types shared by every module of the library.

use thiserror::Error;

/// Errors raised by semigroup and counting-function constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generators must be at least {min}, got {got}")]
    OutOfRange { min: i64, got: i64 },
    #[error("generators {0:?} are not coprime")]
    NotCoprime(Vec<i64>),
    #[error("no generators supplied")]
    Empty,
    #[error("gap list is not the complement of an additively closed set: {a} + {b} = {sum} is a gap")]
    NotClosed { a: i64, b: i64, sum: i64 },
    #[error("gap list must be strictly increasing positive integers")]
    MalformedGaps,
    #[error("counting function violates its invariants: {0}")]
    InvalidCountingFunction(String),
}

/// Errors raised by staircase construction and the closed V-formulas.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StaircaseError {
    #[error("Alexander coefficients are not alternating +1/-1 (not an L-space knot)")]
    AlternationFailure,
    #[error("Alexander polynomial is not symmetric of degree twice the genus")]
    NotSymmetric,
    #[error("basic staircase S^0 is the rank-one complex; construct it explicitly")]
    ZeroBasic,
    #[error("expected only positive staircases")]
    SignMismatch,
    #[error("formula needs a single positive staircase, got {0} factors")]
    MultiStaircaseUnsupported(usize),
    #[error("shift by ({0}/2, {1}/2) moves integral levels to half-integers")]
    HalfIntegerLevel(i64, i64),
}

/// Errors raised by the homology oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("complex has {got} generators, above the cap of {cap}")]
    CapExceeded { got: usize, cap: usize },
    #[error("generator {0} has a half-integer Alexander level")]
    HalfIntegerLevel(usize),
    #[error("homology has no free summand")]
    NoTower,
    #[error("action {0} does not commute with the differential")]
    ActionNotChainMap(usize),
    #[error("differential does not square to zero")]
    NotAComplex,
    #[error("entry {from} -> {to} is not homogeneous of bidegree (-1,-1)")]
    Inhomogeneous { from: usize, to: usize },
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("level labeling is not lowered by exactly one by the differential")]
    InvalidLevels,
    #[error("malformed complex description: {0}")]
    Malformed(String),
}

/// Errors raised by the knot models and the split-tower calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("model does not have split towers")]
    NotSplitTowers,
    #[error("negative-side formula needs at most one cusp semigroup, got {0}; use the oracle at small scale")]
    UnsupportedMixedCase(usize),
    #[error("model has no chain-level complex attached")]
    NoFullModel,
    #[error(transparent)]
    Staircase(#[from] StaircaseError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Errors raised by curve configurations and obstruction checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("degree must be at least {min}, got {got}")]
    DegreeTooSmall { min: i64, got: i64 },
    #[error("genus must be nonnegative, got {0}")]
    NegativeGenus(i64),
    #[error("link multiplicities must be positive with n >= 1 (got n={n}, count={count})")]
    BadLinkEntry { n: i64, count: i64 },
    #[error("genus formula fails: (d-1)(d-2)/2 - g3 - (kappa+ + kappa-) = {expected}, but genus is {got}")]
    GenusFormula { expected: i64, got: i64 },
    #[error("configuration does not fit this theorem: {0}")]
    ConfigMismatch(String),
    #[error("m = (d-1)(d-2)/2 - eta - g must be positive, got {0}")]
    NonpositiveM(i64),
    #[error(transparent)]
    Model(#[from] ModelError),
}
