//! Exact-arithmetic toolkit for simple-current extensions of affine vertex
//! operator algebras.
//!
//! The layers, bottom up:
//!
//! * [`ratio`] — arbitrary-precision rationals and small exact linear algebra.
//! * [`rootdata`] — root systems, coweights, centers, Weyl dimensions.
//! * [`lattice`] — integral lattices, the epsilon cocycle, theta series.
//! * [`fusion`] — level-k weights, conformal weights, sl(2) fusion, the
//!   simple-current group and its action on weights.
//! * [`extension`] — the extended algebra data A_k(g) = V[L] per family:
//!   Heisenberg Gram, lattice generators, parity, generating spaces.
//! * [`modrep`] — module classification W(lambda, gamma)[L], twist orders,
//!   and extended fusion by three routes.
//! * [`qchar`] — truncated graded characters with exact rational exponents.
//! * [`jsonio`] / [`cli`] — canonical JSON output and the command-line tool.
//!
//! Everything is exact: no floating point appears anywhere in the crate.

pub mod cli;
pub mod extension;
pub mod fusion;
pub mod jsonio;
pub mod lattice;
pub mod modrep;
pub mod qchar;
pub mod ratio;
pub mod rootdata;

pub use ratio::Q;

/// Errors across the library. Everything here is a caller-input problem;
/// internal inconsistencies panic instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("node index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("lattice is not integral")]
    NotIntegral,
    #[error("lattice is not positive definite")]
    NotPositiveDefinite,
    #[error("phase exponent {exponent} is not an integer: twisted regime")]
    TwistedPhase { exponent: String },
    #[error("weight is not dominant integral at level {level}")]
    WeightNotAtLevel { level: i64 },
    #[error("fusion label {label} out of range 0..={level}")]
    LabelOutOfRange { label: i64, level: i64 },
    #[error("no nontrivial simple current for {family}{rank}")]
    NoSimpleCurrent { family: char, rank: usize },
    #[error("extension hypothesis failed: {name}")]
    HypothesisFailed { name: &'static str },
    #[error("generating spaces are not specified for {family}{rank}")]
    GeneratorsNotSpecified { family: char, rank: usize },
    #[error("classification requires a Heisenberg part")]
    NoHeisenberg,
    #[error("only type A rank 1 is supported here")]
    Sl2Only,
    #[error("missing base fusion entry for {entry}")]
    MissingFusionEntry { entry: String },
    #[error("base fusion table is not closed on untwisted classes: {detail}")]
    TableNotClosed { detail: String },
    #[error("module label is twisted (sigma order {order}); operation needs untwisted labels")]
    TwistedModule { order: u64 },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
