//! Shared error type for every module in the crate.

use thiserror::Error;

/// Errors produced by construction, verification, and counting routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A constraint row was identically zero (vacuous, almost always a typo in the input).
    #[error("constraint row {index} is all zeros")]
    ZeroRow { index: usize },

    /// Two operands live in different ambient dimensions.
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A modulus that was required to be prime is not.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Rank/dimension parameter outside the valid range for a builder.
    #[error("rank {got} out of range for {what} (need {need})")]
    BadRank {
        what: &'static str,
        got: usize,
        need: &'static str,
    },

    /// Parameter combination outside the valid range.
    #[error("bad parameters: {0}")]
    BadParams(String),

    /// A custom constraint system canonicalized to the full ambient space.
    #[error("subspace {index} is the full ambient space, not a proper subspace")]
    NotProper { index: usize },

    /// The arrangement is not embedded in the required Weyl arrangement.
    #[error("arrangement is not embedded in {host}")]
    NotEmbedded { host: &'static str },

    /// Some intersection-lattice element drops rank modulo p, so the
    /// finite-field count is not guaranteed to equal the characteristic
    /// polynomial at p.
    #[error("prime {p} too small: lattice element of codimension {expected_rank} has rank {got_rank} mod {p}")]
    PrimeTooSmall {
        p: u64,
        expected_rank: usize,
        got_rank: usize,
    },

    /// Enumeration would visit more candidate points than the guardrail allows.
    #[error("enumeration of {points} points exceeds the limit of {limit}")]
    ScaleError { points: u128, limit: u128 },

    /// Alcove enumeration is only supported at desk-scale ranks.
    #[error("rank {rank} too large for alcove enumeration (max {max})")]
    RankTooLarge { rank: usize, max: usize },

    /// Unknown or invalid root-system type/rank combination.
    #[error("invalid root system: {0}")]
    BadType(String),

    /// A surplus interpolation value disagreed with the interpolant
    /// (wrong quasi-period or degree).
    #[error("surplus value at argument {argument} disagrees with interpolant: expected {expected}, series gives {found}")]
    SurplusMismatch {
        argument: i64,
        expected: String,
        found: String,
    },

    /// Not enough values in one residue class to interpolate.
    #[error("residue class {residue} (mod {period}) has {got} values, need {need}")]
    InsufficientValues {
        residue: usize,
        period: usize,
        got: usize,
        need: usize,
    },

    /// An identity that a theorem guarantees failed on a concrete instance.
    #[error("verification failed at {instance}: lhs {lhs} != rhs {rhs}")]
    VerificationFailure {
        instance: String,
        lhs: String,
        rhs: String,
    },

    /// A basis expansion produced a negative coefficient where the theory
    /// guarantees nonnegativity; treated as an implementation-bug alarm.
    #[error("negative coefficient {value} at basis index {index}")]
    NegativeCoefficient { index: usize, value: String },

    /// Malformed JSON arrangement description.
    #[error("invalid arrangement spec: {0}")]
    BadSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
