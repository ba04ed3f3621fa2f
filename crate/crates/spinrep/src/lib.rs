//! Exact classification of the irreducible representations of Spin(n,1).
//!
//! The library computes, in exact arithmetic, the structure theory of the
//! elementary representations π(σ,ν) of G = Spin(n,1) for n ≥ 4: their
//! infinitesimal characters, the reducibility criterion, the K-spectra of the
//! irreducible subquotients at reducible parameters, corners and fundamental
//! corners of those spectra (even n), minimal K-types in the sense of the
//! lowest Vogan norm, and the resulting parametrizations of the non-elementary
//! part of the unitary dual by subsets of the K-dual.
//!
//! Every scalar lives in (1/2)Z or in Q; there is no floating point anywhere.
//! The `verify` module re-derives the classification statements by
//! brute-force enumeration over finite windows, and the CLI (`spinrep`)
//! exposes both the individual computations and those verification sweeps as
//! deterministic JSON.
//!
//! Conventions used throughout:
//! - n = 2k (even) or n = 2k+1 (odd), n ≥ 4; K = Spin(n), M = Spin(n−1).
//! - K-types and M-types are given by dominant highest weights with integral
//!   or strictly half-integral coordinates (never mixed).
//! - The continuous parameter ν of π(σ,ν) is a rational number, real or
//!   purely imaginary; at every reducible point ν is real and half-integral.

#![forbid(unsafe_code)]

pub mod classify;
pub mod corners;
pub mod duals;
pub mod elementary;
pub mod halfint;
pub mod output;
pub mod subquotient;
pub mod verify;
pub mod weyl;

pub use classify::{
    brute_count_preimages, count_preimages, elementary_equivalent, enumerate_ghat0,
    enumerate_lambda, ghat_family, in_ghat0, inverse_q_even, inverse_qv_odd, is_unitary_class,
    lambda_class, pairs_for_lambda, q_of_unitary_even, qv_class, unitary_map_odd, GhatClass,
    GhatIndex, LambdaClass, LambdaPair, PreimageCount, PreimageReport,
};
pub use corners::{
    corner_report, fundamental_corners, is_fundamental_corner, minimal_k_types, rho_shift,
    vogan_norm_sq, ChamberD, CornerReport,
};
pub use duals::{branch_restrict, elementary_spectrum_contains, interlaces, KType, MType};
pub use elementary::{nu_sigma, ElementaryRep, InfCharParam, Nu, Rat};
pub use halfint::{HalfInt, ParityClass, Weight};
pub use subquotient::{decompose, CaseTag, CoordRange, SpectrumConstraint, SubqLabel, Subquotient};
pub use weyl::{dominant_rep, enumerate_group, same_orbit, GroupElement, RootFamily};

/// Errors for malformed inputs and out-of-domain requests.
///
/// Every variant carries a stable machine-readable code (see [`Error::code`])
/// that the CLI surfaces in its JSON error envelope.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed scalar {0:?}: expected `[-]digits[/2]`")]
    BadScalar(String),
    #[error("malformed weight {input:?}: {reason}")]
    BadWeight { input: String, reason: String },
    #[error("malformed parameter {0:?}: expected `[-]digits[/digits][i]`")]
    BadNu(String),
    #[error("unsupported n = {0}: this classification needs n >= 4")]
    UnsupportedN(usize),
    #[error("weight has {got} coordinates, expected {expected} for n = {n}")]
    WrongLength { n: usize, expected: usize, got: usize },
    #[error("weight mixes integral and half-integral coordinates")]
    MixedParity,
    #[error("{0} is not a dominant K highest weight")]
    NotKType(String),
    #[error("{0} is not a dominant M highest weight")]
    NotMType(String),
    #[error("operands belong to different groups (n mismatch)")]
    RankMismatch,
    #[error("weight has {got} coordinates but the Weyl family has rank {rank}")]
    RankLength { rank: usize, got: usize },
    #[error("group enumeration is capped at rank 4, got rank {0}")]
    RankTooLarge(usize),
    #[error("operation needs a real parameter, got a purely imaginary one")]
    ImaginaryNu,
    #[error("parameter {0} is not half-integral, so no weight-lattice data exists")]
    NuNotHalfIntegral(String),
    #[error("representation is irreducible; there is nothing to decompose")]
    Irreducible,
    #[error("representation is reducible; unitarity applies to irreducible ones")]
    Reducible,
    #[error("corners are defined only for even n, got n = {0}")]
    OddNoCorners(usize),
    #[error("class is not unitary")]
    NotUnitary,
    #[error("class coincides with an irreducible elementary representation and lies outside the non-elementary dual")]
    ElementaryClass,
    #[error("{0} does not lie in the reducibility parameter set Lambda")]
    NotInLambda(String),
    #[error("invalid family index {0:?}")]
    BadIndex(String),
    #[error("out of domain: {0}")]
    OutOfDomain(String),
}

impl Error {
    /// Stable snake_case code for machine consumption.
    pub fn code(&self) -> &'static str {
        match self {
            Error::BadScalar(_) => "bad_scalar",
            Error::BadWeight { .. } => "bad_weight",
            Error::BadNu(_) => "bad_nu",
            Error::UnsupportedN(_) => "unsupported_n",
            Error::WrongLength { .. } => "wrong_length",
            Error::MixedParity => "mixed_parity",
            Error::NotKType(_) => "not_k_type",
            Error::NotMType(_) => "not_m_type",
            Error::RankMismatch => "rank_mismatch",
            Error::RankLength { .. } => "rank_length",
            Error::RankTooLarge(_) => "rank_too_large",
            Error::ImaginaryNu => "imaginary_nu",
            Error::NuNotHalfIntegral(_) => "nu_not_half_integral",
            Error::Irreducible => "irreducible",
            Error::Reducible => "reducible",
            Error::OddNoCorners(_) => "odd_no_corners",
            Error::NotUnitary => "not_unitary",
            Error::ElementaryClass => "elementary_class",
            Error::NotInLambda(_) => "not_in_lambda",
            Error::BadIndex(_) => "bad_index",
            Error::OutOfDomain(_) => "out_of_domain",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Validates n and returns k, where n = 2k or n = 2k+1.
pub(crate) fn half_rank(n: usize) -> Result<usize> {
    if n < 4 {
        return Err(Error::UnsupportedN(n));
    }
    Ok(n / 2)
}
