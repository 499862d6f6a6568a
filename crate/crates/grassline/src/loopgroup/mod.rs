//! The group `SL(r)[t⁻¹]₁`, its involution `ι`, strata `Gr₀^λ`, and coweights.

mod coweight;
mod element;
mod factor;
mod nilpotent;

pub use coweight::{coweight_leq, Coweight};
pub use element::{exp_embed, iota, pi, LoopElement};
pub use factor::{
    classify_fixed, factorize, sigma_invariant, sigma_respects_weights, stratum, Factorization, FixedClass,
};
pub use nilpotent::{jordan_type, lambda_of_nilpotent, Partition};

use crate::exactalg::AlgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LoopError {
    #[error("invalid coweight: {0}")]
    InvalidCoweight(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("not an element of SL(r)[t^-1]_1: {0}")]
    NotLoopElement(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("element is not fixed by the involution")]
    NotIotaFixed,
    #[error("limit is ill defined: entry ({row}, {col}) must vanish")]
    IllDefinedLimit { row: usize, col: usize },
    #[error("sigma does not square to lambda(-1)")]
    SigmaRelation,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Alg(AlgError),
}

impl LoopError {
    pub fn code(&self) -> &'static str {
        match self {
            LoopError::InvalidCoweight(_) => "InvalidCoweight",
            LoopError::InvalidPartition(_) => "InvalidPartition",
            LoopError::RankMismatch(..) => "RankMismatch",
            LoopError::NotLoopElement(_) => "NotLoopElement",
            LoopError::NotNilpotent => "NotNilpotent",
            LoopError::NotIotaFixed => "NotIotaFixed",
            LoopError::IllDefinedLimit { .. } => "IllDefinedLimit",
            LoopError::SigmaRelation => "SigmaRelationViolated",
            LoopError::InternalInconsistency(_) => "InternalInconsistency",
            LoopError::Alg(e) => e.code(),
        }
    }
}
