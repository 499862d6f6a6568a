//! Transition-function presentations of equivariant framed bundles on `P¹×P¹`
//! (quadruples) and `P²` (triples), their symmetries, and extraction of the
//! loop-group element they encode.

mod cones;
mod gauge;
mod quad;
mod split;
mod triple;

pub use gauge::{GaugeElement, TripleGauge};
pub use quad::{
    act_g, act_gauge, act_swap, act_torus, act_weyl, build_quad, extract_quad, verify_quad, TransitionQuad,
};
pub use split::{birkhoff_split_u, SplitOptions};
pub use triple::{
    act_g_triple, act_gauge_triple, act_torus_triple, build_triple, extract_triple, verify_triple, TransitionTriple,
};

use crate::exactalg::AlgError;
use crate::loopgroup::LoopError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransitionError {
    #[error("gauge element violates {0}")]
    ConeViolation(String),
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("constant matrix must have determinant 1 and matching size")]
    NotSpecialLinear,
    #[error("split did not terminate within {bound} orders")]
    NonTerminatingFactorization { bound: usize },
    #[error("monomial t^{t_exp} u^{u_exp} is not a diagonal substitution")]
    NotDiagonalSubstitution { t_exp: i64, u_exp: i64 },
    #[error("g2_1 is not a function of s1*s2 (monomial s1^{s1_exp} s2^{s2_exp})")]
    NotNormalizedRepresentative { s1_exp: i64, s2_exp: i64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Alg(AlgError),
    #[error(transparent)]
    Loop(LoopError),
}

impl TransitionError {
    pub fn code(&self) -> &'static str {
        match self {
            TransitionError::ConeViolation(_) => "ConeViolation",
            TransitionError::ZeroScalar => "ZeroScalar",
            TransitionError::NotSpecialLinear => "NotSpecialLinear",
            TransitionError::NonTerminatingFactorization { .. } => "NonTerminatingFactorization",
            TransitionError::NotDiagonalSubstitution { .. } => "NotDiagonalSubstitution",
            TransitionError::NotNormalizedRepresentative { .. } => "NotNormalizedRepresentative",
            TransitionError::Precondition(_) => "PreconditionViolated",
            TransitionError::Internal(_) => "InternalInconsistency",
            TransitionError::Alg(e) => e.code(),
            TransitionError::Loop(e) => e.code(),
        }
    }
}
