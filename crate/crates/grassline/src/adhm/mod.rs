//! Graded ADHM data of types A and D, their stability, the explicit maps to the
//! loop group, and the dimension-vector bookkeeping on the `A∞` and `D∞` graphs.

mod dims;
mod graded;
mod monad;
mod quadruple;
mod sample;

pub use dims::{
    chern_number, framing_a, framing_d, lambda_from_v, quiver_dim_a, quiver_dim_d, tau_multiplicities_a,
    tau_multiplicities_d, v_from_lambda, vd_from_xi, xi_enumerate, DimVectorA, DimVectorD, XiClass,
};
pub use graded::{theta_psi_a, theta_psi_d, AdhmDatumA, AdhmDatumD, FoldedMaps};
pub use monad::{monad_maps, sample_points, MonadMaps};
pub use quadruple::Quadruple;
pub use sample::{sample_datum_a, sample_datum_d, SampleOptions};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AdhmError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("datum fails {0}")]
    InvalidDatum(String),
    #[error("datum is not stable and costable")]
    NotStableCostable,
    #[error("negative multiplicity at vertex {0}")]
    NegativeMultiplicity(String),
    #[error("total weight {0} is not zero")]
    NonzeroTotalWeight(i64),
    #[error("dimension vector is not integral")]
    IntegralityViolation,
    #[error("invalid class: {0}")]
    InvalidXi(String),
    #[error("infeasible at vertex {0}")]
    Infeasible(String),
    #[error("the quiver variety for this class is empty")]
    EmptyStratum,
    #[error("no stable costable sample after {0} attempts")]
    SamplingExhausted(usize),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl AdhmError {
    pub fn code(&self) -> &'static str {
        match self {
            AdhmError::ShapeMismatch(_) => "ShapeMismatch",
            AdhmError::InvalidDatum(_) => "InvalidDatum",
            AdhmError::NotStableCostable => "NotStableCostable",
            AdhmError::NegativeMultiplicity(_) => "NegativeMultiplicity",
            AdhmError::NonzeroTotalWeight(_) => "NonzeroTotalWeight",
            AdhmError::IntegralityViolation => "IntegralityViolation",
            AdhmError::InvalidXi(_) => "InvalidXi",
            AdhmError::Infeasible(_) => "Infeasible",
            AdhmError::EmptyStratum => "EmptyStratum",
            AdhmError::SamplingExhausted(_) => "SamplingExhausted",
            AdhmError::SingularMatrix => "SingularMatrix",
            AdhmError::Internal(_) => "InternalInconsistency",
        }
    }
}

#[cfg(test)]
mod tests;
