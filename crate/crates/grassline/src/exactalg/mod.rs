//! Exact scalars, sparse Laurent polynomials, matrices over them, and the
//! Smith normal form over `Q[t]`.

mod laurent;
mod linalg;
mod matrix;
pub mod rational;
mod ring;
mod snf;
pub mod text;

pub use laurent::{split_neg_nonneg, Laurent, LaurentPoly1, LaurentPoly2, Monomial};
pub use matrix::{LaurentMatrix1, LaurentMatrix2, Matrix, QMatrix};
pub use rational::{format_rational, frac, parse_rational, rat, Rational};
pub use ring::Ring;
pub use snf::{smith_normal_form, SnfResult};
pub use text::{format_laurent, parse_laurent};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("determinant is not a single monomial")]
    NonMonomialDeterminant,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("determinant is not 1")]
    DeterminantNotOne,
    #[error("matrix is not square")]
    NotSquare,
    #[error("entries must be polynomials")]
    NotPolynomial,
    #[error("rows have different lengths")]
    Ragged,
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl AlgError {
    pub fn code(&self) -> &'static str {
        match self {
            AlgError::NonMonomialDeterminant => "NonMonomialDeterminant",
            AlgError::SingularMatrix => "SingularMatrix",
            AlgError::DeterminantNotOne => "DeterminantNotOne",
            AlgError::NotSquare => "NotSquare",
            AlgError::NotPolynomial => "NotPolynomial",
            AlgError::Ragged => "RaggedMatrix",
            AlgError::Internal(_) => "InternalInconsistency",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("malformed rational {0:?}")]
    BadRational(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("malformed polynomial: {0}")]
    BadPolynomial(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
}

/// Parses a row-major array of polynomial strings into a matrix.
pub fn parse_matrix<M: Monomial>(rows: &[Vec<String>], vars: &[&str]) -> Result<Matrix<Laurent<M>>, ParseError> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_laurent(s, vars)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(parsed).map_err(|_| ParseError::BadPolynomial("ragged matrix".into()))
}

pub fn format_matrix<M: Monomial>(m: &Matrix<Laurent<M>>, vars: &[&str]) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|p| format_laurent(p, vars)).collect())
        .collect()
}

pub fn format_qmatrix(m: &QMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format_rational).collect())
        .collect()
}

/// Convenience constructor from integer rows.
pub fn qmatrix(rows: &[&[i64]]) -> QMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()).expect("uniform rows")
}
