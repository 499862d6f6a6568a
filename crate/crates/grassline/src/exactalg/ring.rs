use std::fmt::Debug;

use num_traits::{One, Zero};

use super::Rational;

/// Commutative ring with exact equality, as needed by [`Matrix`](super::Matrix).
/// Arithmetic goes through references to avoid needless clones of big coefficients.
pub trait Ring: Clone + PartialEq + Debug + Zero + One {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
}

impl Ring for Rational {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
}
