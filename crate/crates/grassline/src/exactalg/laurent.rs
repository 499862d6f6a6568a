use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

use num_traits::{One, Zero};

use super::{rational, Rational, Ring};

/// Exponent data of a Laurent monomial.
pub trait Monomial: Copy + Ord + Hash + Debug {
    const ARITY: usize;
    fn unit() -> Self;
    fn times(self, other: Self) -> Self;
    fn exponents(self) -> Vec<i64>;
    fn from_exponents(e: &[i64]) -> Self;
}

impl Monomial for i64 {
    const ARITY: usize = 1;
    fn unit() -> Self {
        0
    }
    fn times(self, other: Self) -> Self {
        self + other
    }
    fn exponents(self) -> Vec<i64> {
        vec![self]
    }
    fn from_exponents(e: &[i64]) -> Self {
        e[0]
    }
}

impl Monomial for (i64, i64) {
    const ARITY: usize = 2;
    fn unit() -> Self {
        (0, 0)
    }
    fn times(self, other: Self) -> Self {
        (self.0 + other.0, self.1 + other.1)
    }
    fn exponents(self) -> Vec<i64> {
        vec![self.0, self.1]
    }
    fn from_exponents(e: &[i64]) -> Self {
        (e[0], e[1])
    }
}

/// Sparse Laurent polynomial over the rationals. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Laurent<M: Monomial> {
    terms: BTreeMap<M, Rational>,
}

/// Laurent polynomial in one variable.
pub type LaurentPoly1 = Laurent<i64>;
/// Laurent polynomial in two variables; exponents are `(p, q)`.
pub type LaurentPoly2 = Laurent<(i64, i64)>;

impl<M: Monomial> Default for Laurent<M> {
    fn default() -> Self {
        Laurent { terms: BTreeMap::new() }
    }
}

impl<M: Monomial> Laurent<M> {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, M::unit())
    }

    pub fn monomial(c: Rational, m: M) -> Self {
        let mut p = Self::default();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (M, Rational)>>(terms: I) -> Self {
        let mut p = Self::default();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<M, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<M, Rational> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: M) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: M, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == M::unit())
    }

    /// The value when the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.coeff(M::unit()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Multiplies by a monomial `x^m`.
    pub fn shift(&self, m: M) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(k, a)| (k.times(m), a.clone())).collect(),
        }
    }

    /// Applies an exponent map, collecting colliding terms.
    pub fn map_monomials<N: Monomial>(&self, f: impl Fn(M) -> N) -> Laurent<N> {
        Laurent::from_terms(self.terms.iter().map(|(m, c)| (f(*m), c.clone())))
    }

    /// Rescales each coefficient by a factor that depends on its exponent.
    pub fn map_coeffs(&self, f: impl Fn(M, &Rational) -> Rational) -> Self {
        Laurent::from_terms(self.terms.iter().map(|(m, c)| (*m, f(*m, c))))
    }

    pub fn filter(&self, keep: impl Fn(M) -> bool) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(**m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn monomials(&self) -> impl Iterator<Item = M> + '_ {
        self.terms.keys().copied()
    }
}

impl<M: Monomial> Zero for Laurent<M> {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<M: Monomial> One for Laurent<M> {
    fn one() -> Self {
        Laurent::constant(Rational::one())
    }
}

impl<M: Monomial> std::ops::Add for Laurent<M> {
    type Output = Self;
    fn add(self, other: Self) -> Self {
        self.plus(&other)
    }
}

impl<M: Monomial> std::ops::Mul for Laurent<M> {
    type Output = Self;
    fn mul(self, other: Self) -> Self {
        self.times(&other)
    }
}

impl<M: Monomial> Ring for Laurent<M> {
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
    fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.times(*b), x * y);
            }
        }
        out
    }
    fn negate(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl LaurentPoly1 {
    /// `c * x^k`.
    pub fn term(c: Rational, k: i64) -> Self {
        Self::monomial(c, k)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when no negative exponents occur.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(k, c)| c * rational::pow(x, *k))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Euclidean division of polynomials; `divisor` must be a nonzero polynomial.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.max_exp().expect("division by zero polynomial");
        let lc = divisor.leading_coeff().unwrap().clone();
        let mut quot = Self::default();
        let mut rem = self.clone();
        while let Some(rd) = rem.max_exp() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coeff().unwrap() / &lc;
            let step = Self::term(c.clone(), rd - dd);
            rem = rem.minus(&step.times(divisor));
            quot.add_term(rd - dd, c);
        }
        (quot, rem)
    }

    /// Splits into the part with negative exponents and the part with nonnegative ones.
    pub fn split_neg_nonneg(&self) -> (Self, Self) {
        (self.filter(|k| k < 0), self.filter(|k| k >= 0))
    }
}

/// See [`LaurentPoly1::split_neg_nonneg`].
pub fn split_neg_nonneg(p: &LaurentPoly1) -> (LaurentPoly1, LaurentPoly1) {
    p.split_neg_nonneg()
}

impl LaurentPoly2 {
    pub fn term2(c: Rational, p: i64, q: i64) -> Self {
        Self::monomial(c, (p, q))
    }

    /// Exchanges the two variables.
    pub fn swap_vars(&self) -> Self {
        self.map_monomials(|(p, q)| (q, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{frac, rat};

    fn p1(terms: &[(i64, i64)]) -> LaurentPoly1 {
        Laurent::from_terms(terms.iter().map(|&(k, c)| (k, rat(c))))
    }

    #[test]
    fn zero_terms_are_trimmed() {
        let a = p1(&[(1, 2), (0, 1)]);
        let b = p1(&[(1, -2)]);
        let s = a.plus(&b);
        assert_eq!(s, p1(&[(0, 1)]));
        assert!(a.minus(&a).is_empty());
    }

    #[test]
    fn product_collects_terms() {
        let a = p1(&[(1, 1), (-1, 1)]);
        assert_eq!(a.times(&a), p1(&[(2, 1), (0, 2), (-2, 1)]));
    }

    #[test]
    fn division_with_remainder() {
        let a = p1(&[(3, 1), (0, -1)]);
        let b = p1(&[(1, 2), (0, 1)]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.times(&b).plus(&r), a);
        assert!(r.max_exp().is_none_or(|e| e < 1));
    }

    #[test]
    fn split_examples() {
        let (n, p) = p1(&[(1, 1), (-1, 1)]).split_neg_nonneg();
        assert_eq!((n, p), (p1(&[(-1, 1)]), p1(&[(1, 1)])));
        let (n, p) = LaurentPoly1::zero().split_neg_nonneg();
        assert!(n.is_empty() && p.is_empty());
        let (n, p) = p1(&[(0, 3), (-2, -2), (3, 1)]).split_neg_nonneg();
        assert_eq!(n, p1(&[(-2, -2)]));
        assert_eq!(p, p1(&[(0, 3), (3, 1)]));
    }

    #[test]
    fn evaluation_handles_negative_powers() {
        let a = p1(&[(-1, 1), (2, 3)]);
        assert_eq!(a.evaluate(&rat(2)), frac(1, 2) + rat(12));
    }
}
