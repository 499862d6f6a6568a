use num_traits::{One, Zero};

use super::{AlgError, LaurentMatrix1, LaurentPoly1, Rational, Ring};

/// `input = left * diag(t^{diag[0]}, …) * right` with unimodular polynomial `left`, `right`.
#[derive(Clone, Debug, PartialEq)]
pub struct SnfResult {
    pub left: LaurentMatrix1,
    pub diag: Vec<i64>,
    pub right: LaurentMatrix1,
}

impl SnfResult {
    pub fn reconstruct(&self) -> LaurentMatrix1 {
        self.left
            .mul(&LaurentMatrix1::monomial_diagonal(&self.diag))
            .mul(&self.right)
    }
}

/// Working state: the invariant `m0 = u * a * v` holds after every step.
struct State {
    a: LaurentMatrix1,
    u: LaurentMatrix1,
    v: LaurentMatrix1,
}

impl State {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let n = self.a.cols();
        for c in 0..n {
            let x = self.a.get(i, c).clone();
            self.a.set(i, c, self.a.get(j, c).clone());
            self.a.set(j, c, x);
        }
        for r in 0..self.u.rows() {
            let x = self.u.get(r, i).clone();
            self.u.set(r, i, self.u.get(r, j).clone());
            self.u.set(r, j, x);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.a.rows() {
            let x = self.a.get(r, i).clone();
            self.a.set(r, i, self.a.get(r, j).clone());
            self.a.set(r, j, x);
        }
        for c in 0..self.v.cols() {
            let x = self.v.get(i, c).clone();
            self.v.set(i, c, self.v.get(j, c).clone());
            self.v.set(j, c, x);
        }
    }

    /// row_i += c * row_j
    fn add_row(&mut self, i: usize, j: usize, c: &LaurentPoly1) {
        for k in 0..self.a.cols() {
            let x = self.a.get(i, k).plus(&c.times(self.a.get(j, k)));
            self.a.set(i, k, x);
        }
        for r in 0..self.u.rows() {
            let x = self.u.get(r, j).minus(&c.times(self.u.get(r, i)));
            self.u.set(r, j, x);
        }
    }

    /// col_i += c * col_j
    fn add_col(&mut self, i: usize, j: usize, c: &LaurentPoly1) {
        for k in 0..self.a.rows() {
            let x = self.a.get(k, i).plus(&c.times(self.a.get(k, j)));
            self.a.set(k, i, x);
        }
        for k in 0..self.v.cols() {
            let x = self.v.get(j, k).minus(&c.times(self.v.get(i, k)));
            self.v.set(j, k, x);
        }
    }

    /// row_i *= c for a nonzero constant c.
    fn scale_row(&mut self, i: usize, c: &Rational) {
        let inv = c.recip();
        for k in 0..self.a.cols() {
            let x = self.a.get(i, k).scale(c);
            self.a.set(i, k, x);
        }
        for r in 0..self.u.rows() {
            let x = self.u.get(r, i).scale(&inv);
            self.u.set(r, i, x);
        }
    }
}

fn degree(p: &LaurentPoly1) -> i64 {
    p.max_exp().expect("degree of zero")
}

/// Smith normal form over Q[t] for a square polynomial matrix whose determinant is `c * t^k`.
///
/// Pivots are chosen by minimal degree, ties broken by lowest `(row, col)`.
/// Each diagonal entry comes out as a monic monomial, so only exponents are returned.
/// `left` is normalized to determinant 1; `right` then has determinant `c`.
pub fn smith_normal_form(m: &LaurentMatrix1) -> Result<SnfResult, AlgError> {
    if !m.is_square() {
        return Err(AlgError::NotSquare);
    }
    if m.entries().any(|(_, _, p)| !p.is_polynomial()) {
        return Err(AlgError::NotPolynomial);
    }
    let det = m.det();
    if det.is_zero() {
        return Err(AlgError::SingularMatrix);
    }
    if det.len() > 1 {
        return Err(AlgError::NonMonomialDeterminant);
    }
    let n = m.rows();
    let mut st = State {
        a: m.clone(),
        u: LaurentMatrix1::identity(n),
        v: LaurentMatrix1::identity(n),
    };
    for k in 0..n {
        loop {
            let mut best: Option<(i64, usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    let p = st.a.get(i, j);
                    if p.is_zero() {
                        continue;
                    }
                    let d = degree(p);
                    if best.is_none_or(|(bd, _, _)| d < bd) {
                        best = Some((d, i, j));
                    }
                }
            }
            let (_, pi, pj) = best.ok_or(AlgError::SingularMatrix)?;
            st.swap_rows(k, pi);
            st.swap_cols(k, pj);
            let pivot = st.a.get(k, k).clone();
            let mut dirty = false;
            for i in k + 1..n {
                if st.a.get(i, k).is_zero() {
                    continue;
                }
                let (q, r) = st.a.get(i, k).div_rem(&pivot);
                st.add_row(i, k, &q.negate());
                dirty |= !r.is_zero();
            }
            for j in k + 1..n {
                if st.a.get(k, j).is_zero() {
                    continue;
                }
                let (q, r) = st.a.get(k, j).div_rem(&pivot);
                st.add_col(j, k, &q.negate());
                dirty |= !r.is_zero();
            }
            if dirty {
                continue;
            }
            let bad = (k + 1..n)
                .flat_map(|i| (k + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !st.a.get(i, j).div_rem(&pivot).1.is_zero());
            match bad {
                Some((i, _)) => st.add_row(k, i, &LaurentPoly1::one()),
                None => break,
            }
        }
        let lc = st.a.get(k, k).leading_coeff().unwrap().clone();
        st.scale_row(k, &lc.recip());
    }
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        let p = st.a.get(k, k);
        if p.len() != 1 || !p.coeff(degree(p)).is_one() {
            return Err(AlgError::NonMonomialDeterminant);
        }
        diag.push(degree(p));
    }
    if n > 0 {
        let du = st.u.det().as_constant().filter(|c| !c.is_zero());
        let c = du.ok_or(AlgError::Internal("left factor not unimodular".into()))?;
        for r in 0..n {
            let x = st.u.get(r, 0).scale(&c.recip());
            st.u.set(r, 0, x);
        }
        for j in 0..n {
            let x = st.v.get(0, j).scale(&c);
            st.v.set(0, j, x);
        }
    }
    Ok(SnfResult {
        left: st.u,
        diag,
        right: st.v,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Matrix};

    fn t(k: i64) -> LaurentPoly1 {
        LaurentPoly1::term(rat(1), k)
    }

    #[test]
    fn diagonal_input() {
        let m = Matrix::diagonal(vec![t(1), t(1)]);
        let s = smith_normal_form(&m).unwrap();
        assert_eq!(s.diag, vec![1, 1]);
        assert!(s.left.is_identity() && s.right.is_identity());
    }

    #[test]
    fn unimodular_input() {
        let m = Matrix::from_rows(vec![vec![t(0), t(1)], vec![LaurentPoly1::zero(), t(0)]]).unwrap();
        let s = smith_normal_form(&m).unwrap();
        assert_eq!(s.diag, vec![0, 0]);
        assert_eq!(s.reconstruct(), m);
    }

    #[test]
    fn jordan_like_block() {
        let m = Matrix::from_rows(vec![vec![t(1), t(0)], vec![LaurentPoly1::zero(), t(1)]]).unwrap();
        let s = smith_normal_form(&m).unwrap();
        assert_eq!(s.diag, vec![0, 2]);
        assert_eq!(s.reconstruct(), m);
        assert!(s.left.det().is_one());
    }

    #[test]
    fn errors() {
        let z = Matrix::from_rows(vec![vec![t(1), t(1)], vec![t(1), t(1)]]).unwrap();
        assert_eq!(smith_normal_form(&z), Err(AlgError::SingularMatrix));
        let nm = Matrix::diagonal(vec![t(1).plus(&t(0)), t(0)]);
        assert_eq!(smith_normal_form(&nm), Err(AlgError::NonMonomialDeterminant));
    }
}
