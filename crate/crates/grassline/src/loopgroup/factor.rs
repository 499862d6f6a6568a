use num_traits::{One, Zero};

use crate::exactalg::{smith_normal_form, LaurentMatrix1, QMatrix, Rational};

use super::{iota, Coweight, LoopElement, LoopError};

/// `γ = q1 · t^λ · q2` with `q1`, `q2` polynomial in `t` of determinant 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    pub q1: LaurentMatrix1,
    pub lambda: Coweight,
    pub q2: LaurentMatrix1,
}

impl Factorization {
    pub fn reconstruct(&self) -> LaurentMatrix1 {
        self.q1
            .mul(&LaurentMatrix1::monomial_diagonal(self.lambda.entries()))
            .mul(&self.q2)
    }

    /// Checks determinants, polynomiality and the reconstruction against `g`.
    pub fn is_factorization_of(&self, g: &LoopElement) -> bool {
        let poly = |m: &LaurentMatrix1| m.entries().all(|(_, _, p)| p.is_polynomial());
        poly(&self.q1)
            && poly(&self.q2)
            && self.q1.det().is_one()
            && self.q2.det().is_one()
            && self.reconstruct() == *g.body()
    }
}

/// Permutation matrix `P` with `P⁻¹ diag(a) P` sorted descending, keeping ties in
/// their original order. One column is negated when needed so that `det P = 1`.
fn descending_permutation(a: &[i64]) -> QMatrix {
    let r = a.len();
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&i, &j| a[j].cmp(&a[i]));
    let mut p = QMatrix::zeros(r, r);
    for (k, &i) in order.iter().enumerate() {
        p.set(i, k, Rational::one());
    }
    if !p.det_q().is_one() {
        let x = -p.get(order[0], 0).clone();
        p.set(order[0], 0, x);
    }
    p
}

/// Factors `g = q1 · t^λ · q2` via the Smith normal form of `t^d · g`.
pub fn factorize(g: &LoopElement) -> Result<Factorization, LoopError> {
    let d = g.degree() as i64;
    let shifted = g.body().map(|p| p.shift(d));
    let snf = smith_normal_form(&shifted).map_err(|e| LoopError::InternalInconsistency(e.to_string()))?;
    // diag ascending; reversal gives a descending coweight
    let lambda: Vec<i64> = snf.diag.iter().rev().map(|a| a - d).collect();
    let lambda = Coweight::new(lambda).map_err(|e| LoopError::InternalInconsistency(e.to_string()))?;
    let p = descending_permutation(&snf.diag);
    let p_inv = p.inverse().expect("permutation");
    let q1 = snf.left.mul(&LaurentMatrix1::constant(&p));
    let q2 = LaurentMatrix1::constant(&p_inv).mul(&snf.right);
    let f = Factorization { q1, lambda, q2 };
    if !f.is_factorization_of(g) {
        return Err(LoopError::InternalInconsistency(
            "factorization does not reconstruct".into(),
        ));
    }
    Ok(f)
}

/// Label `λ` of the stratum `Gr₀^λ` containing `g`.
pub fn stratum(g: &LoopElement) -> Result<Coweight, LoopError> {
    Ok(factorize(g)?.lambda)
}

/// The limit `t^λ q2(0) q1(0) t^λ` as `t → 0`, for an ι-fixed `g`.
pub fn sigma_invariant(g: &LoopElement, f: &Factorization) -> Result<QMatrix, LoopError> {
    if iota(g) != *g {
        return Err(LoopError::NotIotaFixed);
    }
    if !f.is_factorization_of(g) {
        return Err(LoopError::InternalInconsistency(
            "factorization does not match element".into(),
        ));
    }
    let lam = f.lambda.entries();
    let r = lam.len();
    let p = f.q2.coefficient(0).mul(&f.q1.coefficient(0));
    let mut sigma = QMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            let w = lam[i] + lam[j];
            let v = p.get(i, j);
            if w < 0 && !v.is_zero() {
                return Err(LoopError::IllDefinedLimit { row: i, col: j });
            }
            if w == 0 {
                sigma.set(i, j, v.clone());
            }
        }
    }
    let expected = QMatrix::diagonal(
        lam.iter()
            .map(|l| if l % 2 == 0 { Rational::one() } else { -Rational::one() })
            .collect(),
    );
    if sigma.mul(&sigma) != expected {
        return Err(LoopError::SigmaRelation);
    }
    Ok(sigma)
}

/// Stratum of an ι-fixed element together with the eigenvalue multiplicities
/// of `σ` on the weight-zero block.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixedClass {
    pub lambda: Coweight,
    pub m_plus: usize,
    pub m_minus: usize,
}

impl FixedClass {
    /// Sum and parity constraints on `(m_plus, m_minus)`.
    pub fn is_consistent(&self) -> bool {
        let even_sum: usize = self
            .lambda
            .multiplicities()
            .iter()
            .filter(|(&i, _)| i > 0 && i % 2 == 0)
            .map(|(_, &m)| m)
            .sum();
        self.m_plus + self.m_minus == self.lambda.multiplicity(0) && (self.m_minus + even_sum).is_multiple_of(2)
    }
}

pub fn classify_fixed(g: &LoopElement) -> Result<FixedClass, LoopError> {
    if iota(g) != *g {
        return Err(LoopError::NotIotaFixed);
    }
    let f = factorize(g)?;
    let sigma = sigma_invariant(g, &f)?;
    let zero_block: Vec<usize> = f
        .lambda
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == 0)
        .map(|(i, _)| i)
        .collect();
    let s0 = sigma.submatrix(&zero_block, &zero_block);
    let id = QMatrix::identity(zero_block.len());
    let m0 = zero_block.len();
    Ok(FixedClass {
        lambda: f.lambda,
        m_plus: m0 - s0.sub(&id).rank(),
        m_minus: m0 - s0.add(&id).rank(),
    })
}

/// Checks that `σ` carries the weight-`μ` coordinates to the weight-`(−μ)` coordinates.
pub fn sigma_respects_weights(sigma: &QMatrix, lambda: &Coweight) -> bool {
    let lam = lambda.entries();
    sigma.entries().all(|(i, j, v)| v.is_zero() || lam[i] + lam[j] == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_matrix, qmatrix};
    use crate::loopgroup::exp_embed;

    fn el(rows: &[&[&str]]) -> LoopElement {
        let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
        LoopElement::new(parse_matrix(&rows, &["t"]).unwrap()).unwrap()
    }

    fn lm(rows: &[&[&str]]) -> LaurentMatrix1 {
        let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
        parse_matrix(&rows, &["t"]).unwrap()
    }

    #[test]
    fn identity_factors_trivially() {
        let f = factorize(&LoopElement::identity(3)).unwrap();
        assert!(f.lambda.is_zero());
        assert!(f.q1.is_identity() && f.q2.is_identity());
    }

    #[test]
    fn unipotent_sl2() {
        let g = el(&[&["1", "t^-1"], &["0", "1"]]);
        let f = factorize(&g).unwrap();
        assert_eq!(f.lambda.entries(), &[1, -1]);
        assert!(f.is_factorization_of(&g));
        let known = Factorization {
            q1: lm(&[&["0", "1"], &["-1", "t"]]),
            lambda: f.lambda.clone(),
            q2: lm(&[&["1", "0"], &["t", "1"]]),
        };
        assert!(known.is_factorization_of(&g));
        assert_eq!(sigma_invariant(&g, &known).unwrap(), qmatrix(&[&[0, 1], &[-1, 0]]));
    }

    #[test]
    fn regular_nilpotent_sl3() {
        let x = qmatrix(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let g = exp_embed(&x).unwrap();
        assert_eq!(stratum(&g).unwrap().entries(), &[2, 0, -2]);
        let c = classify_fixed(&g).unwrap();
        assert!(c.is_consistent());
        assert_eq!((c.m_plus, c.m_minus), (0, 1));
    }

    #[test]
    fn lower_unipotent_sigma() {
        let g = el(&[&["1", "0"], &["t^-1", "1"]]);
        let f = factorize(&g).unwrap();
        let s = sigma_invariant(&g, &f).unwrap();
        assert_eq!(s.mul(&s), QMatrix::identity(2).neg());
    }

    #[test]
    fn non_fixed_is_refused() {
        let g = el(&[&["1", "t^-2"], &["0", "1"]]);
        assert!(matches!(classify_fixed(&g), Err(LoopError::NotIotaFixed)));
    }

    #[test]
    fn identity_class() {
        let c = classify_fixed(&LoopElement::identity(3)).unwrap();
        assert_eq!((c.m_plus, c.m_minus), (3, 0));
    }
}
