use num_traits::{One, Zero};

use crate::exactalg::{rational, LaurentMatrix1, LaurentMatrix2, QMatrix, Rational};
use crate::loopgroup::{Factorization, LoopElement};
use crate::report::{Check, CheckReport};

use super::cones::*;
use super::quad::diagonal_substitution;
use super::{TransitionError, TripleGauge};

const S12: [&str; 2] = ["s1", "s2"];

/// Transition functions on the standard charts of `P²`, in `s1 = z1/z0`, `s2 = z2/z0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransitionTriple {
    pub g1_0: LaurentMatrix2,
    pub g2_0: LaurentMatrix2,
    pub g2_1: LaurentMatrix2,
}

/// `q2⁻¹(s1s2)·s1^{−λ}`, `q1(s1s2)·s2^λ`, `γ(s1s2)`.
pub fn build_triple(f: &Factorization) -> Result<TransitionTriple, TransitionError> {
    let lam = f.lambda.entries();
    let q2_inv = f.q2.adjugate_inverse().map_err(TransitionError::Alg)?;
    let s1 = LaurentMatrix2::monomial_diagonal2(&lam.iter().map(|&l| (-l, 0)).collect::<Vec<_>>());
    let s2 = LaurentMatrix2::monomial_diagonal2(&lam.iter().map(|&l| (0, l)).collect::<Vec<_>>());
    let tr = TransitionTriple {
        g1_0: diagonal_substitution(&q2_inv).mul(&s1),
        g2_0: diagonal_substitution(&f.q1).mul(&s2),
        g2_1: diagonal_substitution(&f.reconstruct()),
    };
    if let Some(bad) = verify_triple(&tr).failures().next() {
        return Err(TransitionError::Internal(format!("built triple fails {}", bad.name)));
    }
    Ok(tr)
}

pub fn verify_triple(tr: &TransitionTriple) -> CheckReport {
    let mut rep = CheckReport::new();
    let r = tr.g1_0.rows();
    let shapes = [&tr.g1_0, &tr.g2_0, &tr.g2_1]
        .iter()
        .all(|m| m.rows() == r && m.cols() == r);
    rep.push(Check::from_bool("shape", shapes, || "matrices differ in size".into()));
    if !shapes {
        return rep;
    }
    rep.push(cone("g1_0.cone", &tr.g1_0, u_nonneg, S12));
    rep.push(cone("g2_0.cone", &tr.g2_0, t_nonneg, S12));
    rep.push(cone("g2_1.cone", &tr.g2_1, total_nonpos, S12));
    rep.push(slice_identity("g2_1.slice", &tr.g2_1, total_zero, S12));
    rep.push(det_one("g1_0.det", &tr.g1_0, S12));
    rep.push(det_one("g2_0.det", &tr.g2_0, S12));
    rep.push(det_one("g2_1.det", &tr.g2_1, S12));
    let diff = tr.g2_0.sub(&tr.g2_1.mul(&tr.g1_0));
    rep.push(first_difference("cocycle", &diff, S12));
    rep
}

/// Reads `γ` off `g2_1`, which must be a function of `s1·s2`.
pub fn extract_triple(tr: &TransitionTriple) -> Result<LoopElement, TransitionError> {
    let mut body = LaurentMatrix1::zeros(tr.g2_1.rows(), tr.g2_1.cols());
    for (i, j, p) in tr.g2_1.entries() {
        if let Some((a, b)) = p.monomials().find(|(a, b)| a != b) {
            return Err(TransitionError::NotNormalizedRepresentative { s1_exp: a, s2_exp: b });
        }
        body.set(i, j, p.map_monomials(|(a, _)| a));
    }
    LoopElement::new(body).map_err(TransitionError::Loop)
}

/// `(h1 g1_0 h0⁻¹, h2 g2_0 h0⁻¹, h2 g2_1 h1⁻¹)`.
pub fn act_gauge_triple(tr: &TransitionTriple, h: &TripleGauge) -> Result<TransitionTriple, TransitionError> {
    if let Some(bad) = h.validate().failures().next() {
        return Err(TransitionError::ConeViolation(bad.name.clone()));
    }
    let h0i = h.h0.adjugate();
    Ok(TransitionTriple {
        g1_0: h.h1.mul(&tr.g1_0).mul(&h0i),
        g2_0: h.h2.mul(&tr.g2_0).mul(&h0i),
        g2_1: h.h2.mul(&tr.g2_1).mul(&h.h1.adjugate()),
    })
}

/// Change of framing by a constant `g ∈ SL(r)`.
pub fn act_g_triple(tr: &TransitionTriple, g: &QMatrix) -> Result<TransitionTriple, TransitionError> {
    if !g.is_square() || g.rows() != tr.g1_0.rows() || !g.det_q().is_one() {
        return Err(TransitionError::NotSpecialLinear);
    }
    let gl = LaurentMatrix2::constant(g);
    let gi = LaurentMatrix2::constant(&g.inverse().expect("det 1"));
    Ok(TransitionTriple {
        g1_0: gl.mul(&tr.g1_0),
        g2_0: gl.mul(&tr.g2_0),
        g2_1: gl.mul(&tr.g2_1).mul(&gi),
    })
}

/// `s1 ↦ α⁻¹s1`, `s2 ↦ β⁻¹s2`.
pub fn act_torus_triple(
    tr: &TransitionTriple,
    alpha: &Rational,
    beta: &Rational,
) -> Result<TransitionTriple, TransitionError> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(TransitionError::ZeroScalar);
    }
    let f = |m: &LaurentMatrix2| {
        m.map(|p| p.map_coeffs(|(a, b), c| c * rational::pow(alpha, -a) * rational::pow(beta, -b)))
    };
    Ok(TransitionTriple {
        g1_0: f(&tr.g1_0),
        g2_0: f(&tr.g2_0),
        g2_1: f(&tr.g2_1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_matrix;
    use crate::loopgroup::Coweight;

    fn m1(rows: &[&[&str]]) -> LaurentMatrix1 {
        let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
        parse_matrix(&rows, &["t"]).unwrap()
    }

    fn m2(rows: &[&[&str]]) -> LaurentMatrix2 {
        let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
        parse_matrix(&rows, &["s1", "s2"]).unwrap()
    }

    #[test]
    fn special_example() {
        let f = Factorization {
            q1: m1(&[&["0", "1"], &["-1", "t"]]),
            lambda: Coweight::new(vec![1, -1]).unwrap(),
            q2: m1(&[&["1", "0"], &["t", "1"]]),
        };
        let tr = build_triple(&f).unwrap();
        assert_eq!(tr.g1_0, m2(&[&["s1^-1", "0"], &["-s2", "s1"]]));
        assert_eq!(tr.g2_0, m2(&[&["0", "s2^-1"], &["-s2", "s1"]]));
        assert_eq!(tr.g2_1, m2(&[&["1", "s1^-1*s2^-1"], &["0", "1"]]));
        assert_eq!(*extract_triple(&tr).unwrap().body(), m1(&[&["1", "t^-1"], &["0", "1"]]));
    }

    #[test]
    fn unequal_exponents_are_rejected() {
        let tr = TransitionTriple {
            g1_0: LaurentMatrix2::identity(2),
            g2_0: LaurentMatrix2::identity(2),
            g2_1: m2(&[&["1", "s1^-1"], &["0", "1"]]),
        };
        assert!(matches!(
            extract_triple(&tr),
            Err(TransitionError::NotNormalizedRepresentative { .. })
        ));
        assert!(!verify_triple(&tr).get("cocycle").unwrap().pass);
    }

    #[test]
    fn identity_triple() {
        let f = Factorization {
            q1: LaurentMatrix1::identity(3),
            lambda: Coweight::zero(3),
            q2: LaurentMatrix1::identity(3),
        };
        let tr = build_triple(&f).unwrap();
        assert!(tr.g1_0.is_identity() && tr.g2_0.is_identity() && tr.g2_1.is_identity());
    }
}
