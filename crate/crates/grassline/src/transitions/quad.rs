use num_traits::{One, Zero};

use crate::exactalg::{rational, LaurentMatrix1, LaurentMatrix2, QMatrix, Rational};
use crate::loopgroup::{Factorization, LoopElement};
use crate::report::{Check, CheckReport};

use super::cones::{self, *};
use super::split::{birkhoff_split_u, SplitOptions};
use super::{GaugeElement, TransitionError};

const TU: [&str; 2] = ["t", "u"];

/// Transition functions of a framed bundle on `P¹×P¹`, keyed by chart pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransitionQuad {
    pub g01_00: LaurentMatrix2,
    pub g10_00: LaurentMatrix2,
    pub g11_01: LaurentMatrix2,
    pub g11_10: LaurentMatrix2,
}

/// `t ↦ tu` applied to a matrix in `t`.
pub(crate) fn diagonal_substitution(m: &LaurentMatrix1) -> LaurentMatrix2 {
    m.map_monomials(|k| (k, k))
}

/// `q1(tu)·u^λ`, `q2⁻¹(tu)·t^{−λ}`, `1`, `γ(tu)`.
pub fn build_quad(f: &Factorization) -> Result<TransitionQuad, TransitionError> {
    let lam = f.lambda.entries();
    let r = lam.len();
    let q2_inv = f.q2.adjugate_inverse().map_err(TransitionError::Alg)?;
    let u_lam = LaurentMatrix2::monomial_diagonal2(&lam.iter().map(|&l| (0, l)).collect::<Vec<_>>());
    let t_neg = LaurentMatrix2::monomial_diagonal2(&lam.iter().map(|&l| (-l, 0)).collect::<Vec<_>>());
    let gamma = f.reconstruct();
    let q = TransitionQuad {
        g01_00: diagonal_substitution(&f.q1).mul(&u_lam),
        g10_00: diagonal_substitution(&q2_inv).mul(&t_neg),
        g11_01: LaurentMatrix2::identity(r),
        g11_10: diagonal_substitution(&gamma),
    };
    let report = verify_quad(&q);
    if let Some(bad) = report.failures().next() {
        return Err(TransitionError::Internal(format!("built quadruple fails {}", bad.name)));
    }
    Ok(q)
}

/// Support cones, identity slices, determinants and the cocycle relation.
pub fn verify_quad(q: &TransitionQuad) -> CheckReport {
    let mut rep = CheckReport::new();
    let r = q.g01_00.rows();
    let shapes = [&q.g01_00, &q.g10_00, &q.g11_01, &q.g11_10]
        .iter()
        .all(|m| m.rows() == r && m.cols() == r);
    rep.push(Check::from_bool("shape", shapes, || "matrices differ in size".into()));
    if !shapes {
        return rep;
    }
    rep.push(cone("g01_00.cone", &q.g01_00, t_nonneg, TU));
    rep.push(cone("g10_00.cone", &q.g10_00, u_nonneg, TU));
    rep.push(cone("g11_01.cone", &q.g11_01, u_nonpos, TU));
    rep.push(slice_identity("g11_01.slice", &q.g11_01, u_zero, TU));
    rep.push(cone("g11_10.cone", &q.g11_10, t_nonpos, TU));
    rep.push(slice_identity("g11_10.slice", &q.g11_10, t_zero, TU));
    rep.push(det_one("g01_00.det", &q.g01_00, TU));
    rep.push(det_one("g10_00.det", &q.g10_00, TU));
    rep.push(det_one("g11_01.det", &q.g11_01, TU));
    rep.push(det_one("g11_10.det", &q.g11_10, TU));
    let lhs = q.g11_01.mul(&q.g01_00);
    let rhs = q.g11_10.mul(&q.g10_00);
    rep.push(first_difference("cocycle", &lhs.sub(&rhs), TU));
    rep
}

/// `(h01 g01 h00⁻¹, h10 g10 h00⁻¹, h11 g11_01 h01⁻¹, h11 g11_10 h10⁻¹)`.
pub fn act_gauge(q: &TransitionQuad, h: &GaugeElement) -> Result<TransitionQuad, TransitionError> {
    if let Some(bad) = h.validate().failures().next() {
        return Err(TransitionError::ConeViolation(bad.name.clone()));
    }
    Ok(act_gauge_unchecked(q, h))
}

pub(crate) fn act_gauge_unchecked(q: &TransitionQuad, h: &GaugeElement) -> TransitionQuad {
    let inv = |m: &LaurentMatrix2| m.adjugate();
    let h00i = inv(&h.h00);
    TransitionQuad {
        g01_00: h.h01.mul(&q.g01_00).mul(&h00i),
        g10_00: h.h10.mul(&q.g10_00).mul(&h00i),
        g11_01: h.h11.mul(&q.g11_01).mul(&inv(&h.h01)),
        g11_10: h.h11.mul(&q.g11_10).mul(&inv(&h.h10)),
    }
}

/// `t ↦ α⁻¹t`, `u ↦ β⁻¹u`.
pub fn act_torus(q: &TransitionQuad, alpha: &Rational, beta: &Rational) -> Result<TransitionQuad, TransitionError> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(TransitionError::ZeroScalar);
    }
    let f = |m: &LaurentMatrix2| {
        m.map(|p| p.map_coeffs(|(a, b), c| c * rational::pow(alpha, -a) * rational::pow(beta, -b)))
    };
    Ok(TransitionQuad {
        g01_00: f(&q.g01_00),
        g10_00: f(&q.g10_00),
        g11_01: f(&q.g11_01),
        g11_10: f(&q.g11_10),
    })
}

/// Exchanges the two `P¹` factors.
pub fn act_swap(q: &TransitionQuad) -> TransitionQuad {
    TransitionQuad {
        g01_00: cones::swap(&q.g10_00),
        g10_00: cones::swap(&q.g01_00),
        g11_01: cones::swap(&q.g11_10),
        g11_10: cones::swap(&q.g11_01),
    }
}

/// Change of framing by a constant `g ∈ SL(r)`.
pub fn act_g(q: &TransitionQuad, g: &QMatrix) -> Result<TransitionQuad, TransitionError> {
    if !g.is_square() || g.rows() != q.g01_00.rows() || !g.det_q().is_one() {
        return Err(TransitionError::NotSpecialLinear);
    }
    let gl = LaurentMatrix2::constant(g);
    let gi = LaurentMatrix2::constant(&g.inverse().expect("det 1"));
    Ok(TransitionQuad {
        g01_00: gl.mul(&q.g01_00),
        g10_00: gl.mul(&q.g10_00),
        g11_01: gl.mul(&q.g11_01).mul(&gi),
        g11_10: gl.mul(&q.g11_10).mul(&gi),
    })
}

/// Action of `[[0,1],[−1,0]] ∈ SL(2)`: the swap followed by the torus element `(−1, 1)`.
pub fn act_weyl(q: &TransitionQuad) -> TransitionQuad {
    act_torus(&act_swap(q), &-Rational::one(), &Rational::one()).expect("nonzero scalars")
}

/// Recovers `γ` from `((g11_01)′)⁻¹ · (g11_10)′`.
pub fn extract_quad(q: &TransitionQuad, opts: SplitOptions) -> Result<LoopElement, TransitionError> {
    let (a1, _) = birkhoff_split_u(&q.g11_01, opts)?;
    let (a2s, _) = birkhoff_split_u(&cones::swap(&q.g11_10), opts)?;
    let a2 = cones::swap(&a2s);
    let m = a1.adjugate_inverse().map_err(TransitionError::Alg)?.mul(&a2);
    let mut body = LaurentMatrix1::zeros(m.rows(), m.cols());
    for (i, j, p) in m.entries() {
        if let Some((a, b)) = p.monomials().find(|(a, b)| a != b) {
            return Err(TransitionError::NotDiagonalSubstitution { t_exp: a, u_exp: b });
        }
        body.set(i, j, p.map_monomials(|(a, _)| a));
    }
    LoopElement::new(body).map_err(TransitionError::Loop)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_matrix, qmatrix, rat};
    use crate::loopgroup::{factorize, Coweight};

    fn m1(rows: &[&[&str]]) -> LaurentMatrix1 {
        let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
        parse_matrix(&rows, &["t"]).unwrap()
    }

    fn m2(rows: &[&[&str]]) -> LaurentMatrix2 {
        let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
        parse_matrix(&rows, &["t", "u"]).unwrap()
    }

    fn special() -> Factorization {
        Factorization {
            q1: m1(&[&["0", "1"], &["-1", "t"]]),
            lambda: Coweight::new(vec![1, -1]).unwrap(),
            q2: m1(&[&["1", "0"], &["t", "1"]]),
        }
    }

    #[test]
    fn special_example() {
        let q = build_quad(&special()).unwrap();
        assert_eq!(q.g01_00, m2(&[&["0", "u^-1"], &["-u", "t"]]));
        assert_eq!(q.g10_00, m2(&[&["t^-1", "0"], &["-u", "t"]]));
        assert!(q.g11_01.is_identity());
        assert_eq!(q.g11_10, m2(&[&["1", "t^-1*u^-1"], &["0", "1"]]));
        let g = extract_quad(&q, SplitOptions::default()).unwrap();
        assert_eq!(*g.body(), m1(&[&["1", "t^-1"], &["0", "1"]]));
    }

    #[test]
    fn perturbed_cocycle_fails() {
        let mut q = build_quad(&special()).unwrap();
        q.g11_01 = q.g11_01.add(&m2(&[&["0", "t*u^-1"], &["0", "0"]]));
        let rep = verify_quad(&q);
        assert!(!rep.get("cocycle").unwrap().pass);
        assert!(rep.get("g11_01.cone").unwrap().pass);
    }

    #[test]
    fn torus_and_swap() {
        let q = build_quad(&special()).unwrap();
        assert_eq!(act_torus(&q, &rat(1), &rat(1)).unwrap(), q);
        assert_eq!(act_swap(&act_swap(&q)), q);
        assert!(matches!(
            act_torus(&q, &rat(0), &rat(1)),
            Err(TransitionError::ZeroScalar)
        ));
        let g = extract_quad(&act_torus(&q, &rat(2), &rat(3)).unwrap(), SplitOptions::default()).unwrap();
        assert_eq!(*g.body(), m1(&[&["1", "6*t^-1"], &["0", "1"]]));
        let s = extract_quad(&act_swap(&q), SplitOptions::default()).unwrap();
        assert_eq!(*s.body(), m1(&[&["1", "-1*t^-1"], &["0", "1"]]));
    }

    #[test]
    fn framing_change_conjugates() {
        let gamma = LoopElement::new(m1(&[&["1", "0"], &["t^-1", "1"]])).unwrap();
        let q = build_quad(&factorize(&gamma).unwrap()).unwrap();
        assert!(verify_quad(&q).all_pass());
        let g = qmatrix(&[&[1, 1], &[0, 1]]);
        let acted = act_g(&q, &g).unwrap();
        assert!(verify_quad(&acted).all_pass());
        let e = extract_quad(&acted, SplitOptions::default()).unwrap();
        assert_eq!(e, gamma.conjugate(&g).unwrap());
    }
}
