use num_traits::One;

use crate::exactalg::{rational, LaurentMatrix1, QMatrix, Rational};

use super::LoopError;

/// Element of `SL(r)[t⁻¹]₁`: polynomial in `t⁻¹`, constant term the identity, determinant 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LoopElement {
    body: LaurentMatrix1,
}

impl LoopElement {
    pub fn new(body: LaurentMatrix1) -> Result<Self, LoopError> {
        if !body.is_square() || body.rows() == 0 {
            return Err(LoopError::NotLoopElement("matrix must be square and nonempty".into()));
        }
        if body.support().iter().any(|&k| k > 0) {
            return Err(LoopError::NotLoopElement("positive powers of t occur".into()));
        }
        if !body.coefficient(0).is_identity() {
            return Err(LoopError::NotLoopElement("constant term is not the identity".into()));
        }
        if !body.det().is_one() {
            return Err(LoopError::NotLoopElement("determinant is not 1".into()));
        }
        Ok(LoopElement { body })
    }

    pub fn identity(r: usize) -> Self {
        LoopElement {
            body: LaurentMatrix1::identity(r),
        }
    }

    /// `Σ_k x_k t^{-k}` from `[x_1, x_2, …]`, constant term the identity.
    pub fn from_coefficients(r: usize, xs: &[QMatrix]) -> Result<Self, LoopError> {
        let id = QMatrix::identity(r);
        let parts = std::iter::once((0i64, &id)).chain(xs.iter().enumerate().map(|(k, x)| (-(k as i64) - 1, x)));
        Self::new(LaurentMatrix1::from_coefficients(r, r, parts))
    }

    pub fn body(&self) -> &LaurentMatrix1 {
        &self.body
    }

    pub fn rank(&self) -> usize {
        self.body.rows()
    }

    /// Coefficient of `t^{-k}`.
    pub fn coefficient(&self, k: usize) -> QMatrix {
        self.body.coefficient(-(k as i64))
    }

    /// Largest `k` with a nonzero `t^{-k}` coefficient.
    pub fn degree(&self) -> usize {
        self.body.support().iter().map(|&k| (-k) as usize).max().unwrap_or(0)
    }

    pub fn is_identity(&self) -> bool {
        self.body.is_identity()
    }

    pub fn mul(&self, other: &LoopElement) -> LoopElement {
        LoopElement {
            body: self.body.mul(&other.body),
        }
    }

    pub fn inverse(&self) -> LoopElement {
        LoopElement {
            body: self.body.adjugate(),
        }
    }

    /// `γ(c·t⁻¹)`: the `t^{-k}` coefficient is multiplied by `c^k`. Needs `c ≠ 0`
    /// only to stay invertible in the obvious way; `c = 0` gives the identity.
    pub fn rescale(&self, c: &Rational) -> LoopElement {
        LoopElement {
            body: self.body.map(|p| p.map_coeffs(|k, a| a * rational::pow(c, -k))),
        }
    }

    /// `g γ g⁻¹` for an invertible constant `g`.
    pub fn conjugate(&self, g: &QMatrix) -> Result<LoopElement, LoopError> {
        let inv = g.inverse().map_err(LoopError::Alg)?;
        let gl = LaurentMatrix1::constant(g);
        let il = LaurentMatrix1::constant(&inv);
        Ok(LoopElement {
            body: gl.mul(&self.body).mul(&il),
        })
    }
}

/// `ι(g) = g(−t⁻¹)⁻¹`.
pub fn iota(g: &LoopElement) -> LoopElement {
    let flipped = g
        .body
        .map(|p| p.map_coeffs(|k, a| if k % 2 == 0 { a.clone() } else { -a }));
    LoopElement {
        body: flipped.adjugate(),
    }
}

/// The coefficient of `t⁻¹`.
pub fn pi(g: &LoopElement) -> QMatrix {
    g.coefficient(1)
}

/// `exp(x t⁻¹)` for nilpotent `x`.
pub fn exp_embed(x: &QMatrix) -> Result<LoopElement, LoopError> {
    if !x.is_square() || x.rows() == 0 || !x.is_nilpotent() {
        return Err(LoopError::NotNilpotent);
    }
    let r = x.rows();
    let mut body = LaurentMatrix1::identity(r);
    let mut power = QMatrix::identity(r);
    for k in 1..r as u32 {
        power = power.mul(x);
        if power.is_zero() {
            break;
        }
        let c = rational::factorial(k).recip();
        let term = LaurentMatrix1::from_coefficients(r, r, [(-(k as i64), &power.scale(&c))]);
        body = body.add(&term);
    }
    Ok(LoopElement { body })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{frac, parse_matrix, qmatrix, rat};

    fn loop_el(rows: &[&[&str]]) -> LoopElement {
        let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
        LoopElement::new(parse_matrix(&rows, &["t"]).unwrap()).unwrap()
    }

    #[test]
    fn rejects_non_elements() {
        let rows = vec![vec!["1".to_string(), "t".to_string()], vec!["0".into(), "1".into()]];
        assert!(LoopElement::new(parse_matrix(&rows, &["t"]).unwrap()).is_err());
        let rows = vec![vec!["2".to_string(), "0".to_string()], vec!["0".into(), "1/2".into()]];
        assert!(LoopElement::new(parse_matrix(&rows, &["t"]).unwrap()).is_err());
    }

    #[test]
    fn iota_examples() {
        assert!(iota(&LoopElement::identity(3)).is_identity());
        let g = loop_el(&[&["1", "t^-1"], &["0", "1"]]);
        assert_eq!(iota(&g), g);
        let h = loop_el(&[&["1", "t^-2"], &["0", "1"]]);
        assert_eq!(iota(&h), loop_el(&[&["1", "-1*t^-2"], &["0", "1"]]));
    }

    #[test]
    fn projection() {
        assert!(pi(&LoopElement::identity(2)).is_zero());
        let g = loop_el(&[&["1", "t^-1"], &["0", "1"]]);
        assert_eq!(pi(&g), qmatrix(&[&[0, 1], &[0, 0]]));
    }

    #[test]
    fn exponential() {
        assert!(exp_embed(&QMatrix::zeros(2, 2)).unwrap().is_identity());
        let e = qmatrix(&[&[0, 1], &[0, 0]]);
        assert_eq!(exp_embed(&e).unwrap(), loop_el(&[&["1", "t^-1"], &["0", "1"]]));
        let x = qmatrix(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let g = exp_embed(&x).unwrap();
        assert_eq!(g.coefficient(2), x.mul(&x).scale(&frac(1, 2)));
        assert_eq!(g.degree(), 2);
        assert!(matches!(
            exp_embed(&qmatrix(&[&[1, 0], &[0, -1]])),
            Err(LoopError::NotNilpotent)
        ));
    }

    #[test]
    fn rescaling() {
        let g = loop_el(&[&["1", "t^-1"], &["0", "1"]]);
        assert_eq!(g.rescale(&rat(3)), loop_el(&[&["1", "3*t^-1"], &["0", "1"]]));
    }
}
