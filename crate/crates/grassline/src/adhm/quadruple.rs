use num_traits::Zero;

use crate::exactalg::{format_qmatrix, QMatrix};
use crate::report::{Check, CheckReport};

use super::AdhmError;

/// Ungraded ADHM data `(B1, B2, i, j)` with `B1, B2 : V → V`, `i : W → V`, `j : V → W`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quadruple {
    pub b1: QMatrix,
    pub b2: QMatrix,
    pub i: QMatrix,
    pub j: QMatrix,
}

impl Quadruple {
    pub fn new(b1: QMatrix, b2: QMatrix, i: QMatrix, j: QMatrix) -> Result<Self, AdhmError> {
        let n = b1.rows();
        let r = i.cols();
        let ok = b1.cols() == n && b2.rows() == n && b2.cols() == n && i.rows() == n && j.rows() == r && j.cols() == n;
        if !ok {
            return Err(AdhmError::ShapeMismatch("quadruple".into()));
        }
        Ok(Quadruple { b1, b2, i, j })
    }

    pub fn n(&self) -> usize {
        self.b1.rows()
    }

    pub fn r(&self) -> usize {
        self.i.cols()
    }

    /// `[B1, B2] + i j`.
    pub fn moment(&self) -> QMatrix {
        self.b1.bracket(&self.b2).add(&self.i.mul(&self.j))
    }

    pub fn validate(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        let m = self.moment();
        rep.push(Check::from_bool("adhm", m.is_zero(), || {
            format!("{:?}", format_qmatrix(&m))
        }));
        rep
    }

    /// `(stable, costable)`.
    pub fn stability(&self) -> (bool, bool) {
        (self.is_stable(), self.is_costable())
    }

    /// The smallest `B`-invariant subspace containing `im i` is all of `V`.
    pub fn is_costable(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut span = self.i.column_basis();
        for _ in 0..=n {
            let grown = span
                .hstack(&self.b1.mul(&span))
                .hstack(&self.b2.mul(&span))
                .column_basis();
            if grown.cols() == span.cols() {
                break;
            }
            span = grown;
        }
        span.cols() == n
    }

    /// No nonzero `B`-invariant subspace lies in `ker j`.
    pub fn is_stable(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        // ker(ann) is the current subspace; refine until it stops shrinking.
        let mut ann = self.j.row_basis();
        for _ in 0..=n {
            let grown = ann.vstack(&ann.mul(&self.b1)).vstack(&ann.mul(&self.b2)).row_basis();
            if grown.rows() == ann.rows() {
                break;
            }
            ann = grown;
        }
        ann.rows() == n
    }

    /// `(αB1 + γB2, βB1 + δB2, det(M)·i, j)` for `M = [[α, β], [γ, δ]]`.
    pub fn act_gl2(&self, m: &QMatrix) -> Result<Quadruple, AdhmError> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(AdhmError::ShapeMismatch("GL(2) element must be 2x2".into()));
        }
        let det = m.det_q();
        if det.is_zero() {
            return Err(AdhmError::SingularMatrix);
        }
        let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
        Ok(Quadruple {
            b1: self.b1.scale(a).add(&self.b2.scale(c)),
            b2: self.b1.scale(b).add(&self.b2.scale(d)),
            i: self.i.scale(&det),
            j: self.j.clone(),
        })
    }

    /// `(g B1 g⁻¹, g B2 g⁻¹, g i, j g⁻¹)`.
    pub fn base_change(&self, g: &QMatrix) -> Result<Quadruple, AdhmError> {
        let gi = g.inverse().map_err(|_| AdhmError::SingularMatrix)?;
        Ok(Quadruple {
            b1: g.mul(&self.b1).mul(&gi),
            b2: g.mul(&self.b2).mul(&gi),
            i: g.mul(&self.i),
            j: self.j.mul(&gi),
        })
    }

    /// Coefficients `j B2^k B1^k i` for `k = 0, 1, …` until `B1^k i` vanishes.
    /// Requires `B1` nilpotent.
    pub fn theta_coefficients(&self) -> Vec<QMatrix> {
        let mut out = Vec::new();
        let mut down = self.i.clone();
        for k in 0..=self.n() {
            if down.is_zero() {
                break;
            }
            let up = self.b2.pow(k as u32).mul(&down);
            out.push(self.j.mul(&up));
            down = self.b1.mul(&down);
        }
        while out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        out
    }
}
