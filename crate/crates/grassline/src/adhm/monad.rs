use crate::exactalg::{format_qmatrix, QMatrix, Rational};
use crate::report::{Check, CheckReport};

use super::Quadruple;

/// The monad `O(−1)^V → O^{V⊕V⊕W} → O(1)^V`, stored as coefficient matrices of `z0, z1, z2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonadMaps {
    /// `a = Σ z_k a[k]`, shape `(2n + r) × n`.
    pub a: [QMatrix; 3],
    /// `b = Σ z_k b[k]`, shape `n × (2n + r)`.
    pub b: [QMatrix; 3],
}

/// `a = [z0 B1 − z1; z0 B2 − z2; z0 j]`, `b = [−(z0 B2 − z2), z0 B1 − z1, z0 i]`.
pub fn monad_maps(q: &Quadruple) -> MonadMaps {
    let n = q.n();
    let r = q.r();
    let id = QMatrix::identity(n);
    let zn = QMatrix::zeros(n, n);
    let zr = QMatrix::zeros(r, n);
    let a0 = q.b1.vstack(&q.b2).vstack(&q.j);
    let a1 = id.neg().vstack(&zn).vstack(&zr);
    let a2 = zn.vstack(&id.neg()).vstack(&zr);
    let zi = QMatrix::zeros(n, r);
    let b0 = q.b2.neg().hstack(&q.b1).hstack(&q.i);
    let b1 = zn.hstack(&id.neg()).hstack(&zi);
    let b2 = id.hstack(&zn).hstack(&zi);
    MonadMaps {
        a: [a0, a1, a2],
        b: [b0, b1, b2],
    }
}

impl MonadMaps {
    /// `b ∘ a = 0` coefficientwise in the monomials `z_k z_l`.
    pub fn symbolic_check(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        for k in 0..3 {
            for l in k..3 {
                let mut c = self.b[k].mul(&self.a[l]);
                if k != l {
                    c = c.add(&self.b[l].mul(&self.a[k]));
                }
                rep.push(Check::from_bool(format!("ba[z{k}z{l}]"), c.is_zero(), || {
                    format!("{:?}", format_qmatrix(&c))
                }));
            }
        }
        rep
    }

    pub fn at(&self, z: &[Rational; 3]) -> (QMatrix, QMatrix) {
        let eval = |m: &[QMatrix; 3]| m[0].scale(&z[0]).add(&m[1].scale(&z[1])).add(&m[2].scale(&z[2]));
        (eval(&self.a), eval(&self.b))
    }

    /// `a` injective and `b` surjective at the point.
    pub fn fiber_ranks_ok(&self, z: &[Rational; 3]) -> bool {
        let (a, b) = self.at(z);
        a.rank() == a.cols() && b.rank() == b.rows()
    }
}

/// Fixed sample points of `P²`.
pub fn sample_points() -> Vec<[Rational; 3]> {
    use crate::exactalg::rat;
    vec![
        [rat(1), rat(0), rat(0)],
        [rat(0), rat(1), rat(0)],
        [rat(0), rat(0), rat(1)],
        [rat(1), rat(1), rat(1)],
        [rat(2), rat(-1), rat(3)],
    ]
}
