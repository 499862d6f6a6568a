use crate::exactalg::{LaurentMatrix1, LaurentMatrix2, Matrix};

use super::TransitionError;

/// Limits for [`birkhoff_split_u`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SplitOptions {
    /// Overrides the default bound on the number of `u⁻¹`-orders.
    pub max_order: Option<usize>,
}

fn slice_u(g: &LaurentMatrix2, q: i64) -> LaurentMatrix1 {
    g.map(|p| {
        crate::exactalg::LaurentPoly1::from_terms(
            p.terms()
                .iter()
                .filter(|((_, b), _)| *b == q)
                .map(|((a, _), c)| (*a, c.clone())),
        )
    })
}

fn assemble(parts: &[LaurentMatrix1], r: usize) -> LaurentMatrix2 {
    let mut out = LaurentMatrix2::identity(r);
    for (k, part) in parts.iter().enumerate().skip(1) {
        let q = -(k as i64);
        out = out.add(&part.map_monomials(move |p| (p, q)));
    }
    out
}

fn split_entries(m: &LaurentMatrix1) -> (LaurentMatrix1, LaurentMatrix1) {
    (m.filter_monomials(|k| k < 0), m.filter_monomials(|k| k >= 0))
}

/// Factors `g = g′ · g″` where, off the identity, `g′` has negative `t`-exponents and
/// `g″` nonnegative ones, both polynomial in `u⁻¹` with identity `u⁰`-slice.
///
/// Solved order by order in `u⁻¹`.
pub fn birkhoff_split_u(
    g: &LaurentMatrix2,
    opts: SplitOptions,
) -> Result<(LaurentMatrix2, LaurentMatrix2), TransitionError> {
    if !g.is_square() {
        return Err(TransitionError::Precondition("matrix must be square".into()));
    }
    let r = g.rows();
    let support = g.support();
    if support.iter().any(|&(_, q)| q > 0) {
        return Err(TransitionError::Precondition("positive powers of u occur".into()));
    }
    if !slice_u(g, 0).is_identity() {
        return Err(TransitionError::Precondition("u^0 slice is not the identity".into()));
    }
    let deg_u = support.iter().map(|&(_, q)| (-q) as usize).max().unwrap_or(0);
    if deg_u == 0 {
        return Ok((LaurentMatrix2::identity(r), LaurentMatrix2::identity(r)));
    }
    let t_min = support.iter().map(|m| m.0).min().unwrap_or(0);
    let t_max = support.iter().map(|m| m.0).max().unwrap_or(0);
    let bound = opts
        .max_order
        .unwrap_or(deg_u * ((t_max - t_min) as usize + 1))
        .max(deg_u);
    let zero = Matrix::zeros(r, r);
    let mut a: Vec<LaurentMatrix1> = vec![zero.clone()];
    let mut b: Vec<LaurentMatrix1> = vec![zero.clone()];
    for k in 1..=bound {
        let mut resid = slice_u(g, -(k as i64));
        for i in 1..k {
            let (ai, bj) = (&a[i], &b[k - i]);
            if !ai.is_zero() && !bj.is_zero() {
                resid = resid.sub(&ai.mul(bj));
            }
        }
        let (ak, bk) = split_entries(&resid);
        a.push(ak);
        b.push(bk);
        if k >= deg_u {
            let (gp, gs) = (assemble(&a, r), assemble(&b, r));
            if gp.mul(&gs) == *g {
                return Ok((gp, gs));
            }
        }
    }
    Err(TransitionError::NonTerminatingFactorization { bound })
}
