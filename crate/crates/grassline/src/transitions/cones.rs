use num_traits::One;

use crate::exactalg::{format_laurent, LaurentMatrix2, LaurentPoly2};
use crate::report::Check;

pub(crate) type Pred = fn((i64, i64)) -> bool;

fn witness(i: usize, j: usize, m: (i64, i64), c: &crate::exactalg::Rational, vars: [&str; 2]) -> String {
    let term = LaurentPoly2::monomial(c.clone(), m);
    format!("{} at ({i},{j})", format_laurent(&term, &vars))
}

/// Every monomial of every entry satisfies `inside`.
pub(crate) fn cone(name: &str, m: &LaurentMatrix2, inside: Pred, vars: [&str; 2]) -> Check {
    for (i, j, p) in m.entries() {
        if let Some((mono, c)) = p.terms().iter().find(|(mono, _)| !inside(**mono)) {
            return Check::fail(name, witness(i, j, *mono, c, vars));
        }
    }
    Check::pass(name)
}

/// The part supported on `on_slice` equals the identity matrix.
pub(crate) fn slice_identity(name: &str, m: &LaurentMatrix2, on_slice: Pred, vars: [&str; 2]) -> Check {
    let diff = m.filter_monomials(on_slice).sub(&LaurentMatrix2::identity(m.rows()));
    first_difference(name, &diff, vars)
}

/// Passes when `diff` is zero; otherwise reports its first monomial.
pub(crate) fn first_difference(name: &str, diff: &LaurentMatrix2, vars: [&str; 2]) -> Check {
    for (i, j, p) in diff.entries() {
        if let Some((mono, c)) = p.terms().iter().next_back() {
            return Check::fail(name, witness(i, j, *mono, c, vars));
        }
    }
    Check::pass(name)
}

pub(crate) fn det_one(name: &str, m: &LaurentMatrix2, vars: [&str; 2]) -> Check {
    let d = m.det();
    Check::from_bool(name, d.is_one(), || format!("det = {}", format_laurent(&d, &vars)))
}

pub(crate) fn swap(m: &LaurentMatrix2) -> LaurentMatrix2 {
    m.map(|p| p.swap_vars())
}

pub(crate) fn t_nonneg(m: (i64, i64)) -> bool {
    m.0 >= 0
}
pub(crate) fn t_nonpos(m: (i64, i64)) -> bool {
    m.0 <= 0
}
pub(crate) fn u_nonneg(m: (i64, i64)) -> bool {
    m.1 >= 0
}
pub(crate) fn u_nonpos(m: (i64, i64)) -> bool {
    m.1 <= 0
}
pub(crate) fn t_zero(m: (i64, i64)) -> bool {
    m.0 == 0
}
pub(crate) fn u_zero(m: (i64, i64)) -> bool {
    m.1 == 0
}
pub(crate) fn both_nonneg(m: (i64, i64)) -> bool {
    m.0 >= 0 && m.1 >= 0
}
pub(crate) fn both_nonpos(m: (i64, i64)) -> bool {
    m.0 <= 0 && m.1 <= 0
}
pub(crate) fn t_nonneg_u_nonpos(m: (i64, i64)) -> bool {
    m.0 >= 0 && m.1 <= 0
}
pub(crate) fn u_nonneg_t_nonpos(m: (i64, i64)) -> bool {
    m.1 >= 0 && m.0 <= 0
}
pub(crate) fn total_nonpos(m: (i64, i64)) -> bool {
    m.0 + m.1 <= 0
}
pub(crate) fn total_zero(m: (i64, i64)) -> bool {
    m.0 + m.1 == 0
}
pub(crate) fn s2_nonneg_total_nonpos(m: (i64, i64)) -> bool {
    m.1 >= 0 && m.0 + m.1 <= 0
}
pub(crate) fn s1_nonneg_total_nonpos(m: (i64, i64)) -> bool {
    m.0 >= 0 && m.0 + m.1 <= 0
}
