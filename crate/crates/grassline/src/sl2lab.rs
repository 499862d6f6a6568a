//! `SL(2)` checks: the defining equations of the strata `Gr₀^{mα}` and their fixed
//! loci, `sl₂`-triples of Jordan type `μ`, Slodowy slices, and the type-D dimension
//! data for `(m, −m)`.

use num_traits::One;

use crate::adhm::{framing_d, quiver_dim_d, DimVectorD};
use crate::exactalg::{format_qmatrix, rat, LaurentMatrix1, QMatrix};
use crate::report::{Check, CheckReport};

pub use crate::loopgroup::{jordan_type, Partition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Sl2Error {
    #[error("m = {0} is even")]
    EvenM(u64),
    #[error("bracket relation {0} fails")]
    BracketViolation(String),
}

impl Sl2Error {
    pub fn code(&self) -> &'static str {
        match self {
            Sl2Error::EvenM(_) => "EvenM",
            Sl2Error::BracketViolation(_) => "BracketViolation",
        }
    }
}

/// Outcome of [`sl2_membership`].
#[derive(Clone, Debug)]
pub struct Sl2Membership {
    pub report: CheckReport,
    /// `g ∈ Gr₀^{mα}`
    pub in_stratum: bool,
    /// `g ∈ (Gr₀^{mα})^ι`
    pub in_fixed: bool,
    /// `g` in the closure of `Gr₀^{mα}`
    pub in_closure: bool,
    /// `g` in the closure of the fixed locus
    pub in_fixed_closure: bool,
}

/// `g(t⁻¹) ↦ g(−t⁻¹)`.
fn reflect(g: &LaurentMatrix1) -> LaurentMatrix1 {
    g.map(|p| p.map_coeffs(|k, c| if k % 2 == 0 { c.clone() } else { -c.clone() }))
}

/// Tests `g = 1 + x₁t⁻¹ + ⋯ + x_m t^{−m}` against the equations of `Gr₀^{mα}`, its
/// fixed locus and their closures.
pub fn sl2_membership(g: &LaurentMatrix1, m: u64) -> Sl2Membership {
    let mut report = CheckReport::new();
    let size = g.rows() == 2 && g.cols() == 2;
    report.push(Check::from_bool("size", size, || format!("{}x{}", g.rows(), g.cols())));
    if !size {
        return Sl2Membership {
            report,
            in_stratum: false,
            in_fixed: false,
            in_closure: false,
            in_fixed_closure: false,
        };
    }
    let support = g.support();
    let polynomial = support.iter().all(|&k| k <= 0) && g.coefficient(0).is_identity();
    report.push(Check::from_bool("unipotent", polynomial, || {
        format!("{:?}", format_qmatrix(&g.coefficient(0)))
    }));
    let low = support.iter().copied().min().unwrap_or(0);
    report.push(Check::from_bool("degree", -low <= m as i64, || format!("t^{low}")));
    let det = g.det();
    report.push(Check::from_bool("det", det.is_one(), || {
        crate::exactalg::format_laurent(&det, &["t"])
    }));
    let top = m == 0 || !g.coefficient(-(m as i64)).is_zero();
    report.push(Check::from_bool("top", top, || format!("x_{m} = 0")));
    let prod = g.mul(&reflect(g));
    let fixed = prod.is_identity();
    report.push(Check::from_bool("iota_product", fixed, || {
        let witness = prod.sub(&LaurentMatrix1::identity(2));
        let k = witness.support().into_iter().next().unwrap_or(0);
        format!("t^{k}: {:?}", format_qmatrix(&witness.coefficient(k)))
    }));
    let closure = polynomial && -low <= m as i64 && det.is_one();
    Sl2Membership {
        in_stratum: closure && top,
        in_fixed: closure && top && fixed,
        in_closure: closure,
        in_fixed_closure: closure && fixed,
        report,
    }
}

/// An `sl₂`-triple `(e, h, f)` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = −2f`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sl2TripleData {
    pub e: QMatrix,
    pub h: QMatrix,
    pub f: QMatrix,
}

impl Sl2TripleData {
    pub fn new(e: QMatrix, h: QMatrix, f: QMatrix) -> Result<Self, Sl2Error> {
        let t = Sl2TripleData { e, h, f };
        if let Some(c) = t.check().failures().next() {
            return Err(Sl2Error::BracketViolation(c.name.clone()));
        }
        Ok(t)
    }

    pub fn check(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        let (e, h, f) = (&self.e, &self.h, &self.f);
        rep.push(Check::from_bool("[e,f]=h", e.bracket(f) == *h, || "[e,f]-h".into()));
        rep.push(Check::from_bool("[h,e]=2e", h.bracket(e) == e.scale(&rat(2)), || {
            "[h,e]-2e".into()
        }));
        rep.push(Check::from_bool("[h,f]=-2f", h.bracket(f) == f.scale(&rat(-2)), || {
            "[h,f]+2f".into()
        }));
        rep
    }
}

/// Standard triple through the Jordan form of type `μ`: `e` has ones on the superdiagonal,
/// `h = diag(k−1, k−3, …, 1−k)` and `f` has `i(k−i)` on the subdiagonal of each block.
pub fn sl2_triple(mu: &Partition) -> Sl2TripleData {
    let n = mu.size();
    let mut h = QMatrix::zeros(n, n);
    let mut f = QMatrix::zeros(n, n);
    let mut off = 0;
    for &k in mu.parts() {
        for i in 0..k {
            h.set(off + i, off + i, rat(k as i64 - 1 - 2 * i as i64));
        }
        for i in 1..k {
            f.set(off + i, off + i - 1, rat((i * (k - i)) as i64));
        }
        off += k;
    }
    Sl2TripleData::new(mu.jordan_matrix(), h, f).expect("standard triple")
}

/// `x ∈ e + ker(ad f)`.
pub fn slodowy_member(x: &QMatrix, triple: &Sl2TripleData) -> bool {
    triple.f.bracket(&x.sub(&triple.e)).is_zero()
}

/// `xᵀJ + Jx = 0`.
pub fn in_symplectic(x: &QMatrix, j: &QMatrix) -> bool {
    x.transpose().mul(j).add(&j.mul(x)).is_zero()
}

/// Type-D data attached to `(m, −m)` for odd `m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TypeDSl2 {
    pub dims: DimVectorD,
    pub framing: DimVectorD,
    /// `m + 1`
    pub expected_dim: i64,
    pub quiver_dim: i64,
}

/// `((m+1)/2, (m−1)/2, m−1, …, 2, 1)` with framing `(2, 0, …)`.
pub fn type_d_dims_sl2(m: u64) -> Result<TypeDSl2, Sl2Error> {
    if m.is_multiple_of(2) {
        return Err(Sl2Error::EvenM(m));
    }
    let m = m as usize;
    let dims = DimVectorD::new(m.div_ceil(2), (m - 1) / 2, (1..m).rev().collect());
    let framing = framing_d(2);
    Ok(TypeDSl2 {
        quiver_dim: quiver_dim_d(&dims, &framing),
        expected_dim: m as i64 + 1,
        dims,
        framing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_matrix, qmatrix};
    use crate::loopgroup::{exp_embed, iota};

    fn mat(rows: &[&[&str]]) -> LaurentMatrix1 {
        let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
        parse_matrix(&rows, &["t"]).unwrap()
    }

    #[test]
    fn membership_examples() {
        let m = sl2_membership(&mat(&[&["1", "t^-1"], &["0", "1"]]), 1);
        assert!(m.in_fixed && m.report.all_pass());
        let m = sl2_membership(&LaurentMatrix1::identity(2), 0);
        assert!(m.in_fixed);
        let m = sl2_membership(&mat(&[&["1", "t^-2"], &["0", "1"]]), 2);
        assert!(m.in_stratum && !m.in_fixed);
        assert!(!m.report.get("iota_product").unwrap().pass);
        let m = sl2_membership(&mat(&[&["1", "t^-1"], &["0", "1"]]), 2);
        assert!(m.in_fixed_closure && !m.in_stratum);
    }

    #[test]
    fn triples() {
        for n in 1..=5 {
            for mu in Partition::all(n) {
                let t = sl2_triple(&mu);
                assert!(t.check().all_pass());
                assert_eq!(jordan_type(&t.e).unwrap(), mu);
                assert!(slodowy_member(&t.e, &t));
            }
        }
        let t = sl2_triple(&Partition::new(vec![1, 1]).unwrap());
        assert!(t.e.is_zero() && t.h.is_zero() && t.f.is_zero());
        assert!(slodowy_member(&qmatrix(&[&[1, 2], &[3, -1]]), &t));
        let t = sl2_triple(&Partition::new(vec![2]).unwrap());
        assert!(slodowy_member(&t.e.add(&t.f.scale(&rat(5))), &t));
        assert!(!slodowy_member(&t.e.add(&t.h), &t));
        let j = qmatrix(&[&[0, 1], &[-1, 0]]);
        assert!(in_symplectic(&t.e, &j));
        assert!(Sl2TripleData::new(t.e.clone(), t.h.clone(), t.e.clone()).is_err());
    }

    #[test]
    fn regular_nilpotent_lands_in_fixed_locus() {
        let e = Partition::new(vec![2]).unwrap().jordan_matrix();
        for c in [1, -2, 3] {
            let x = qmatrix(&[&[1, c], &[0, 1]]);
            let y = x.mul(&e).mul(&x.inverse().unwrap());
            let g = exp_embed(&y).unwrap();
            assert_eq!(iota(&g), g);
            assert!(sl2_membership(g.body(), 1).in_fixed);
        }
    }

    #[test]
    fn type_d_dims() {
        let d = type_d_dims_sl2(1).unwrap();
        assert_eq!(d.dims.to_string(), "(1, 0)");
        assert_eq!(d.quiver_dim, 2);
        let d = type_d_dims_sl2(3).unwrap();
        assert_eq!(d.dims.to_string(), "(2, 1, 2, 1)");
        assert_eq!(d.quiver_dim, 4);
        for m in [1, 3, 5, 7, 9] {
            let d = type_d_dims_sl2(m).unwrap();
            assert_eq!(d.quiver_dim, d.expected_dim);
        }
        assert_eq!(type_d_dims_sl2(2).unwrap_err().code(), "EvenM");
    }
}
