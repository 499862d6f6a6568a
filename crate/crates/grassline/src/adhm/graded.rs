use std::collections::BTreeMap;

use num_traits::One;

use crate::exactalg::{format_qmatrix, rat, QMatrix, Rational};
use crate::loopgroup::LoopElement;
use crate::report::{Check, CheckReport};

use super::{AdhmError, DimVectorA, DimVectorD, Quadruple};

fn zero_unless(m: Option<&QMatrix>, rows: usize, cols: usize) -> QMatrix {
    m.cloned().unwrap_or_else(|| QMatrix::zeros(rows, cols))
}

fn check_shape(name: &str, m: &QMatrix, rows: usize, cols: usize) -> Result<(), AdhmError> {
    if m.rows() != rows || m.cols() != cols {
        return Err(AdhmError::ShapeMismatch(format!(
            "{name} is {}x{}, expected {rows}x{cols}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// `ℤ`-graded ADHM data: `B1 : V_k → V_{k−1}`, `B2 : V_k → V_{k+1}`, `i : W → V₀`, `j : V₀ → W`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdhmDatumA {
    r: usize,
    dims: DimVectorA,
    b1: BTreeMap<i64, QMatrix>,
    b2: BTreeMap<i64, QMatrix>,
    i_map: QMatrix,
    j_map: QMatrix,
}

impl AdhmDatumA {
    /// Maps are keyed by their source grade. Missing maps are zero.
    pub fn new(
        r: usize,
        dims: DimVectorA,
        b1: BTreeMap<i64, QMatrix>,
        b2: BTreeMap<i64, QMatrix>,
        i_map: QMatrix,
        j_map: QMatrix,
    ) -> Result<Self, AdhmError> {
        for (&k, m) in &b1 {
            check_shape(&format!("B1[{k}]"), m, dims.get(k - 1), dims.get(k))?;
        }
        for (&k, m) in &b2 {
            check_shape(&format!("B2[{k}]"), m, dims.get(k + 1), dims.get(k))?;
        }
        check_shape("i", &i_map, dims.get(0), r)?;
        check_shape("j", &j_map, r, dims.get(0))?;
        let keep = |m: &BTreeMap<i64, QMatrix>| -> BTreeMap<i64, QMatrix> {
            m.iter()
                .filter(|(_, x)| x.rows() > 0 && x.cols() > 0)
                .map(|(k, x)| (*k, x.clone()))
                .collect()
        };
        Ok(AdhmDatumA {
            r,
            b1: keep(&b1),
            b2: keep(&b2),
            dims,
            i_map,
            j_map,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dims(&self) -> &DimVectorA {
        &self.dims
    }

    /// `B1 : V_k → V_{k−1}`.
    pub fn b1(&self, k: i64) -> QMatrix {
        zero_unless(self.b1.get(&k), self.dims.get(k - 1), self.dims.get(k))
    }

    /// `B2 : V_k → V_{k+1}`.
    pub fn b2(&self, k: i64) -> QMatrix {
        zero_unless(self.b2.get(&k), self.dims.get(k + 1), self.dims.get(k))
    }

    pub fn i_map(&self) -> &QMatrix {
        &self.i_map
    }

    pub fn j_map(&self) -> &QMatrix {
        &self.j_map
    }

    fn grades(&self) -> Vec<i64> {
        self.dims.entries().keys().copied().collect()
    }

    /// Offset of `V_k` inside `V = ⊕ V_k`, grades ascending.
    fn offsets(&self) -> BTreeMap<i64, usize> {
        let mut off = BTreeMap::new();
        let mut acc = 0;
        for (&k, &d) in self.dims.entries() {
            off.insert(k, acc);
            acc += d;
        }
        off
    }

    /// Component of the moment map on `V_k`.
    pub fn component(&self, k: i64) -> QMatrix {
        let mut m = self.b1(k + 1).mul(&self.b2(k)).sub(&self.b2(k - 1).mul(&self.b1(k)));
        if k == 0 {
            m = m.add(&self.i_map.mul(&self.j_map));
        }
        m
    }

    /// One check per grade carrying a nonzero space.
    pub fn validate(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        for k in self.grades() {
            let m = self.component(k);
            rep.push(Check::from_bool(format!("adhm[{k}]"), m.is_zero(), || {
                format!("{:?}", format_qmatrix(&m))
            }));
        }
        rep
    }

    /// Forgets the grading; the basis lists grades in increasing order.
    pub fn ungraded(&self) -> Quadruple {
        let n = self.dims.total();
        let r = self.r;
        let off = self.offsets();
        let mut b1 = QMatrix::zeros(n, n);
        let mut b2 = QMatrix::zeros(n, n);
        for (&k, m) in &self.b1 {
            b1.set_block(off[&(k - 1)], off[&k], m);
        }
        for (&k, m) in &self.b2 {
            b2.set_block(off[&(k + 1)], off[&k], m);
        }
        let mut i = QMatrix::zeros(n, r);
        let mut j = QMatrix::zeros(r, n);
        if let Some(&o) = off.get(&0) {
            i.set_block(o, 0, &self.i_map);
            j.set_block(0, o, &self.j_map);
        }
        Quadruple { b1, b2, i, j }
    }

    pub fn stability(&self) -> (bool, bool) {
        self.ungraded().stability()
    }

    fn require_good(&self) -> Result<(), AdhmError> {
        if let Some(c) = self.validate().failures().next() {
            return Err(AdhmError::InvalidDatum(c.name.clone()));
        }
        Ok(())
    }

    /// Regraded data `(−B2, B1, i, j)` on `V†_k = V_{−k}`.
    pub fn dagger(&self) -> Result<AdhmDatumA, AdhmError> {
        self.require_good()?;
        let b1 = self.b2.iter().map(|(&k, m)| (-k, m.neg())).collect();
        let b2 = self.b1.iter().map(|(&k, m)| (-k, m.clone())).collect();
        AdhmDatumA::new(
            self.r,
            self.dims.flipped(),
            b1,
            b2,
            self.i_map.clone(),
            self.j_map.clone(),
        )
    }

    /// `(−B1, −B2, i, j)`.
    pub fn negate_b(&self) -> AdhmDatumA {
        let neg = |m: &BTreeMap<i64, QMatrix>| m.iter().map(|(&k, x)| (k, x.neg())).collect();
        AdhmDatumA {
            r: self.r,
            dims: self.dims.clone(),
            b1: neg(&self.b1),
            b2: neg(&self.b2),
            i_map: self.i_map.clone(),
            j_map: self.j_map.clone(),
        }
    }

    /// Acts by graded base change `g_k ∈ GL(V_k)`; missing grades use the identity.
    pub fn base_change(&self, g: &BTreeMap<i64, QMatrix>) -> Result<AdhmDatumA, AdhmError> {
        let get = |k: i64| {
            g.get(&k)
                .cloned()
                .unwrap_or_else(|| QMatrix::identity(self.dims.get(k)))
        };
        let mut inv = BTreeMap::new();
        for k in self.grades() {
            let gk = get(k);
            check_shape(&format!("g[{k}]"), &gk, self.dims.get(k), self.dims.get(k))?;
            inv.insert(k, gk.inverse().map_err(|_| AdhmError::SingularMatrix)?);
        }
        let b1 = self
            .b1
            .iter()
            .map(|(&k, m)| (k, get(k - 1).mul(m).mul(&inv[&k])))
            .collect();
        let b2 = self
            .b2
            .iter()
            .map(|(&k, m)| (k, get(k + 1).mul(m).mul(&inv[&k])))
            .collect();
        let (i, j) = match inv.get(&0) {
            Some(g0i) => (get(0).mul(&self.i_map), self.j_map.mul(g0i)),
            None => (self.i_map.clone(), self.j_map.clone()),
        };
        AdhmDatumA::new(self.r, self.dims.clone(), b1, b2, i, j)
    }
}

/// `1 + Σ_k (j B2^k B1^k i) t^{−k−1}`.
pub fn theta_psi_a(d: &AdhmDatumA) -> Result<LoopElement, AdhmError> {
    d.require_good()?;
    let q = d.ungraded();
    if q.stability() != (true, true) {
        return Err(AdhmError::NotStableCostable);
    }
    LoopElement::from_coefficients(d.r, &q.theta_coefficients()).map_err(|e| AdhmError::Internal(e.to_string()))
}

/// `N`-equivariant data in folded form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdhmDatumD {
    r: usize,
    dims: DimVectorD,
    pub(crate) b1_plus: QMatrix,
    pub(crate) b1_minus: QMatrix,
    pub(crate) b2_plus: QMatrix,
    pub(crate) b2_minus: QMatrix,
    b1: BTreeMap<usize, QMatrix>,
    b2: BTreeMap<usize, QMatrix>,
    i_map: QMatrix,
    j_map: QMatrix,
}

/// The folded maps of an [`AdhmDatumD`], in the order the constructor expects.
#[derive(Clone, Debug, Default)]
pub struct FoldedMaps {
    /// `V₁ → V₀₊`
    pub b1_plus: Option<QMatrix>,
    /// `V₁ → V₀₋`
    pub b1_minus: Option<QMatrix>,
    /// `V₀₊ → V₁`
    pub b2_plus: Option<QMatrix>,
    /// `V₀₋ → V₁`
    pub b2_minus: Option<QMatrix>,
    /// `k ↦ (V_{k+1} → V_k)` for `k ≥ 1`
    pub b1: BTreeMap<usize, QMatrix>,
    /// `k ↦ (V_k → V_{k+1})` for `k ≥ 1`
    pub b2: BTreeMap<usize, QMatrix>,
    /// `W → V₀₊`
    pub i_map: Option<QMatrix>,
    /// `V₀₊ → W`
    pub j_map: Option<QMatrix>,
}

impl AdhmDatumD {
    pub fn new(r: usize, dims: DimVectorD, maps: FoldedMaps) -> Result<Self, AdhmError> {
        let (p, m, v1) = (dims.v0_plus, dims.v0_minus, dims.get(1));
        let take = |name: &str, x: Option<QMatrix>, rows: usize, cols: usize| -> Result<QMatrix, AdhmError> {
            let x = x.unwrap_or_else(|| QMatrix::zeros(rows, cols));
            check_shape(name, &x, rows, cols)?;
            Ok(x)
        };
        for (&k, x) in &maps.b1 {
            if k == 0 {
                return Err(AdhmError::ShapeMismatch("B1 index starts at 1".into()));
            }
            check_shape(&format!("B1[{k}]"), x, dims.get(k), dims.get(k + 1))?;
        }
        for (&k, x) in &maps.b2 {
            if k == 0 {
                return Err(AdhmError::ShapeMismatch("B2 index starts at 1".into()));
            }
            check_shape(&format!("B2[{k}]"), x, dims.get(k + 1), dims.get(k))?;
        }
        Ok(AdhmDatumD {
            r,
            b1_plus: take("B1+", maps.b1_plus, p, v1)?,
            b1_minus: take("B1-", maps.b1_minus, m, v1)?,
            b2_plus: take("B2+", maps.b2_plus, v1, p)?,
            b2_minus: take("B2-", maps.b2_minus, v1, m)?,
            b1: maps.b1,
            b2: maps.b2,
            i_map: take("i", maps.i_map, p, r)?,
            j_map: take("j", maps.j_map, r, p)?,
            dims,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dims(&self) -> &DimVectorD {
        &self.dims
    }

    /// `B1 : V_{k+1} → V_k`, `k ≥ 1`.
    pub fn b1(&self, k: usize) -> QMatrix {
        zero_unless(self.b1.get(&k), self.dims.get(k), self.dims.get(k + 1))
    }

    /// `B2 : V_k → V_{k+1}`, `k ≥ 1`.
    pub fn b2(&self, k: usize) -> QMatrix {
        zero_unless(self.b2.get(&k), self.dims.get(k + 1), self.dims.get(k))
    }

    pub fn i_map(&self) -> &QMatrix {
        &self.i_map
    }

    pub fn j_map(&self) -> &QMatrix {
        &self.j_map
    }

    pub fn maps(&self) -> FoldedMaps {
        FoldedMaps {
            b1_plus: Some(self.b1_plus.clone()),
            b1_minus: Some(self.b1_minus.clone()),
            b2_plus: Some(self.b2_plus.clone()),
            b2_minus: Some(self.b2_minus.clone()),
            b1: self.b1.clone(),
            b2: self.b2.clone(),
            i_map: Some(self.i_map.clone()),
            j_map: Some(self.j_map.clone()),
        }
    }

    pub fn validate(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        let mut push = |name: String, m: QMatrix| {
            rep.push(Check::from_bool(name, m.is_zero(), || {
                format!("{:?}", format_qmatrix(&m))
            }));
        };
        let e0p = self
            .b1_plus
            .mul(&self.b2_plus)
            .scale(&rat(2))
            .add(&self.i_map.mul(&self.j_map));
        push("adhm[0+]".into(), e0p);
        push("adhm[0-]".into(), self.b1_minus.mul(&self.b2_minus));
        if self.dims.top() >= 1 {
            let e1 = self
                .b1(1)
                .mul(&self.b2(1))
                .sub(&self.b2_plus.mul(&self.b1_plus))
                .sub(&self.b2_minus.mul(&self.b1_minus));
            push("adhm[1]".into(), e1);
        }
        for k in 2..=self.dims.top() {
            let ek = self.b1(k).mul(&self.b2(k)).sub(&self.b2(k - 1).mul(&self.b1(k - 1)));
            push(format!("adhm[{k}]"), ek);
        }
        rep
    }

    /// Rebuilds the full `ℤ`-graded datum. `V₀ = V₀₊ ⊕ V₀₋` in that order.
    pub fn expand(&self) -> AdhmDatumA {
        let dims = self.dims.unfolded();
        let m = self.dims.v0_minus;
        let mut b1 = BTreeMap::new();
        let mut b2 = BTreeMap::new();
        // nonnegative side
        b2.insert(0, self.b2_plus.hstack(&self.b2_minus));
        b1.insert(1, self.b1_plus.vstack(&self.b1_minus));
        for k in 1..=self.dims.top() {
            b1.insert(k as i64 + 1, self.b1(k));
            b2.insert(k as i64, self.b2(k));
        }
        // negative side, through ρ
        b1.insert(0, self.b2_plus.neg().hstack(&self.b2_minus));
        b2.insert(-1, self.b1_plus.vstack(&self.b1_minus.neg()));
        for k in 1..=self.dims.top() {
            b1.insert(-(k as i64), self.b2(k).neg());
            b2.insert(-(k as i64) - 1, self.b1(k));
        }
        let i = self.i_map.vstack(&QMatrix::zeros(m, self.r));
        let j = self.j_map.hstack(&QMatrix::zeros(self.r, m));
        AdhmDatumA::new(self.r, dims, b1, b2, i, j).expect("expanded shapes are consistent")
    }

    pub fn stability(&self) -> (bool, bool) {
        self.expand().stability()
    }
}

/// `1 + (j i) t⁻¹ + Σ_{k≥0} (−1)^{k+1} (j B1₊ B1^k B2^k B2₊ i) t^{−k−2}`.
pub fn theta_psi_d(d: &AdhmDatumD) -> Result<LoopElement, AdhmError> {
    if let Some(c) = d.validate().failures().next() {
        return Err(AdhmError::InvalidDatum(c.name.clone()));
    }
    if d.stability() != (true, true) {
        return Err(AdhmError::NotStableCostable);
    }
    let mut coeffs = vec![d.j_map.mul(&d.i_map)];
    let mut up = d.b2_plus.mul(&d.i_map);
    let mut sign = -Rational::one();
    for k in 0..=d.dims.top() {
        if up.is_zero() {
            break;
        }
        let mut down = up.clone();
        for level in (1..=k).rev() {
            down = d.b1(level).mul(&down);
        }
        coeffs.push(d.j_map.mul(&d.b1_plus).mul(&down).scale(&sign));
        up = d.b2(k + 1).mul(&up);
        sign = -sign;
    }
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    LoopElement::from_coefficients(d.r, &coeffs).map_err(|e| AdhmError::Internal(e.to_string()))
}
