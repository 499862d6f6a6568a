use std::collections::BTreeMap;
use std::fmt;

use crate::loopgroup::Coweight;

use super::AdhmError;

/// Dimension vector on the `A∞` graph: vertex `i ∈ ℤ` ↦ `v_i`. Zero entries are not stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DimVectorA {
    v: BTreeMap<i64, usize>,
}

impl DimVectorA {
    pub fn new(v: BTreeMap<i64, usize>) -> Self {
        DimVectorA {
            v: v.into_iter().filter(|&(_, d)| d > 0).collect(),
        }
    }

    pub fn get(&self, i: i64) -> usize {
        self.v.get(&i).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<i64, usize> {
        &self.v
    }

    pub fn total(&self) -> usize {
        self.v.values().sum()
    }

    /// Lowest and highest vertex with nonzero dimension.
    pub fn range(&self) -> Option<(i64, i64)> {
        Some((*self.v.keys().next()?, *self.v.keys().next_back()?))
    }

    /// `v†_i = v_{−i}`.
    pub fn flipped(&self) -> Self {
        DimVectorA {
            v: self.v.iter().map(|(&i, &d)| (-i, d)).collect(),
        }
    }
}

impl fmt::Display for DimVectorA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.v.iter().map(|(i, d)| format!("{i}:{d}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Dimension vector on the `D∞` graph with vertices `0+`, `0−`, `1`, `2`, ….
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DimVectorD {
    pub v0_plus: usize,
    pub v0_minus: usize,
    /// `v[k-1]` is the dimension at vertex `k ≥ 1`; no trailing zeros.
    v: Vec<usize>,
}

impl DimVectorD {
    pub fn new(v0_plus: usize, v0_minus: usize, mut v: Vec<usize>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        DimVectorD { v0_plus, v0_minus, v }
    }

    /// Dimension at vertex `k ≥ 1`.
    pub fn get(&self, k: usize) -> usize {
        assert!(k >= 1, "positive vertices start at 1");
        self.v.get(k - 1).copied().unwrap_or(0)
    }

    pub fn positive(&self) -> &[usize] {
        &self.v
    }

    pub fn top(&self) -> usize {
        self.v.len()
    }

    pub fn total(&self) -> usize {
        self.v0_plus + self.v0_minus + self.v.iter().sum::<usize>()
    }

    /// Type-A dimension vector of the unfolded representation.
    pub fn unfolded(&self) -> DimVectorA {
        let mut m = BTreeMap::new();
        m.insert(0, self.v0_plus + self.v0_minus);
        for (k, &d) in self.v.iter().enumerate() {
            let k = k as i64 + 1;
            m.insert(k, d);
            m.insert(-k, d);
        }
        DimVectorA::new(m)
    }
}

impl fmt::Display for DimVectorD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}", self.v0_plus, self.v0_minus)?;
        for d in &self.v {
            write!(f, ", {d}")?;
        }
        write!(f, ")")
    }
}

/// `v_i = Σ_s max(λ_s − i, 0)` for `i ≥ 0` and `Σ_s max(i − λ_s, 0)` for `i < 0`.
pub fn v_from_lambda(lambda: &Coweight) -> DimVectorA {
    let lam = lambda.entries();
    let hi = lam.iter().copied().max().unwrap_or(0);
    let lo = lam.iter().copied().min().unwrap_or(0);
    let mut v = BTreeMap::new();
    for i in lo..=hi {
        let d: i64 = if i >= 0 {
            lam.iter().map(|&l| (l - i).max(0)).sum()
        } else {
            lam.iter().map(|&l| (i - l).max(0)).sum()
        };
        v.insert(i, d as usize);
    }
    DimVectorA::new(v)
}

/// `r δ₀ − C v` on `A∞`, as signed integers over the support and its neighbours.
fn tau_a_signed(v: &DimVectorA, r: usize) -> BTreeMap<i64, i64> {
    let mut out = BTreeMap::new();
    let (lo, hi) = v.range().unwrap_or((0, 0));
    for i in (lo - 1).min(0)..=(hi + 1).max(0) {
        let m = if i == 0 { r as i64 } else { 0 } - 2 * v.get(i) as i64 + v.get(i - 1) as i64 + v.get(i + 1) as i64;
        out.insert(i, m);
    }
    out
}

/// Multiplicities `r δ₀ − C v` of the framing on `A∞`; only nonzero entries are kept.
pub fn tau_multiplicities_a(v: &DimVectorA, r: usize) -> Result<BTreeMap<i64, usize>, AdhmError> {
    let mut out = BTreeMap::new();
    for (i, m) in tau_a_signed(v, r) {
        if m < 0 {
            return Err(AdhmError::Infeasible(i.to_string()));
        }
        if m > 0 {
            out.insert(i, m as usize);
        }
    }
    Ok(out)
}

/// Inverse of [`v_from_lambda`] on its image.
pub fn lambda_from_v(v: &DimVectorA, r: usize) -> Result<Coweight, AdhmError> {
    let mut mult = BTreeMap::new();
    for (i, m) in tau_a_signed(v, r) {
        if m < 0 {
            return Err(AdhmError::NegativeMultiplicity(i.to_string()));
        }
        if m > 0 {
            mult.insert(i, m as usize);
        }
    }
    let count: usize = mult.values().sum();
    let weight: i64 = mult.iter().map(|(&i, &m)| i * m as i64).sum();
    if weight != 0 {
        return Err(AdhmError::NonzeroTotalWeight(weight));
    }
    if count != r {
        return Err(AdhmError::NegativeMultiplicity(format!(
            "multiplicities sum to {count}, not {r}"
        )));
    }
    Coweight::from_multiplicities(&mult).map_err(|e| AdhmError::Internal(e.to_string()))
}

pub fn chern_number(v: &DimVectorA) -> usize {
    v.total()
}

/// Multiplicities `r δ₀ − C v` on `D∞`; edges `0±–1` and `k–(k+1)`.
pub fn tau_multiplicities_d(v: &DimVectorD, r: usize) -> Result<DimVectorD, AdhmError> {
    let g = |k: usize| v.get(k) as i64;
    let m0p = r as i64 - 2 * v.v0_plus as i64 + g(1);
    let m0m = -2 * (v.v0_minus as i64) + g(1);
    if m0p < 0 {
        return Err(AdhmError::Infeasible("0+".into()));
    }
    if m0m < 0 {
        return Err(AdhmError::Infeasible("0-".into()));
    }
    let mut rest = Vec::new();
    for k in 1..=v.top() + 1 {
        let below = if k == 1 {
            (v.v0_plus + v.v0_minus) as i64
        } else {
            g(k - 1)
        };
        let m = -2 * g(k) + below + g(k + 1);
        if m < 0 {
            return Err(AdhmError::Infeasible(k.to_string()));
        }
        rest.push(m as usize);
    }
    Ok(DimVectorD::new(m0p as usize, m0m as usize, rest))
}

/// `2⟨v, w⟩ − vᵀ C v` on `A∞`.
pub fn quiver_dim_a(v: &DimVectorA, w: &BTreeMap<i64, usize>) -> i64 {
    let vw: i64 = v
        .entries()
        .iter()
        .map(|(i, &d)| d as i64 * *w.get(i).unwrap_or(&0) as i64)
        .sum();
    let vcv: i64 = v
        .entries()
        .iter()
        .map(|(&i, &d)| {
            let cv = 2 * d as i64 - v.get(i - 1) as i64 - v.get(i + 1) as i64;
            d as i64 * cv
        })
        .sum();
    2 * vw - vcv
}

/// `2⟨v, w⟩ − vᵀ C v` on `D∞`.
pub fn quiver_dim_d(v: &DimVectorD, w: &DimVectorD) -> i64 {
    let n = v.top().max(w.top());
    let vw = (v.v0_plus * w.v0_plus + v.v0_minus * w.v0_minus) as i64
        + (1..=n).map(|k| (v.get(k) * w.get(k)) as i64).sum::<i64>();
    let g = |k: usize| v.get(k) as i64;
    let (p, m) = (v.v0_plus as i64, v.v0_minus as i64);
    let mut vcv = p * (2 * p - g(1)) + m * (2 * m - g(1));
    for k in 1..=n {
        let below = if k == 1 { p + m } else { g(k - 1) };
        vcv += g(k) * (2 * g(k) - below - g(k + 1));
    }
    2 * vw - vcv
}

/// Stratum label with a choice of `(m₀₊, m₀₋)` splitting the zero weight.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct XiClass {
    pub lambda: Coweight,
    pub m_plus: usize,
    pub m_minus: usize,
}

impl XiClass {
    pub fn new(lambda: Coweight, m_plus: usize, m_minus: usize) -> Result<Self, AdhmError> {
        let xi = XiClass {
            lambda,
            m_plus,
            m_minus,
        };
        if !xi.lambda.is_symmetric() {
            return Err(AdhmError::InvalidXi("coweight is not symmetric".into()));
        }
        if m_plus + m_minus != xi.lambda.multiplicity(0) {
            return Err(AdhmError::InvalidXi("m_plus + m_minus must equal m_0".into()));
        }
        if !(m_minus + even_weight_count(&xi.lambda)).is_multiple_of(2) {
            return Err(AdhmError::InvalidXi("parity of m_minus".into()));
        }
        Ok(xi)
    }
}

/// `m₂ + m₄ + ⋯`.
fn even_weight_count(lambda: &Coweight) -> usize {
    lambda
        .multiplicities()
        .iter()
        .filter(|(&i, _)| i > 0 && i % 2 == 0)
        .map(|(_, &m)| m)
        .sum()
}

/// All admissible `(m₊, m₋)` for `λ`, by decreasing `m₊`; empty unless `λ` is symmetric.
pub fn xi_enumerate(lambda: &Coweight) -> Vec<XiClass> {
    if !lambda.is_symmetric() {
        return Vec::new();
    }
    let m0 = lambda.multiplicity(0);
    let parity = even_weight_count(lambda) % 2;
    (0..=m0)
        .filter(|m_minus| m_minus % 2 == parity)
        .map(|m_minus| XiClass {
            lambda: lambda.clone(),
            m_plus: m0 - m_minus,
            m_minus,
        })
        .collect()
}

/// Type-D dimension vector of the class, or `None` when that quiver variety is empty.
pub fn vd_from_xi(xi: &XiClass) -> Result<Option<DimVectorD>, AdhmError> {
    let va = v_from_lambda(&xi.lambda);
    let r = xi.lambda.rank();
    let v1 = va.get(1);
    if xi.m_minus > v1 {
        return Ok(None);
    }
    let plus = r + v1 - xi.m_plus;
    let minus = v1 - xi.m_minus;
    if !plus.is_multiple_of(2) || !minus.is_multiple_of(2) {
        return Err(AdhmError::IntegralityViolation);
    }
    let top = va.range().map_or(0, |(_, hi)| hi.max(0) as usize);
    let rest = (1..=top).map(|k| va.get(k as i64)).collect();
    Ok(Some(DimVectorD::new(plus / 2, minus / 2, rest)))
}

/// Framing vector `(r, 0, 0, …)` on `D∞`.
pub fn framing_d(r: usize) -> DimVectorD {
    DimVectorD::new(r, 0, Vec::new())
}

/// Framing vector `r δ₀` on `A∞`.
pub fn framing_a(r: usize) -> BTreeMap<i64, usize> {
    BTreeMap::from([(0, r)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(e: &[i64]) -> Coweight {
        Coweight::new(e.to_vec()).unwrap()
    }

    fn va(pairs: &[(i64, usize)]) -> DimVectorA {
        DimVectorA::new(pairs.iter().copied().collect())
    }

    #[test]
    fn v_of_lambda() {
        assert_eq!(
            v_from_lambda(&cw(&[3, 0, 0, -3])),
            va(&[(-2, 1), (-1, 2), (0, 3), (1, 2), (2, 1)])
        );
        assert_eq!(v_from_lambda(&Coweight::zero(3)), DimVectorA::default());
        assert_eq!(v_from_lambda(&cw(&[2, 0, -2])), va(&[(-1, 1), (0, 2), (1, 1)]));
    }

    #[test]
    fn lambda_of_v() {
        let l = cw(&[3, 0, 0, -3]);
        assert_eq!(lambda_from_v(&v_from_lambda(&l), 4).unwrap(), l);
        assert!(lambda_from_v(&DimVectorA::default(), 5).unwrap().is_zero());
        assert_eq!(lambda_from_v(&va(&[(0, 1)]), 2).unwrap(), cw(&[1, -1]));
        assert!(matches!(
            lambda_from_v(&va(&[(0, 2)]), 1),
            Err(AdhmError::NegativeMultiplicity(_))
        ));
        assert!(matches!(
            lambda_from_v(&va(&[(1, 1)]), 0),
            Err(AdhmError::NegativeMultiplicity(_))
        ));
    }

    #[test]
    fn chern() {
        assert_eq!(chern_number(&v_from_lambda(&cw(&[3, 0, 0, -3]))), 9);
        assert_eq!(chern_number(&DimVectorA::default()), 0);
        assert_eq!(chern_number(&v_from_lambda(&cw(&[1, 1, -1, -1]))), 2);
    }

    #[test]
    fn xi_examples() {
        let xs: Vec<(usize, usize)> = xi_enumerate(&cw(&[3, 0, 0, -3]))
            .iter()
            .map(|x| (x.m_plus, x.m_minus))
            .collect();
        assert_eq!(xs, vec![(2, 0), (0, 2)]);
        assert!(xi_enumerate(&cw(&[2, -2])).is_empty());
        let xs: Vec<(usize, usize)> = xi_enumerate(&Coweight::zero(3))
            .iter()
            .map(|x| (x.m_plus, x.m_minus))
            .collect();
        assert_eq!(xs, vec![(3, 0), (1, 2)]);
        assert!(xi_enumerate(&cw(&[2, -1, -1])).is_empty());
    }

    #[test]
    fn vd_examples() {
        let l = cw(&[3, 0, 0, -3]);
        let a = vd_from_xi(&XiClass::new(l.clone(), 2, 0).unwrap()).unwrap().unwrap();
        assert_eq!(a, DimVectorD::new(2, 1, vec![2, 1]));
        let b = vd_from_xi(&XiClass::new(l, 0, 2).unwrap()).unwrap().unwrap();
        assert_eq!(b, DimVectorD::new(3, 0, vec![2, 1]));
        for m in [1i64, 3, 5, 7] {
            let v = vd_from_xi(&XiClass::new(cw(&[m, -m]), 0, 0).unwrap()).unwrap().unwrap();
            let rest: Vec<usize> = (1..m as usize).rev().collect();
            assert_eq!(v, DimVectorD::new((m as usize).div_ceil(2), (m as usize - 1) / 2, rest));
        }
        let empty = vd_from_xi(&XiClass::new(Coweight::zero(3), 1, 2).unwrap()).unwrap();
        assert!(empty.is_none());
    }

    #[test]
    fn tau_examples() {
        let l = cw(&[2, 1, -1, -2]);
        let m = tau_multiplicities_a(&v_from_lambda(&l), 4).unwrap();
        assert_eq!(m, l.multiplicities().into_iter().collect());
        let d = tau_multiplicities_d(&DimVectorD::new(2, 1, vec![2, 1]), 4).unwrap();
        assert_eq!(d, DimVectorD::new(2, 0, vec![0, 0, 1]));
        assert!(matches!(
            tau_multiplicities_a(&va(&[(0, 2)]), 1),
            Err(AdhmError::Infeasible(_))
        ));
    }

    #[test]
    fn dimensions() {
        let l = cw(&[3, 0, 0, -3]);
        assert_eq!(quiver_dim_a(&v_from_lambda(&l), &framing_a(4)), 18);
        assert_eq!(quiver_dim_d(&DimVectorD::new(2, 1, vec![2, 1]), &framing_d(4)), 12);
        assert_eq!(quiver_dim_a(&DimVectorA::default(), &framing_a(3)), 0);
        assert_eq!(quiver_dim_d(&DimVectorD::new(1, 0, vec![]), &framing_d(2)), 2);
    }
}
