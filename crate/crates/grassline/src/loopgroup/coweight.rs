use std::collections::BTreeMap;

use crate::exactalg::{frac, Rational};

use super::LoopError;

/// Dominant coweight of `SL(r)`: a weakly decreasing integer tuple summing to zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Coweight {
    entries: Vec<i64>,
}

impl Coweight {
    pub fn new(entries: Vec<i64>) -> Result<Self, LoopError> {
        if entries.is_empty() {
            return Err(LoopError::InvalidCoweight("rank must be positive".into()));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(LoopError::InvalidCoweight(format!(
                "{entries:?} is not weakly decreasing"
            )));
        }
        if entries.iter().sum::<i64>() != 0 {
            return Err(LoopError::InvalidCoweight(format!("{entries:?} does not sum to zero")));
        }
        Ok(Coweight { entries })
    }

    pub fn zero(r: usize) -> Self {
        Coweight { entries: vec![0; r] }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// Dominance order: `self ≤ other` iff all partial sums of `other − self` are nonnegative.
    pub fn leq(&self, other: &Coweight) -> Result<bool, LoopError> {
        if self.rank() != other.rank() {
            return Err(LoopError::RankMismatch(self.rank(), other.rank()));
        }
        let mut acc = 0;
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc += b - a;
            if acc < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `−w₀λ`: reverse and negate.
    pub fn neg_w0(&self) -> Coweight {
        Coweight {
            entries: self.entries.iter().rev().map(|x| -x).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.neg_w0() == *self
    }

    /// False exactly when twice the highest coroot lies below `self`.
    pub fn is_small(&self) -> bool {
        let r = self.rank();
        if r < 2 {
            return true;
        }
        let mut two_theta = vec![0; r];
        two_theta[0] = 2;
        two_theta[r - 1] = -2;
        !Coweight { entries: two_theta }.leq(self).expect("same rank")
    }

    /// `i ↦ #{s : λ_s = i}`.
    pub fn multiplicities(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for &x in &self.entries {
            *m.entry(x).or_insert(0) += 1;
        }
        m
    }

    pub fn multiplicity(&self, i: i64) -> usize {
        self.entries.iter().filter(|&&x| x == i).count()
    }

    pub fn sum_of_squares(&self) -> i64 {
        self.entries.iter().map(|x| x * x).sum()
    }

    /// `⟨λ, ρ⟩` with `ρ_s = (r + 1 − 2s)/2`.
    pub fn pair_rho(&self) -> Rational {
        let r = self.rank() as i64;
        self.entries
            .iter()
            .enumerate()
            .map(|(s, &l)| frac(l * (r - 1 - 2 * s as i64), 2))
            .sum()
    }

    /// Builds from a multiplicity map, sorting descending.
    pub fn from_multiplicities(m: &BTreeMap<i64, usize>) -> Result<Self, LoopError> {
        let mut entries: Vec<i64> = m.iter().rev().flat_map(|(&i, &k)| std::iter::repeat_n(i, k)).collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Coweight::new(entries)
    }

    /// Every dominant coweight of rank `r` with entries in `[-bound, bound]`.
    pub fn enumerate(r: usize, bound: i64) -> Vec<Coweight> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(r);
        fn rec(r: usize, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Coweight>) {
            if cur.len() == r {
                if cur.iter().sum::<i64>() == 0 {
                    out.push(Coweight { entries: cur.clone() });
                }
                return;
            }
            let hi = cur.last().copied().unwrap_or(bound);
            for x in (-bound..=hi).rev() {
                cur.push(x);
                rec(r, bound, cur, out);
                cur.pop();
            }
        }
        if r > 0 {
            rec(r, bound, &mut cur, &mut out);
        }
        out
    }
}

/// See [`Coweight::leq`].
pub fn coweight_leq(mu: &Coweight, lambda: &Coweight) -> Result<bool, LoopError> {
    mu.leq(lambda)
}
