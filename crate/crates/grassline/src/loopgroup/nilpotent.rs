use crate::exactalg::QMatrix;

use super::{Coweight, LoopError};

/// Integer partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, LoopError> {
        if parts.contains(&0) {
            return Err(LoopError::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            parts.sort_unstable_by(|a, b| b.cmp(a));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// All partitions of `n`, largest parts first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Block-diagonal nilpotent in Jordan normal form, ones on the superdiagonal.
    pub fn jordan_matrix(&self) -> QMatrix {
        let n = self.size();
        let mut x = QMatrix::zeros(n, n);
        let mut off = 0;
        for &p in &self.parts {
            for i in 0..p.saturating_sub(1) {
                x.set(off + i, off + i + 1, crate::exactalg::rat(1));
            }
            off += p;
        }
        x
    }

    /// Weights of the principal `sl₂` in each block: `p−1, p−3, …, 1−p`, sorted descending.
    pub fn weights(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self
            .parts
            .iter()
            .flat_map(|&p| {
                let p = p as i64;
                (0..p).map(move |k| p - 1 - 2 * k)
            })
            .collect();
        w.sort_unstable_by(|a, b| b.cmp(a));
        w
    }
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
pub fn jordan_type(x: &QMatrix) -> Result<Partition, LoopError> {
    if !x.is_square() {
        return Err(LoopError::NotNilpotent);
    }
    let n = x.rows();
    let mut ranks = vec![n];
    let mut p = QMatrix::identity(n);
    for _ in 0..n {
        p = p.mul(x);
        ranks.push(p.rank());
    }
    if ranks[n] != 0 {
        return Err(LoopError::NotNilpotent);
    }
    // at_least[k] = number of blocks of size ≥ k+1
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for k in 0..n {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        for _ in 0..at_least[k] - next {
            parts.push(k + 1);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Partition { parts })
}

/// Coweight attached to the orbit of `x` via the weights of an `sl₂`-triple through it.
pub fn lambda_of_nilpotent(x: &QMatrix) -> Result<Coweight, LoopError> {
    let mu = jordan_type(x)?;
    Coweight::new(mu.weights())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qmatrix;

    #[test]
    fn jordan_types() {
        assert_eq!(jordan_type(&QMatrix::zeros(3, 3)).unwrap().parts(), &[1, 1, 1]);
        let j4 = Partition::new(vec![4]).unwrap().jordan_matrix();
        assert_eq!(jordan_type(&j4).unwrap().parts(), &[4]);
        let j22 = Partition::new(vec![2, 2]).unwrap().jordan_matrix();
        assert_eq!(jordan_type(&j22).unwrap().parts(), &[2, 2]);
        assert!(matches!(jordan_type(&qmatrix(&[&[1]])), Err(LoopError::NotNilpotent)));
    }

    #[test]
    fn coweights_of_orbits() {
        assert!(lambda_of_nilpotent(&QMatrix::zeros(2, 2)).unwrap().is_zero());
        let e = qmatrix(&[&[0, 1], &[0, 0]]);
        assert_eq!(lambda_of_nilpotent(&e).unwrap().entries(), &[1, -1]);
        let j22 = Partition::new(vec![2, 2]).unwrap().jordan_matrix();
        assert_eq!(lambda_of_nilpotent(&j22).unwrap().entries(), &[1, 1, -1, -1]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11]);
    }
}
