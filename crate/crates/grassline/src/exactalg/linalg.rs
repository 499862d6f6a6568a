use num_traits::{One, Zero};

use super::{AlgError, Matrix, QMatrix, Rational};

impl QMatrix {
    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.to_rows();
        let (nr, nc) = (self.rows(), self.cols());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..nc {
            if r == nr {
                break;
            }
            let Some(p) = (r..nr).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            for x in m[r].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let out = if nr == 0 {
            QMatrix::zeros(0, nc)
        } else {
            Matrix::from_rows(m).expect("rows are uniform")
        };
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of `{x : self * x = 0}`.
    pub fn nullspace(&self) -> QMatrix {
        let (r, pivots) = self.rref();
        let n = self.cols();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut basis = QMatrix::zeros(n, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis.set(f, k, Rational::one());
            for (pi, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, -r.get(pi, f).clone());
            }
        }
        basis
    }

    /// Rows form a basis of the row space.
    pub fn row_basis(&self) -> QMatrix {
        let (r, pivots) = self.rref();
        r.block(0, 0, pivots.len(), self.cols())
    }

    /// Columns form a basis of the column space (a subset of the original columns).
    pub fn column_basis(&self) -> QMatrix {
        let (_, pivots) = self.rref();
        let rows: Vec<usize> = (0..self.rows()).collect();
        self.submatrix(&rows, &pivots)
    }

    /// Determinant by elimination.
    pub fn det_q(&self) -> Rational {
        assert!(self.is_square());
        let n = self.rows();
        let mut m = self.to_rows();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= &m[c][c];
            let inv = m[c][c].recip();
            let pivot_row = m[c].clone();
            for row in m.iter_mut().skip(c + 1) {
                if row[c].is_zero() {
                    continue;
                }
                let f = &row[c] * &inv;
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x -= &f * y;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<QMatrix, AlgError> {
        if !self.is_square() {
            return Err(AlgError::NotSquare);
        }
        let n = self.rows();
        let aug = self.hstack(&QMatrix::identity(n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(AlgError::SingularMatrix);
        }
        Ok(r.block(0, n, n, n))
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows().min(self.cols()))
            .map(|i| self.get(i, i).clone())
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// `self * other - other * self`.
    pub fn bracket(&self, other: &QMatrix) -> QMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// True when `self^n = 0` for `n` the size.
    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows() as u32).is_zero()
    }
}
