use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{AlgError, Laurent, Monomial, Rational, Ring};

/// Dense row-major matrix over a [`Ring`]. Shapes may be zero in either direction.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

/// Matrix of exact rationals.
pub type QMatrix = Matrix<Rational>;
pub type LaurentMatrix1 = Matrix<Laurent<i64>>;
pub type LaurentMatrix2 = Matrix<Laurent<(i64, i64)>>;

impl<R: Ring> Matrix<R> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn diagonal(entries: Vec<R>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, AlgError> {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != nc) {
            return Err(AlgError::Ragged);
        }
        Ok(Matrix {
            rows: nr,
            cols: nc,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        let c = self.cols;
        self.data.iter().enumerate().map(move |(k, v)| (k / c, k % c, v))
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    fn same_shape(&self, other: &Self, op: &str) {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "{op}: shape {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_shape(other, "add");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_shape(other, "sub");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.minus(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(R::negate)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.times(c))
    }

    /// Matrix product; panics on incompatible shapes.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "mul: {}x{} times {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].plus(&a.times(b));
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Copy of the rectangular block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Self {
        Self::from_fn(nr, nc, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for (i, j, v) in b.entries() {
            self.set(r0 + i, c0 + j, v.clone());
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        Self::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    /// Division-free determinant by cofactor expansion, memoized over column subsets.
    pub fn det(&self) -> R {
        assert!(self.is_square(), "det of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return R::one();
        }
        assert!(n <= 20, "cofactor determinant limited to n <= 20");
        let mut memo: HashMap<u32, R> = HashMap::new();
        self.det_rec(0, (1u32 << n) - 1, &mut memo)
    }

    fn det_rec(&self, row: usize, cols: u32, memo: &mut HashMap<u32, R>) -> R {
        if cols == 0 {
            return R::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = R::zero();
        let mut sign_pos = true;
        for c in 0..self.cols {
            if cols & (1 << c) == 0 {
                continue;
            }
            let a = self.get(row, c);
            if !a.is_zero() {
                let minor = self.det_rec(row + 1, cols & !(1 << c), memo);
                let term = a.times(&minor);
                acc = if sign_pos { acc.plus(&term) } else { acc.minus(&term) };
            }
            sign_pos = !sign_pos;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// Transposed cofactor matrix, so that `M * adj(M) = det(M) * I`.
    pub fn adjugate(&self) -> Self {
        assert!(self.is_square(), "adjugate of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return self.clone();
        }
        if n == 1 {
            return Self::identity(1);
        }
        let idx: Vec<usize> = (0..n).collect();
        Self::from_fn(n, n, |i, j| {
            let rows: Vec<usize> = idx.iter().copied().filter(|&k| k != j).collect();
            let cols: Vec<usize> = idx.iter().copied().filter(|&k| k != i).collect();
            let minor = self.submatrix(&rows, &cols).det();
            if (i + j) % 2 == 0 {
                minor
            } else {
                minor.negate()
            }
        })
    }

    /// Inverse of a determinant-one matrix, computed as its adjugate.
    pub fn adjugate_inverse(&self) -> Result<Self, AlgError> {
        if !self.is_square() {
            return Err(AlgError::NotSquare);
        }
        if !self.det().is_one() {
            return Err(AlgError::DeterminantNotOne);
        }
        Ok(self.adjugate())
    }
}

impl<M: Monomial> Matrix<Laurent<M>> {
    /// The rational matrix of coefficients of `x^m`.
    pub fn coefficient(&self, m: M) -> QMatrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).coeff(m))
    }

    pub fn constant(q: &QMatrix) -> Self {
        q.map(|c| Laurent::constant(c.clone()))
    }

    /// All monomials occurring in some entry.
    pub fn support(&self) -> std::collections::BTreeSet<M> {
        self.data.iter().flat_map(|p| p.monomials()).collect()
    }

    /// Sums `coef * x^m` over the supplied coefficient matrices.
    pub fn from_coefficients<'a>(rows: usize, cols: usize, parts: impl IntoIterator<Item = (M, &'a QMatrix)>) -> Self {
        let mut out = Self::zeros(rows, cols);
        for (m, q) in parts {
            for (i, j, c) in q.entries() {
                if !c.is_zero() {
                    out.data[i * cols + j].add_term(m, c.clone());
                }
            }
        }
        out
    }

    pub fn map_monomials<N: Monomial>(&self, f: impl Fn(M) -> N + Copy) -> Matrix<Laurent<N>> {
        self.map(|p| p.map_monomials(f))
    }

    pub fn filter_monomials(&self, keep: impl Fn(M) -> bool + Copy) -> Self {
        self.map(|p| p.filter(keep))
    }
}

impl LaurentMatrix1 {
    /// Evaluates every entry at `x`.
    pub fn evaluate(&self, x: &Rational) -> QMatrix {
        self.map(|p| p.evaluate(x))
    }

    /// `diag(x^{e_1}, …, x^{e_n})`.
    pub fn monomial_diagonal(exps: &[i64]) -> Self {
        Matrix::diagonal(exps.iter().map(|&e| Laurent::term(Rational::one(), e)).collect())
    }
}

impl LaurentMatrix2 {
    pub fn monomial_diagonal2(exps: &[(i64, i64)]) -> Self {
        Matrix::diagonal(exps.iter().map(|&e| Laurent::monomial(Rational::one(), e)).collect())
    }
}
