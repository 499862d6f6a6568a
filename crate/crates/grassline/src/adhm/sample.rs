use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{rat, QMatrix};
use crate::loopgroup::Coweight;

use super::{v_from_lambda, vd_from_xi, AdhmDatumA, AdhmDatumD, AdhmError, DimVectorA, FoldedMaps, XiClass};

/// Retry budget for [`sample_datum_a`] and [`sample_datum_d`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleOptions {
    pub retries: usize,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions { retries: 32 }
    }
}

/// Homogeneous linear system in matrix-valued unknowns, built from terms `L · X · R`.
struct LinearSystem {
    unknowns: Vec<(usize, usize, usize)>,
    equations: Vec<(usize, usize, usize)>,
    n_vars: usize,
    n_eqs: usize,
    terms: Vec<(usize, usize, QMatrix, QMatrix)>,
}

impl LinearSystem {
    fn new() -> Self {
        LinearSystem {
            unknowns: Vec::new(),
            equations: Vec::new(),
            n_vars: 0,
            n_eqs: 0,
            terms: Vec::new(),
        }
    }

    fn unknown(&mut self, rows: usize, cols: usize) -> usize {
        self.unknowns.push((rows, cols, self.n_vars));
        self.n_vars += rows * cols;
        self.unknowns.len() - 1
    }

    fn equation(&mut self, rows: usize, cols: usize) -> usize {
        self.equations.push((rows, cols, self.n_eqs));
        self.n_eqs += rows * cols;
        self.equations.len() - 1
    }

    /// Adds `left · X · right` to equation `eq`.
    fn term(&mut self, eq: usize, x: usize, left: QMatrix, right: QMatrix) {
        self.terms.push((eq, x, left, right));
    }

    fn matrix(&self) -> QMatrix {
        let mut a = QMatrix::zeros(self.n_eqs, self.n_vars);
        for (eq, x, left, right) in &self.terms {
            let (er, ec, eo) = self.equations[*eq];
            let (xr, xc, xo) = self.unknowns[*x];
            for p in 0..er {
                for c in 0..xr {
                    let l = left.get(p, c);
                    if l.is_zero() {
                        continue;
                    }
                    for d in 0..xc {
                        for q in 0..ec {
                            let rr = right.get(d, q);
                            if rr.is_zero() {
                                continue;
                            }
                            let (row, col) = (eo + p * ec + q, xo + c * xc + d);
                            let v = a.get(row, col) + l * rr;
                            a.set(row, col, v);
                        }
                    }
                }
            }
        }
        a
    }

    /// A random point of the solution space, one matrix per unknown.
    fn random_solution<R: Rng>(&self, rng: &mut R) -> Vec<QMatrix> {
        let basis = self.matrix().nullspace();
        let coeffs = QMatrix::from_fn(basis.cols(), 1, |_, _| rat(rng.gen_range(-3..=3)));
        let x = basis.mul(&coeffs);
        self.unknowns
            .iter()
            .map(|&(r, c, o)| QMatrix::from_fn(r, c, |i, j| x.get(o + i * c + j, 0).clone()))
            .collect()
    }
}

fn random_matrix<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> QMatrix {
    QMatrix::from_fn(rows, cols, |_, _| rat(rng.gen_range(-2..=2)))
}

fn dims_a(lambda: &Coweight) -> DimVectorA {
    v_from_lambda(lambda)
}

/// Draws random `B2` and `i`, then a random solution `(B1, j)` of the graded equations,
/// until the result is stable and costable.
pub fn sample_datum_a(lambda: &Coweight, seed: u64, opts: SampleOptions) -> Result<AdhmDatumA, AdhmError> {
    let r = lambda.rank();
    let dims = dims_a(lambda);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grades: Vec<i64> = dims.entries().keys().copied().collect();
    for _ in 0..opts.retries.max(1) {
        let mut b2 = BTreeMap::new();
        for &k in &grades {
            b2.insert(k, random_matrix(dims.get(k + 1), dims.get(k), &mut rng));
        }
        let i_map = random_matrix(dims.get(0), r, &mut rng);
        let mut sys = LinearSystem::new();
        let mut b1_vars = BTreeMap::new();
        for &k in &grades {
            b1_vars.insert(k, sys.unknown(dims.get(k - 1), dims.get(k)));
        }
        let j_var = sys.unknown(r, dims.get(0));
        for &k in &grades {
            let d = dims.get(k);
            let eq = sys.equation(d, d);
            // B1[k+1] B2[k] − B2[k−1] B1[k] (+ i j on V₀)
            if let Some(&x) = b1_vars.get(&(k + 1)) {
                sys.term(eq, x, QMatrix::identity(d), b2[&k].clone());
            }
            if let Some(&x) = b1_vars.get(&k) {
                let left = b2
                    .get(&(k - 1))
                    .cloned()
                    .unwrap_or_else(|| QMatrix::zeros(d, dims.get(k - 1)));
                sys.term(eq, x, left.neg(), QMatrix::identity(d));
            }
            if k == 0 {
                sys.term(eq, j_var, i_map.clone(), QMatrix::identity(d));
            }
        }
        let sol = sys.random_solution(&mut rng);
        let b1: BTreeMap<i64, QMatrix> = b1_vars.iter().map(|(&k, &x)| (k, sol[x].clone())).collect();
        let datum = AdhmDatumA::new(r, dims.clone(), b1, b2, i_map, sol[j_var].clone())?;
        if datum.validate().all_pass() && datum.stability() == (true, true) {
            return Ok(datum);
        }
    }
    Err(AdhmError::SamplingExhausted(opts.retries))
}

/// Type-D analogue of [`sample_datum_a`]: random `B2₊`, `B2₋`, `B2`, `i`, solving for
/// `B1₊`, `B1₋`, `B1`, `j`.
pub fn sample_datum_d(xi: &XiClass, seed: u64, opts: SampleOptions) -> Result<AdhmDatumD, AdhmError> {
    let r = xi.lambda.rank();
    let dims = vd_from_xi(xi)?.ok_or(AdhmError::EmptyStratum)?;
    let (p, m, top) = (dims.v0_plus, dims.v0_minus, dims.top());
    let v = |k: usize| dims.get(k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..opts.retries.max(1) {
        let b2_plus = random_matrix(v(1), p, &mut rng);
        let b2_minus = random_matrix(v(1), m, &mut rng);
        let mut b2 = BTreeMap::new();
        for k in 1..=top {
            b2.insert(k, random_matrix(v(k + 1), v(k), &mut rng));
        }
        let i_map = random_matrix(p, r, &mut rng);
        let mut sys = LinearSystem::new();
        let x_plus = sys.unknown(p, v(1));
        let x_minus = sys.unknown(m, v(1));
        let mut b1_vars = BTreeMap::new();
        for k in 1..=top {
            b1_vars.insert(k, sys.unknown(v(k), v(k + 1)));
        }
        let x_j = sys.unknown(r, p);
        let e0p = sys.equation(p, p);
        sys.term(e0p, x_plus, QMatrix::identity(p).scale(&rat(2)), b2_plus.clone());
        sys.term(e0p, x_j, i_map.clone(), QMatrix::identity(p));
        let e0m = sys.equation(m, m);
        sys.term(e0m, x_minus, QMatrix::identity(m), b2_minus.clone());
        for k in 1..=top {
            let d = v(k);
            let eq = sys.equation(d, d);
            sys.term(eq, b1_vars[&k], QMatrix::identity(d), b2[&k].clone());
            if k == 1 {
                sys.term(eq, x_plus, b2_plus.neg(), QMatrix::identity(d));
                sys.term(eq, x_minus, b2_minus.neg(), QMatrix::identity(d));
            } else {
                sys.term(eq, b1_vars[&(k - 1)], b2[&(k - 1)].neg(), QMatrix::identity(d));
            }
        }
        let sol = sys.random_solution(&mut rng);
        let maps = FoldedMaps {
            b1_plus: Some(sol[x_plus].clone()),
            b1_minus: Some(sol[x_minus].clone()),
            b2_plus: Some(b2_plus),
            b2_minus: Some(b2_minus),
            b1: b1_vars.iter().map(|(&k, &x)| (k, sol[x].clone())).collect(),
            b2,
            i_map: Some(i_map),
            j_map: Some(sol[x_j].clone()),
        };
        let datum = AdhmDatumD::new(r, dims.clone(), maps)?;
        if datum.validate().all_pass() && datum.stability() == (true, true) {
            return Ok(datum);
        }
    }
    Err(AdhmError::SamplingExhausted(opts.retries))
}
