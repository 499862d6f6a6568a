use num_traits::One;
use rand::Rng;

use crate::exactalg::{frac, rat, LaurentMatrix2, LaurentPoly2, Rational};
use crate::report::CheckReport;

use super::cones::*;

const TU: [&str; 2] = ["t", "u"];
const S12: [&str; 2] = ["s1", "s2"];

/// Element of the gauge group acting on [`TransitionQuad`](super::TransitionQuad)s.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaugeElement {
    pub h00: LaurentMatrix2,
    pub h01: LaurentMatrix2,
    pub h10: LaurentMatrix2,
    pub h11: LaurentMatrix2,
}

/// Element of the gauge group acting on [`TransitionTriple`](super::TransitionTriple)s.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TripleGauge {
    pub h0: LaurentMatrix2,
    pub h1: LaurentMatrix2,
    pub h2: LaurentMatrix2,
}

fn elementary(r: usize, i: usize, j: usize, c: Rational, m: (i64, i64)) -> LaurentMatrix2 {
    let mut e = LaurentMatrix2::identity(r);
    e.set(i, j, LaurentPoly2::monomial(c, m));
    e
}

fn nonzero_coeff<R: Rng>(rng: &mut R) -> Rational {
    let c = rng.gen_range(1..=2);
    if rng.gen_bool(0.5) {
        rat(c)
    } else {
        rat(-c)
    }
}

/// Product of `factors` elementary unipotents whose off-diagonal monomial is drawn by `mono`.
fn unipotent_product<R: Rng>(
    r: usize,
    factors: usize,
    rng: &mut R,
    mono: impl Fn(&mut R) -> (i64, i64),
) -> LaurentMatrix2 {
    let mut acc = LaurentMatrix2::identity(r);
    if r < 2 {
        return acc;
    }
    for _ in 0..factors {
        let i = rng.gen_range(0..r);
        let mut j = rng.gen_range(0..r - 1);
        if j >= i {
            j += 1;
        }
        let c = nonzero_coeff(rng);
        let m = mono(rng);
        acc = acc.mul(&elementary(r, i, j, c, m));
    }
    acc
}

impl GaugeElement {
    pub fn identity(r: usize) -> Self {
        let id = LaurentMatrix2::identity(r);
        GaugeElement {
            h00: id.clone(),
            h01: id.clone(),
            h10: id.clone(),
            h11: id,
        }
    }

    pub fn validate(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        rep.push(cone("h00.cone", &self.h00, both_nonneg, TU));
        rep.push(cone("h01.cone", &self.h01, t_nonneg_u_nonpos, TU));
        rep.push(slice_identity("h01.slice", &self.h01, u_zero, TU));
        rep.push(cone("h10.cone", &self.h10, u_nonneg_t_nonpos, TU));
        rep.push(slice_identity("h10.slice", &self.h10, t_zero, TU));
        rep.push(cone("h11.cone", &self.h11, both_nonpos, TU));
        rep.push(slice_identity("h11.slice_t", &self.h11, t_zero, TU));
        rep.push(slice_identity("h11.slice_u", &self.h11, u_zero, TU));
        for (name, m) in [
            ("h00", &self.h00),
            ("h01", &self.h01),
            ("h10", &self.h10),
            ("h11", &self.h11),
        ] {
            rep.push(det_one(&format!("{name}.det"), m, TU));
        }
        rep
    }

    /// Random element built from elementary unipotents with small exponents and
    /// coefficients, plus a constant diagonal torus factor in `h00`.
    pub fn random<R: Rng>(r: usize, factors: usize, rng: &mut R) -> Self {
        let mut h00 = unipotent_product(r, factors, rng, |g| (g.gen_range(0..=1), g.gen_range(0..=1)));
        if r >= 2 {
            let a = [rat(1), rat(2), rat(-1), frac(1, 2)][rng.gen_range(0..4)].clone();
            let mut d = vec![Rational::one(); r];
            d[0] = a.clone();
            d[1] = a.recip();
            h00 = h00.mul(&LaurentMatrix2::constant(&crate::exactalg::QMatrix::diagonal(d)));
        }
        GaugeElement {
            h00,
            h01: unipotent_product(r, factors, rng, |g| (g.gen_range(0..=1), g.gen_range(-2..=-1))),
            h10: unipotent_product(r, factors, rng, |g| (g.gen_range(-2..=-1), g.gen_range(0..=1))),
            h11: unipotent_product(r, factors, rng, |g| (g.gen_range(-2..=-1), g.gen_range(-2..=-1))),
        }
    }
}

impl TripleGauge {
    pub fn identity(r: usize) -> Self {
        let id = LaurentMatrix2::identity(r);
        TripleGauge {
            h0: id.clone(),
            h1: id.clone(),
            h2: id,
        }
    }

    pub fn validate(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        rep.push(cone("h0.cone", &self.h0, both_nonneg, S12));
        rep.push(cone("h1.cone", &self.h1, s2_nonneg_total_nonpos, S12));
        rep.push(slice_identity("h1.slice", &self.h1, total_zero, S12));
        rep.push(cone("h2.cone", &self.h2, s1_nonneg_total_nonpos, S12));
        rep.push(slice_identity("h2.slice", &self.h2, total_zero, S12));
        for (name, m) in [("h0", &self.h0), ("h1", &self.h1), ("h2", &self.h2)] {
            rep.push(det_one(&format!("{name}.det"), m, S12));
        }
        rep
    }

    pub fn random<R: Rng>(r: usize, factors: usize, rng: &mut R) -> Self {
        TripleGauge {
            h0: unipotent_product(r, factors, rng, |g| (g.gen_range(0..=1), g.gen_range(0..=1))),
            h1: unipotent_product(r, factors, rng, |g| {
                let q = g.gen_range(0..=1);
                (g.gen_range(-q - 2..=-q - 1), q)
            }),
            h2: unipotent_product(r, factors, rng, |g| {
                let p = g.gen_range(0..=1);
                (p, g.gen_range(-p - 2..=-p - 1))
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_elements_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for r in 1..=3 {
            for _ in 0..5 {
                assert!(GaugeElement::random(r, 2, &mut rng).validate().all_pass());
                assert!(TripleGauge::random(r, 2, &mut rng).validate().all_pass());
            }
        }
    }

    #[test]
    fn identity_is_valid() {
        assert!(GaugeElement::identity(2).validate().all_pass());
        assert!(TripleGauge::identity(2).validate().all_pass());
    }
}
