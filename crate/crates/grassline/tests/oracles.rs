//! Frozen values, each checked against a small independent computation.

use std::collections::BTreeMap;

use grassline::adhm::{
    chern_number, framing_a, framing_d, lambda_from_v, monad_maps, quiver_dim_a, quiver_dim_d, sample_datum_a,
    sample_datum_d, tau_multiplicities_a, tau_multiplicities_d, theta_psi_a, theta_psi_d, v_from_lambda, vd_from_xi,
    xi_enumerate, AdhmDatumA, DimVectorA, DimVectorD, SampleOptions, XiClass,
};
use grassline::exactalg::{
    parse_matrix, qmatrix, rat, smith_normal_form, LaurentMatrix1, LaurentMatrix2, LaurentPoly1, QMatrix, Rational,
};
use grassline::loopgroup::{
    classify_fixed, coweight_leq, exp_embed, factorize, jordan_type, lambda_of_nilpotent, sigma_invariant, stratum,
    Coweight, LoopElement, Partition,
};
use grassline::sl2lab::{in_symplectic, sl2_membership, sl2_triple, slodowy_member, type_d_dims_sl2};
use grassline::transitions::{
    act_gauge, birkhoff_split_u, build_quad, extract_quad, verify_quad, GaugeElement, SplitOptions,
};
use num_traits::{One, Zero};

fn cw(e: &[i64]) -> Coweight {
    Coweight::new(e.to_vec()).unwrap()
}

fn rows(r: &[&[&str]]) -> Vec<Vec<String>> {
    r.iter().map(|x| x.iter().map(|s| s.to_string()).collect()).collect()
}

fn m1(r: &[&[&str]]) -> LaurentMatrix1 {
    parse_matrix(&rows(r), &["t"]).unwrap()
}

fn m2(r: &[&[&str]]) -> LaurentMatrix2 {
    parse_matrix(&rows(r), &["t", "u"]).unwrap()
}

/// Leibniz expansion, independent of the library determinant.
fn leibniz(m: &LaurentMatrix1) -> LaurentPoly1 {
    fn perms(n: usize) -> Vec<(Vec<usize>, bool)> {
        if n == 0 {
            return vec![(vec![], true)];
        }
        let mut out = Vec::new();
        for (p, even) in perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                let swaps = n - 1 - pos;
                out.push((q, even == swaps.is_multiple_of(2)));
            }
        }
        out
    }
    let n = m.rows();
    let mut total = LaurentPoly1::zero();
    for (p, even) in perms(n) {
        let mut term = LaurentPoly1::one();
        for (i, &j) in p.iter().enumerate() {
            term = term * m.get(i, j).clone();
        }
        total = if even {
            total + term
        } else {
            total + term.scale(&rat(-1))
        };
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant-factor exponents from the `t`-adic valuations of the minors.
fn snf_oracle(m: &LaurentMatrix1) -> Vec<i64> {
    let n = m.rows();
    let mut prefix = vec![0i64];
    for k in 1..=n {
        let mut best = i64::MAX;
        for rs in subsets(n, k) {
            for cs in subsets(n, k) {
                if let Some(v) = leibniz(&m.submatrix(&rs, &cs)).min_exp() {
                    best = best.min(v);
                }
            }
        }
        prefix.push(best);
    }
    prefix.windows(2).map(|w| w[1] - w[0]).collect()
}

#[test]
fn snf_of_small_matrices() {
    let m = m1(&[&["t", "1"], &["0", "t"]]);
    assert_eq!(snf_oracle(&m), vec![0, 2]);
    assert_eq!(smith_normal_form(&m).unwrap().diag, vec![0, 2]);
    let cases: [&[&[&str]]; 3] = [
        &[&["t^2", "t"], &["0", "t^3"]],
        &[&["1 + t", "t"], &["t", "t"]],
        &[&["t", "0"], &["0", "t"]],
    ];
    for text in cases {
        let m = m1(text);
        let s = smith_normal_form(&m).unwrap();
        assert_eq!(s.diag, snf_oracle(&m), "{text:?}");
        assert_eq!(s.reconstruct(), m);
    }
    let m = m1(&[&["t", "1", "0"], &["0", "t", "1"], &["0", "0", "t"]]);
    assert_eq!(smith_normal_form(&m).unwrap().diag, snf_oracle(&m));
}

#[test]
fn adjugate_of_special_entry() {
    let a = m2(&[&["0", "u^-1"], &["-u", "t"]]);
    let inv = a.adjugate_inverse().unwrap();
    assert_eq!(inv, m2(&[&["t", "-u^-1"], &["u", "0"]]));
    assert!(a.mul(&inv).is_identity());
    assert!(!a
        .mul(&m2(&[&["t", "u^-1"], &["-u", "0"]]))
        .sub(&LaurentMatrix2::identity(2))
        .support()
        .is_empty());
}

#[test]
fn regular_nilpotent_weights() {
    for (parts, want) in [(vec![3], vec![2, 0, -2]), (vec![2, 2], vec![1, 1, -1, -1])] {
        let mu = Partition::new(parts).unwrap();
        let t = sl2_triple(&mu);
        let mut weights: Vec<i64> = (0..mu.size())
            .map(|i| grassline::exactalg::rational::to_i64(t.h.get(i, i)).unwrap())
            .collect();
        weights.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(weights, want);
        let x = mu.jordan_matrix();
        assert_eq!(lambda_of_nilpotent(&x).unwrap(), cw(&want));
        assert_eq!(stratum(&exp_embed(&x).unwrap()).unwrap(), cw(&want));
    }
    let x = qmatrix(&[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]);
    assert_eq!(jordan_type(&x).unwrap().parts(), &[2, 2]);
}

#[test]
fn sigma_of_lower_unipotent() {
    let g = LoopElement::new(m1(&[&["1", "0"], &["t^-1", "1"]])).unwrap();
    let s = sigma_invariant(&g, &factorize(&g).unwrap()).unwrap();
    assert_eq!(s.mul(&s), QMatrix::identity(2).neg());
    assert!(s.trace().is_zero());
    assert_eq!(s.det_q(), Rational::one());
}

#[test]
fn dominance_and_smallness() {
    // partial sums 1,2,0 against 2,2,0
    assert!(coweight_leq(&cw(&[1, 1, -2]), &cw(&[2, 0, -2])).unwrap());
    assert!(!coweight_leq(&cw(&[2, 0, -2]), &cw(&[1, 1, -2])).unwrap());
    assert!(cw(&[1, 0, -1]).is_small());
    assert!(!cw(&[2, 0, -2]).is_small());
}

#[test]
fn lower_unipotent_quad_and_gauge() {
    let g = LoopElement::new(m1(&[&["1", "0"], &["t^-1", "1"]])).unwrap();
    let q = build_quad(&factorize(&g).unwrap()).unwrap();
    assert!(verify_quad(&q).all_pass());

    let special = LoopElement::new(m1(&[&["1", "t^-1"], &["0", "1"]])).unwrap();
    let q = build_quad(&factorize(&special).unwrap()).unwrap();
    let mut h = GaugeElement::identity(2);
    h.h01 = m2(&[&["1", "u^-1"], &["0", "1"]]);
    let acted = act_gauge(&q, &h).unwrap();
    assert!(verify_quad(&acted).all_pass());
    assert_eq!(extract_quad(&acted, SplitOptions::default()).unwrap(), special);
}

#[test]
fn split_of_a_left_factor() {
    let g = m2(&[&["1", "t^-1*u^-1"], &["0", "1"]]);
    let (a, b) = birkhoff_split_u(&g, SplitOptions::default()).unwrap();
    assert_eq!(a, g);
    assert!(b.is_identity());
}

#[test]
fn dimension_vectors() {
    let v = v_from_lambda(&cw(&[2, 0, -2]));
    assert_eq!(v.entries(), &BTreeMap::from([(-1, 1), (0, 2), (1, 1)]));
    let delta = DimVectorA::new(BTreeMap::from([(0, 1)]));
    assert_eq!(lambda_from_v(&delta, 2).unwrap(), cw(&[1, -1]));
    assert_eq!(chern_number(&v_from_lambda(&cw(&[1, 1, -1, -1]))), 2);
    let two = DimVectorA::new(BTreeMap::from([(0, 2)]));
    assert_eq!(tau_multiplicities_a(&two, 1).unwrap_err().code(), "Infeasible");
    let tau = tau_multiplicities_d(&DimVectorD::new(2, 1, vec![2, 1]), 4).unwrap();
    // r − 2v₀₊ + v₁, −2v₀₋ + v₁, v₀₊ + v₀₋ − 2v₁ + v₂, v₁ − 2v₂ + v₃, v₂ − 2v₃
    assert_eq!(tau, DimVectorD::new(2, 0, vec![0, 0, 1]));
    let got: Vec<(usize, usize)> = xi_enumerate(&Coweight::zero(3))
        .iter()
        .map(|x| (x.m_plus, x.m_minus))
        .collect();
    assert_eq!(got, vec![(3, 0), (1, 2)]);
}

#[test]
fn quiver_dimensions() {
    let lam = cw(&[3, 0, 0, -3]);
    let e = lam.entries();
    let oracle: i64 = (0..4).flat_map(|i| (i + 1..4).map(move |j| e[i] - e[j])).sum();
    assert_eq!(oracle, 18);
    assert_eq!(quiver_dim_a(&v_from_lambda(&lam), &framing_a(4)), oracle);
    let xi = XiClass::new(lam.clone(), 2, 0).unwrap();
    let vd = vd_from_xi(&xi).unwrap().unwrap();
    // ⟨λ,ρ⟩ = 9, ¼(16 − 4) = 3
    assert_eq!(lam.pair_rho(), rat(9));
    assert_eq!(quiver_dim_d(&vd, &framing_d(4)), 12);
    for (m, dim) in [(1, 2), (3, 4)] {
        assert_eq!(type_d_dims_sl2(m).unwrap().quiver_dim, dim);
    }
}

#[test]
fn delta0_datum() {
    let d = AdhmDatumA::new(
        2,
        DimVectorA::new(BTreeMap::from([(0, 1)])),
        BTreeMap::new(),
        BTreeMap::new(),
        qmatrix(&[&[1, 0]]),
        qmatrix(&[&[0], &[1]]),
    )
    .unwrap();
    // ji = [[0,0],[1,0]]
    assert_eq!(d.j_map().mul(d.i_map()), qmatrix(&[&[0, 0], &[1, 0]]));
    assert_eq!(d.stability(), (true, true));
    assert_eq!(*theta_psi_a(&d).unwrap().body(), m1(&[&["1", "0"], &["t^-1", "1"]]));
    let m = monad_maps(&d.ungraded());
    let (a, b) = m.at(&[rat(1), rat(1), rat(1)]);
    assert_eq!(a, qmatrix(&[&[-1], &[-1], &[0], &[1]]));
    assert_eq!(b, qmatrix(&[&[1, -1, 1, 0]]));
    assert!(m.fiber_ranks_ok(&[rat(1), rat(1), rat(1)]));
}

#[test]
fn sampled_data_land_in_the_right_strata() {
    let d = sample_datum_a(&cw(&[1, -1]), 1, SampleOptions::default()).unwrap();
    assert_eq!(d.dims().entries(), &BTreeMap::from([(0, 1)]));
    assert!(d.validate().all_pass());
    let d = sample_datum_a(&cw(&[2, 0, -2]), 7, SampleOptions::default()).unwrap();
    assert_eq!(stratum(&theta_psi_a(&d).unwrap()).unwrap(), cw(&[2, 0, -2]));

    let xi = XiClass::new(cw(&[3, 0, 0, -3]), 2, 0).unwrap();
    let d = sample_datum_d(&xi, 0, SampleOptions::default()).unwrap();
    let v = d.dims();
    let m_plus = 4 - 2 * v.v0_plus as i64 + v.get(1) as i64;
    let m_minus = -2 * v.v0_minus as i64 + v.get(1) as i64;
    let c = classify_fixed(&theta_psi_d(&d).unwrap()).unwrap();
    assert_eq!((c.m_plus as i64, c.m_minus as i64), (m_plus, m_minus));
    assert_eq!(c.lambda, cw(&[3, 0, 0, -3]));
}

#[test]
fn sl2_checks() {
    let even = sl2_membership(&m1(&[&["1", "t^-2"], &["0", "1"]]), 2);
    assert!(even.in_stratum && !even.in_fixed);
    let t = sl2_triple(&Partition::new(vec![2]).unwrap());
    assert!(slodowy_member(&t.e.add(&t.f.scale(&rat(-7))), &t));
    assert!(in_symplectic(&t.e, &qmatrix(&[&[0, 1], &[-1, 0]])));
}
