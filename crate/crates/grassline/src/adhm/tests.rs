use std::collections::BTreeMap;

use super::*;
use crate::exactalg::{parse_laurent, qmatrix, rat, LaurentMatrix1, QMatrix};
use crate::loopgroup::{classify_fixed, iota, stratum, Coweight};

fn cw(e: &[i64]) -> Coweight {
    Coweight::new(e.to_vec()).unwrap()
}

fn delta0() -> AdhmDatumA {
    AdhmDatumA::new(
        2,
        DimVectorA::new(BTreeMap::from([(0, 1)])),
        BTreeMap::new(),
        BTreeMap::new(),
        qmatrix(&[&[1, 0]]),
        qmatrix(&[&[0], &[1]]),
    )
    .unwrap()
}

fn lower_unipotent() -> LaurentMatrix1 {
    let p = |s: &str| parse_laurent::<i64>(s, &["t"]).unwrap();
    LaurentMatrix1::from_rows(vec![vec![p("1"), p("0")], vec![p("t^-1"), p("1")]]).unwrap()
}

#[test]
fn delta0_example() {
    let d = delta0();
    assert!(d.validate().all_pass());
    assert_eq!(d.stability(), (true, true));
    let g = theta_psi_a(&d).unwrap();
    assert_eq!(g.body(), &lower_unipotent());
    assert_eq!(lambda_from_v(d.dims(), 2).unwrap(), cw(&[1, -1]));
    let dd = d.dagger().unwrap();
    assert_eq!(theta_psi_a(&dd).unwrap(), iota(&g));
}

#[test]
fn bad_ij_fails_validation() {
    let d = AdhmDatumA::new(
        2,
        DimVectorA::new(BTreeMap::from([(0, 1)])),
        BTreeMap::new(),
        BTreeMap::new(),
        qmatrix(&[&[1, 0]]),
        qmatrix(&[&[1], &[0]]),
    )
    .unwrap();
    assert!(!d.validate().all_pass());
    assert_eq!(theta_psi_a(&d).unwrap_err().code(), "InvalidDatum");
}

#[test]
fn degenerate_stability() {
    let q = Quadruple::new(
        QMatrix::zeros(1, 1),
        QMatrix::zeros(1, 1),
        QMatrix::zeros(1, 2),
        qmatrix(&[&[0], &[1]]),
    )
    .unwrap();
    assert!(!q.is_costable());
    let q = Quadruple::new(
        QMatrix::zeros(1, 1),
        QMatrix::zeros(1, 1),
        qmatrix(&[&[1, 0]]),
        QMatrix::zeros(2, 1),
    )
    .unwrap();
    assert!(!q.is_stable());
}

#[test]
fn gl2_action_examples() {
    let d = sample_datum_a(&cw(&[2, 0, -2]), 7, SampleOptions::default()).unwrap();
    let q = d.ungraded();
    assert_eq!(q.act_gl2(&QMatrix::identity(2)).unwrap(), q);
    let rot = q.act_gl2(&qmatrix(&[&[0, 1], &[-1, 0]])).unwrap();
    assert_eq!(
        rot,
        Quadruple::new(q.b2.neg(), q.b1.clone(), q.i.clone(), q.j.clone()).unwrap()
    );
    let diag = q.act_gl2(&qmatrix(&[&[2, 0], &[0, 3]])).unwrap();
    assert_eq!(diag.b1, q.b1.scale(&rat(2)));
    assert_eq!(diag.b2, q.b2.scale(&rat(3)));
    assert_eq!(diag.i, q.i.scale(&rat(6)));
    assert!(diag.validate().all_pass());
    assert_eq!(diag.stability(), (true, true));
    assert_eq!(
        q.act_gl2(&qmatrix(&[&[1, 1], &[1, 1]])).unwrap_err().code(),
        "SingularMatrix"
    );
}

#[test]
fn sample_small_cases() {
    let d = sample_datum_a(&cw(&[1, -1]), 1, SampleOptions::default()).unwrap();
    assert_eq!(d.dims().entries(), &BTreeMap::from([(0, 1)]));
    let d = sample_datum_a(&cw(&[0, 0, 0]), 1, SampleOptions::default()).unwrap();
    assert_eq!(d.dims().total(), 0);
    assert!(theta_psi_a(&d).unwrap().is_identity());
    let d = sample_datum_a(&cw(&[2, 0, -2]), 7, SampleOptions::default()).unwrap();
    let g = theta_psi_a(&d).unwrap();
    assert_eq!(stratum(&g).unwrap(), cw(&[2, 0, -2]));
}

#[test]
fn sampled_type_a_properties() {
    for (seed, lam) in [
        &[1, -1][..],
        &[1, 0, -1],
        &[2, -2],
        &[1, 1, -1, -1],
        &[2, -1, -1],
        &[3, -1, -2],
    ]
    .iter()
    .enumerate()
    {
        let lam = cw(lam);
        let d = sample_datum_a(&lam, seed as u64, SampleOptions::default()).unwrap();
        let g = theta_psi_a(&d).unwrap();
        assert_eq!(stratum(&g).unwrap(), lam);
        assert_eq!(stratum(&g).unwrap(), lambda_from_v(d.dims(), lam.rank()).unwrap());
        let dd = d.dagger().unwrap();
        assert_eq!(theta_psi_a(&dd).unwrap(), iota(&g));
        assert_eq!(dd.dagger().unwrap(), d.negate_b());
        let m = monad_maps(&d.ungraded());
        assert!(m.symbolic_check().all_pass());
        for z in sample_points() {
            assert!(m.fiber_ranks_ok(&z));
        }
    }
}

#[test]
fn base_change_preserves_everything() {
    let d = sample_datum_a(&cw(&[2, 0, -2]), 3, SampleOptions::default()).unwrap();
    let mut g = BTreeMap::new();
    for (&k, &n) in d.dims().entries() {
        g.insert(
            k,
            QMatrix::from_fn(n, n, |a, b| if a <= b { rat(1 + (a + b) as i64) } else { rat(0) }),
        );
    }
    let e = d.base_change(&g).unwrap();
    assert!(e.validate().all_pass());
    assert_eq!(e.stability(), (true, true));
    assert_eq!(theta_psi_a(&e).unwrap(), theta_psi_a(&d).unwrap());
}

#[test]
fn folded_small_example() {
    let maps = FoldedMaps {
        i_map: Some(qmatrix(&[&[1, 0]])),
        j_map: Some(qmatrix(&[&[0], &[1]])),
        ..FoldedMaps::default()
    };
    let d = AdhmDatumD::new(2, DimVectorD::new(1, 0, vec![]), maps).unwrap();
    assert!(d.validate().all_pass());
    let g = theta_psi_d(&d).unwrap();
    assert_eq!(g.body(), &lower_unipotent());
    assert_eq!(iota(&g), g);
    assert_eq!(theta_psi_a(&d.expand()).unwrap(), g);
}

#[test]
fn disconnected_example_samples() {
    let lam = cw(&[3, 0, 0, -3]);
    let xis = xi_enumerate(&lam);
    let expected = [((2, 0), "(2, 1, 2, 1)"), ((0, 2), "(3, 0, 2, 1)")];
    assert_eq!(xis.len(), 2);
    for (xi, ((mp, mm), dims)) in xis.iter().zip(expected) {
        assert_eq!((xi.m_plus, xi.m_minus), (mp, mm));
        assert_eq!(vd_from_xi(xi).unwrap().unwrap().to_string(), dims);
        let d = sample_datum_d(xi, 5, SampleOptions::default()).unwrap();
        assert!(d.expand().validate().all_pass());
        let g = theta_psi_d(&d).unwrap();
        assert_eq!(g, theta_psi_a(&d.expand()).unwrap());
        assert_eq!(iota(&g), g);
        let c = classify_fixed(&g).unwrap();
        assert_eq!((c.lambda, c.m_plus, c.m_minus), (lam.clone(), mp, mm));
    }
}

#[test]
fn empty_stratum_is_reported() {
    let xi = XiClass::new(cw(&[1, 0, 0, -1]), 0, 2).unwrap();
    assert_eq!(vd_from_xi(&xi).unwrap(), None);
    assert_eq!(
        sample_datum_d(&xi, 0, SampleOptions::default()).unwrap_err().code(),
        "EmptyStratum"
    );
}

#[test]
fn monad_at_coordinate_point() {
    let m = monad_maps(&delta0().ungraded());
    let (a, b) = m.at(&[rat(0), rat(1), rat(0)]);
    assert_eq!(a, qmatrix(&[&[-1], &[0], &[0], &[0]]));
    assert_eq!(b, qmatrix(&[&[0, -1, 0, 0]]));
}
