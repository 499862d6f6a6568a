use grassline::adhm::{framing_a, lambda_from_v, quiver_dim_a, v_from_lambda};
use grassline::exactalg::{
    format_laurent, frac, parse_laurent, smith_normal_form, LaurentMatrix1, LaurentPoly1, LaurentPoly2, QMatrix,
    Rational, Ring,
};
use grassline::loopgroup::{coweight_leq, factorize, iota, stratum, Coweight, LoopElement};
use grassline::transitions::{act_torus, build_quad, verify_quad};
use proptest::prelude::*;

fn poly1() -> impl Strategy<Value = LaurentPoly1> {
    prop::collection::vec((-3i64..=3, -5i64..=5, 1i64..=3), 0..4)
        .prop_map(|ts| LaurentPoly1::from_terms(ts.into_iter().map(|(k, n, d)| (k, frac(n, d)))))
}

fn poly2() -> impl Strategy<Value = LaurentPoly2> {
    prop::collection::vec((-2i64..=2, -2i64..=2, -5i64..=5, 1i64..=3), 0..4)
        .prop_map(|ts| LaurentPoly2::from_terms(ts.into_iter().map(|(a, b, n, d)| ((a, b), frac(n, d)))))
}

fn elementary<R: Ring>(r: usize, i: usize, j: usize, p: R) -> grassline::exactalg::Matrix<R> {
    let mut m = grassline::exactalg::Matrix::identity(r);
    m.set(i, j, p);
    m
}

/// Products of elementary matrices `1 + c t^-k E_ij`, always in the opposite big cell.
fn loop_element() -> impl Strategy<Value = LoopElement> {
    (2usize..=3).prop_flat_map(|r| {
        prop::collection::vec((0..r, 0..r, 1i64..=2, -2i64..=2), 1..5).prop_map(move |fs| {
            let mut body = LaurentMatrix1::identity(r);
            for (i, j, k, c) in fs {
                if i != j && c != 0 {
                    body = body.mul(&elementary(
                        r,
                        i,
                        j,
                        LaurentPoly1::term(Rational::from_integer(c.into()), -k),
                    ));
                }
            }
            LoopElement::new(body).unwrap()
        })
    })
}

fn coweight(r: usize) -> impl Strategy<Value = Coweight> {
    prop::collection::vec(-3i64..=3, r - 1).prop_map(|mut v| {
        let s: i64 = v.iter().sum();
        v.push(-s);
        v.sort_unstable_by(|a, b| b.cmp(a));
        Coweight::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in poly1(), b in poly1(), c in poly1()) {
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert!(a.minus(&a).is_empty());
    }

    #[test]
    fn text_round_trip(a in poly1(), b in poly2()) {
        prop_assert_eq!(parse_laurent::<i64>(&format_laurent(&a, &["t"]), &["t"]).unwrap(), a);
        prop_assert_eq!(parse_laurent::<(i64, i64)>(&format_laurent(&b, &["t", "u"]), &["t", "u"]).unwrap(), b);
    }

    #[test]
    fn snf_reconstructs(
        exps in prop::collection::vec(0i64..=2, 2..=3),
        ops in prop::collection::vec((0usize..3, 0usize..3, 0i64..=1, -2i64..=2, any::<bool>()), 0..5),
    ) {
        let r = exps.len();
        let mut m = LaurentMatrix1::monomial_diagonal(&exps);
        for (i, j, k, c, left) in ops {
            let (i, j) = (i % r, j % r);
            if i == j || c == 0 {
                continue;
            }
            let e = elementary(r, i, j, LaurentPoly1::term(Rational::from_integer(c.into()), k));
            m = if left { e.mul(&m) } else { m.mul(&e) };
        }
        let s = smith_normal_form(&m).unwrap();
        prop_assert_eq!(s.reconstruct(), m);
        let mut got = s.diag.clone();
        let mut want = exps;
        got.sort_unstable();
        want.sort_unstable();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn factorization_reconstructs(g in loop_element()) {
        let f = factorize(&g).unwrap();
        prop_assert!(f.is_factorization_of(&g));
        prop_assert_eq!(f.lambda.entries().iter().sum::<i64>(), 0);
    }

    #[test]
    fn stratum_is_conjugation_invariant(g in loop_element(), c in -3i64..=3) {
        let r = g.rank();
        let p = elementary(r, r - 1, 0, Rational::from_integer(c.into()));
        prop_assert_eq!(stratum(&g.conjugate(&p).unwrap()).unwrap(), stratum(&g).unwrap());
    }

    #[test]
    fn iota_is_an_involution(g in loop_element()) {
        prop_assert_eq!(iota(&iota(&g)), g);
    }

    #[test]
    fn dominance_is_a_partial_order(a in coweight(3), b in coweight(3), c in coweight(3)) {
        let le = |x: &Coweight, y: &Coweight| coweight_leq(x, y).unwrap();
        prop_assert!(le(&a, &a));
        if le(&a, &b) && le(&b, &a) {
            prop_assert_eq!(&a, &b);
        }
        if le(&a, &b) && le(&b, &c) {
            prop_assert!(le(&a, &c));
        }
    }

    #[test]
    fn dimension_vector_round_trip(lam in (2usize..=5).prop_flat_map(coweight)) {
        let r = lam.rank();
        let v = v_from_lambda(&lam);
        prop_assert_eq!(lambda_from_v(&v, r).unwrap(), lam.clone());
        let e = lam.entries();
        let pairs: i64 = (0..r).flat_map(|i| (i + 1..r).map(move |j| e[i] - e[j])).sum();
        prop_assert_eq!(quiver_dim_a(&v, &framing_a(r)), pairs);
        prop_assert_eq!(Rational::from_integer(pairs.into()), lam.pair_rho() * Rational::from_integer(2.into()));
    }

    #[test]
    fn torus_actions_compose(g in loop_element(), a in 1i64..=3, b in -3i64..=-1, c in 1i64..=2, d in 1i64..=3) {
        let q = build_quad(&factorize(&g).unwrap()).unwrap();
        let (a, b, c, d) = (frac(a, 1), frac(b, 2), frac(c, 3), frac(d, 1));
        let twice = act_torus(&act_torus(&q, &a, &b).unwrap(), &c, &d).unwrap();
        let once = act_torus(&q, &(a * c), &(b * d)).unwrap();
        prop_assert!(verify_quad(&once).all_pass());
        prop_assert_eq!(twice, once);
    }
}

#[test]
fn conjugation_accepts_gl_and_rejects_singular() {
    let g = LoopElement::new(elementary(2, 0, 1, LaurentPoly1::term(frac(1, 1), -1))).unwrap();
    let scaled = QMatrix::diagonal(vec![frac(2, 1), frac(1, 1)]);
    assert_eq!(
        g.conjugate(&scaled).unwrap().body().get(0, 1),
        &LaurentPoly1::term(frac(2, 1), -1)
    );
    assert!(g.conjugate(&QMatrix::zeros(2, 2)).is_err());
}
