//! Self-test suites cross-checking the modules against each other on generated inputs.
//!
//! Every suite is deterministic: randomness comes from fixed seeds.

use std::fmt::Display;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adhm::{
    chern_number, framing_a, framing_d, lambda_from_v, monad_maps, quiver_dim_a, quiver_dim_d, sample_datum_a,
    sample_datum_d, sample_points, tau_multiplicities_d, theta_psi_a, theta_psi_d, v_from_lambda, vd_from_xi,
    xi_enumerate, DimVectorD, Quadruple, SampleOptions, XiClass,
};
use crate::cli::Bounds;
use crate::exactalg::{
    frac, parse_matrix, rat, smith_normal_form, LaurentMatrix1, LaurentMatrix2, LaurentPoly1, LaurentPoly2, QMatrix,
    Rational,
};
use crate::loopgroup::{
    classify_fixed, exp_embed, factorize, iota, lambda_of_nilpotent, pi, sigma_invariant, stratum, Coweight,
    Factorization, LoopElement, Partition,
};
use crate::report::{Check, CheckReport};
use crate::sl2lab::type_d_dims_sl2;
use crate::transitions::{
    act_gauge, act_gauge_triple, act_swap, act_torus, act_weyl, birkhoff_split_u, build_quad, build_triple,
    extract_quad, extract_triple, verify_quad, verify_triple, GaugeElement, SplitOptions, TripleGauge,
};

/// Suite names, in execution order.
pub const SUITES: [&str; 9] = [
    "paper-examples",
    "normalizer",
    "iota-pi-e",
    "type-a",
    "glr",
    "combinatorics",
    "dimensions",
    "monad",
    "properties",
];

/// Runs one suite by name; `None` for an unknown name.
pub fn run_suite(name: &str, bounds: &Bounds) -> Option<CheckReport> {
    let mut s = Suite::new(bounds);
    match name {
        "paper-examples" => s.worked_examples(),
        "normalizer" => s.normalizer(),
        "iota-pi-e" => s.iota_pi_e(),
        "type-a" => s.type_a(),
        "glr" => s.glr(),
        "combinatorics" => s.combinatorics(),
        "dimensions" => s.dimensions(),
        "monad" => s.monad(),
        "properties" => s.properties(),
        _ => return None,
    }
    Some(s.rep)
}

struct Suite {
    rep: CheckReport,
    split: SplitOptions,
    sample: SampleOptions,
}

impl Suite {
    fn new(bounds: &Bounds) -> Self {
        Suite {
            rep: CheckReport::new(),
            split: SplitOptions {
                max_order: bounds.split_max_order,
            },
            sample: SampleOptions {
                retries: bounds.sample_retries,
            },
        }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        self.rep.push(Check::from_bool(name, ok, witness));
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: impl Into<String>, got: &T, want: &T) {
        self.check(name, got == want, || format!("got {got:?}, expected {want:?}"));
    }

    fn ok<T, E: Display>(&mut self, name: impl Into<String>, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.rep.push(Check::fail(name, e.to_string()));
                None
            }
        }
    }

    fn report(&mut self, prefix: &str, rep: CheckReport) {
        let failures: Vec<String> = rep
            .failures()
            .map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))
            .collect();
        self.check(prefix, failures.is_empty(), || failures.join("; "));
    }

    fn worked_examples(&mut self) {
        let gamma = elem(&[&["1", "t^-1"], &["0", "1"]]);
        let f = Factorization {
            q1: m1(&[&["0", "1"], &["-1", "t"]]),
            lambda: cw(&[1, -1]),
            q2: m1(&[&["1", "0"], &["t", "1"]]),
        };
        self.check("special: factorization", f.is_factorization_of(&gamma), String::new);
        if let Some(s) = self.ok("special: stratum", stratum(&gamma)) {
            self.eq("special: stratum", &s, &cw(&[1, -1]));
        }
        if let Some(q) = self.ok("special: build_quad", build_quad(&f)) {
            self.eq(
                "special: g01_00",
                &q.g01_00,
                &m2(&[&["0", "u^-1"], &["-u", "t"]], ["t", "u"]),
            );
            self.eq(
                "special: g10_00",
                &q.g10_00,
                &m2(&[&["t^-1", "0"], &["-u", "t"]], ["t", "u"]),
            );
            self.eq("special: g11_01", &q.g11_01, &LaurentMatrix2::identity(2));
            self.eq(
                "special: g11_10",
                &q.g11_10,
                &m2(&[&["1", "t^-1*u^-1"], &["0", "1"]], ["t", "u"]),
            );
            self.report("special: verify_quad", verify_quad(&q));
            if let Some(g) = self.ok("special: extract_quad", extract_quad(&q, self.split)) {
                self.eq("special: extract_quad", &g, &gamma);
            }
        }
        if let Some(tr) = self.ok("special-p2: build_triple", build_triple(&f)) {
            self.eq(
                "special-p2: g1_0",
                &tr.g1_0,
                &m2(&[&["s1^-1", "0"], &["-s2", "s1"]], ["s1", "s2"]),
            );
            self.eq(
                "special-p2: g2_0",
                &tr.g2_0,
                &m2(&[&["0", "s2^-1"], &["-s2", "s1"]], ["s1", "s2"]),
            );
            self.eq(
                "special-p2: g2_1",
                &tr.g2_1,
                &m2(&[&["1", "s1^-1*s2^-1"], &["0", "1"]], ["s1", "s2"]),
            );
            self.report("special-p2: verify_triple", verify_triple(&tr));
            if let Some(g) = self.ok("special-p2: extract_triple", extract_triple(&tr)) {
                self.eq("special-p2: extract_triple", &g, &gamma);
            }
        }
        if let Some(s) = self.ok("special: sigma", sigma_invariant(&gamma, &f)) {
            self.eq("special: sigma", &s, &crate::exactalg::qmatrix(&[&[0, 1], &[-1, 0]]));
        }
        if let Some(c) = self.ok("special: classify_fixed", classify_fixed(&gamma)) {
            self.eq(
                "special: classify_fixed",
                &(c.lambda, c.m_plus, c.m_minus),
                &(cw(&[1, -1]), 0, 0),
            );
        }
        let lam = cw(&[3, 0, 0, -3]);
        let got: Vec<(usize, usize)> = xi_enumerate(&lam).iter().map(|x| (x.m_plus, x.m_minus)).collect();
        self.eq("disconnected: xi", &got, &vec![(2, 0), (0, 2)]);
    }

    fn normalizer(&mut self) {
        let mut count = 0;
        for (label, gamma) in generated_gammas() {
            let Some(f) = self.ok(format!("{label}: factorize"), factorize(&gamma)) else {
                continue;
            };
            let Some(q) = self.ok(format!("{label}: build_quad"), build_quad(&f)) else {
                continue;
            };
            self.report(&format!("{label}: verify_quad"), verify_quad(&q));
            let (a, b) = (frac(2, 3), rat(-3));
            if let Some(qa) = self.ok(format!("{label}: act_torus"), act_torus(&q, &a, &b)) {
                if let Some(g) = self.ok(format!("{label}: extract torus"), extract_quad(&qa, self.split)) {
                    self.eq(format!("{label}: torus"), &g, &gamma.rescale(&(a * b)));
                }
            }
            if let Some(g) = self.ok(
                format!("{label}: extract swap"),
                extract_quad(&act_swap(&q), self.split),
            ) {
                self.eq(format!("{label}: swap"), &g, &gamma.inverse());
            }
            if let Some(g) = self.ok(
                format!("{label}: extract weyl"),
                extract_quad(&act_weyl(&q), self.split),
            ) {
                self.eq(format!("{label}: weyl"), &g, &iota(&gamma));
            }
            count += 1;
        }
        self.check("case count >= 50", count >= 50, || count.to_string());
    }

    fn iota_pi_e(&mut self) {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for r in 2..=5 {
            for mu in Partition::all(r) {
                let label = format!("r={r} mu={:?}", mu.parts());
                let p = random_unimodular(r, 2 * r, &mut rng);
                let x = p.mul(&mu.jordan_matrix()).mul(&p.inverse().expect("unimodular"));
                let Some(g) = self.ok(format!("{label}: exp_embed"), exp_embed(&x)) else {
                    continue;
                };
                self.eq(format!("{label}: pi(e(x))"), &pi(&g), &x);
                self.eq(format!("{label}: iota(e(x))"), &iota(&g), &g);
                let lam = lambda_of_nilpotent(&x).expect("nilpotent");
                if let Some(s) = self.ok(format!("{label}: stratum"), stratum(&g)) {
                    self.eq(format!("{label}: stratum(e(x))"), &s, &lam);
                }
                if lam.is_small() {
                    let back = exp_embed(&pi(&g)).expect("nilpotent");
                    self.eq(format!("{label}: e(pi(g))"), &back, &g);
                }
            }
        }
        for (label, gamma) in generated_gammas().into_iter().take(24) {
            let i = iota(&gamma);
            self.eq(format!("{label}: iota^2"), &iota(&i), &gamma);
            self.eq(format!("{label}: pi(iota)"), &pi(&i), &pi(&gamma));
        }
    }

    fn type_a(&mut self) {
        let cases = type_a_cases();
        let mut count = 0;
        for (lam, seed) in &cases {
            let label = format!("lambda={:?} seed={seed}", lam.entries());
            let Some(d) = self.ok(format!("{label}: sample"), sample_datum_a(lam, *seed, self.sample)) else {
                continue;
            };
            let Some(g) = self.ok(format!("{label}: theta_psi"), theta_psi_a(&d)) else {
                continue;
            };
            if let (Some(s), Some(l)) = (
                self.ok(format!("{label}: stratum"), stratum(&g)),
                self.ok(format!("{label}: lambda_from_v"), lambda_from_v(d.dims(), lam.rank())),
            ) {
                self.eq(format!("{label}: stratum = lambda_from_v"), &s, &l);
                self.eq(format!("{label}: lambda_from_v"), &l, lam);
            }
            let Some(dd) = self.ok(format!("{label}: dagger"), d.dagger()) else {
                continue;
            };
            if let Some(h) = self.ok(format!("{label}: theta_psi dagger"), theta_psi_a(&dd)) {
                self.eq(format!("{label}: dagger vs iota"), &h, &iota(&g));
            }
            count += 1;
        }
        self.check("datum count >= 30", count >= 30, || count.to_string());
    }

    fn glr(&mut self) {
        for (seed, xi) in glr_cases().iter().enumerate() {
            let label = format!("xi={:?},{},{}", xi.lambda.entries(), xi.m_plus, xi.m_minus);
            let Some(vd) = self.ok(format!("{label}: vd"), vd_from_xi(xi)) else {
                continue;
            };
            let v1 = v_from_lambda(&xi.lambda).get(1);
            self.check(
                format!("{label}: empty iff m_minus > v1"),
                vd.is_none() == (xi.m_minus > v1),
                || format!("v1 = {v1}"),
            );
            if vd.is_none() {
                continue;
            }
            let Some(d) = self.ok(format!("{label}: sample"), sample_datum_d(xi, seed as u64, self.sample)) else {
                continue;
            };
            let Some(g) = self.ok(format!("{label}: theta_psi_d"), theta_psi_d(&d)) else {
                continue;
            };
            if let Some(h) = self.ok(format!("{label}: theta_psi_a"), theta_psi_a(&d.expand())) {
                self.eq(format!("{label}: D = A∘expand"), &g, &h);
            }
            self.eq(format!("{label}: iota-fixed"), &iota(&g), &g);
            if let Some(c) = self.ok(format!("{label}: classify_fixed"), classify_fixed(&g)) {
                self.eq(
                    format!("{label}: classify_fixed"),
                    &(c.lambda, c.m_plus, c.m_minus),
                    &(xi.lambda.clone(), xi.m_plus, xi.m_minus),
                );
            }
        }
    }

    fn combinatorics(&mut self) {
        let lam = cw(&[3, 0, 0, -3]);
        let dims: Vec<Option<String>> = xi_enumerate(&lam)
            .iter()
            .map(|x| vd_from_xi(x).ok().flatten().map(|v| v.to_string()))
            .collect();
        self.eq(
            "disconnected: dims",
            &dims,
            &vec![Some("(2, 1, 2, 1)".to_string()), Some("(3, 0, 2, 1)".to_string())],
        );
        let v = v_from_lambda(&lam);
        let got: Vec<(i64, usize)> = v.entries().iter().map(|(&k, &d)| (k, d)).collect();
        self.eq("disconnected: v", &got, &vec![(-2, 1), (-1, 2), (0, 3), (1, 2), (2, 1)]);
        self.eq("disconnected: chern", &chern_number(&v), &9);
        if let Some(l) = self.ok("disconnected: lambda_from_v", lambda_from_v(&v, 4)) {
            self.eq("disconnected: lambda_from_v", &l, &lam);
        }
        if let Some(t) = self.ok(
            "disconnected: tau_d",
            tau_multiplicities_d(&DimVectorD::new(2, 1, vec![2, 1]), 4),
        ) {
            self.eq("disconnected: tau_d", &t.to_string(), &"(2, 0, 0, 0, 1)".to_string());
        }
        for m in 1..=10i64 {
            let got: Vec<(usize, usize)> = xi_enumerate(&cw(&[m, -m]))
                .iter()
                .map(|x| (x.m_plus, x.m_minus))
                .collect();
            let want = if m % 2 == 0 { vec![] } else { vec![(0, 0)] };
            self.eq(format!("xi(({m},-{m}))"), &got, &want);
        }
        for m in [1u64, 3, 5] {
            let Some(d) = self.ok(format!("sl2 m={m}"), type_d_dims_sl2(m)) else {
                continue;
            };
            let mi = m as usize;
            let explicit = DimVectorD::new(mi.div_ceil(2), (mi - 1) / 2, (1..mi).rev().collect());
            self.eq(format!("sl2 m={m}: explicit"), &d.dims, &explicit);
            let xi = XiClass::new(cw(&[m as i64, -(m as i64)]), 0, 0).expect("valid class");
            self.eq(
                format!("sl2 m={m}: vd_from_xi"),
                &vd_from_xi(&xi).ok().flatten(),
                &Some(explicit),
            );
            self.eq(format!("sl2 m={m}: dim"), &d.quiver_dim, &(m as i64 + 1));
        }
    }

    fn dimensions(&mut self) {
        for r in 1..=5 {
            for lam in Coweight::enumerate(r, 4) {
                let label = format!("lambda={:?}", lam.entries());
                let e = lam.entries();
                let oracle: i64 = (0..r)
                    .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
                    .map(|(i, j)| e[i] - e[j])
                    .sum();
                self.eq(
                    format!("{label}: A"),
                    &quiver_dim_a(&v_from_lambda(&lam), &framing_a(r)),
                    &oracle,
                );
                for xi in xi_enumerate(&lam) {
                    let Some(Some(vd)) = self.ok(format!("{label}: vd"), vd_from_xi(&xi)) else {
                        continue;
                    };
                    let diff = xi.m_plus as i64 - xi.m_minus as i64;
                    let want = lam.pair_rho() + frac((r * r) as i64 - diff * diff, 4);
                    let got = Rational::from_integer(quiver_dim_d(&vd, &framing_d(r)).into());
                    self.eq(format!("{label} ({},{}): D", xi.m_plus, xi.m_minus), &got, &want);
                }
            }
        }
    }

    fn monad(&mut self) {
        let mut data: Vec<(String, Quadruple)> = Vec::new();
        for (lam, seed) in type_a_cases() {
            let label = format!("A lambda={:?} seed={seed}", lam.entries());
            match sample_datum_a(&lam, seed, self.sample) {
                Ok(d) => data.push((label, d.ungraded())),
                Err(e) => self.rep.push(Check::fail(label, e.to_string())),
            }
        }
        for (seed, xi) in glr_cases().iter().enumerate() {
            if !matches!(vd_from_xi(xi), Ok(Some(_))) {
                continue;
            }
            let label = format!("D xi={:?},{},{}", xi.lambda.entries(), xi.m_plus, xi.m_minus);
            match sample_datum_d(xi, seed as u64, self.sample) {
                Ok(d) => data.push((label, d.expand().ungraded())),
                Err(e) => self.rep.push(Check::fail(label, e.to_string())),
            }
        }
        for (label, q) in &data {
            let m = monad_maps(q);
            self.report(&format!("{label}: ba = 0"), m.symbolic_check());
            for z in sample_points() {
                self.check(format!("{label}: ranks at {z:?}"), m.fiber_ranks_ok(&z), String::new);
            }
        }
        self.check("datum count", data.len() >= 30, || data.len().to_string());
    }

    fn properties(&mut self) {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for case in 0..40 {
            let r = 2 + case % 3;
            let m = random_snf_input(r, &mut rng);
            if let Some(s) = self.ok(format!("snf {case}"), smith_normal_form(&m)) {
                self.eq(format!("snf {case}: reconstruct"), &s.reconstruct(), &m);
                let chain = s.diag.windows(2).all(|w| w[0] <= w[1]);
                self.check(format!("snf {case}: divisibility"), chain, || format!("{:?}", s.diag));
                let unimodular = s.left.det().is_constant() && s.right.det().is_constant();
                self.check(format!("snf {case}: unimodular"), unimodular, String::new);
            }
        }
        for case in 0..40 {
            let r = 2 + case % 3;
            let a = unipotent2(r, 3, &mut rng, |g| (g.gen_range(-2..=-1), g.gen_range(-2..=-1)));
            let b = unipotent2(r, 3, &mut rng, |g| (g.gen_range(0..=2), g.gen_range(-2..=-1)));
            let g = a.mul(&b);
            if let Some((x, y)) = self.ok(format!("split {case}"), birkhoff_split_u(&g, self.split)) {
                self.eq(format!("split {case}: reconstruct"), &x.mul(&y), &g);
                self.check(format!("split {case}: unique"), x == a && y == b, String::new);
            }
        }
        for (label, gamma) in generated_gammas().into_iter().step_by(6) {
            let Ok(f) = factorize(&gamma) else { continue };
            let (Ok(q), Ok(tr)) = (build_quad(&f), build_triple(&f)) else {
                continue;
            };
            let r = gamma.rank();
            for k in 0..20 {
                let h = GaugeElement::random(r, 2, &mut rng);
                if let Some(q2) = self.ok(format!("{label} gauge {k}"), act_gauge(&q, &h)) {
                    self.report(&format!("{label} gauge {k}: verify"), verify_quad(&q2));
                    if let Some(g) = self.ok(format!("{label} gauge {k}: extract"), extract_quad(&q2, self.split)) {
                        self.eq(format!("{label} gauge {k}: invariant"), &g, &gamma);
                    }
                }
                let h = TripleGauge::random(r, 2, &mut rng);
                if let Some(t2) = self.ok(format!("{label} triple gauge {k}"), act_gauge_triple(&tr, &h)) {
                    self.report(&format!("{label} triple gauge {k}: verify"), verify_triple(&t2));
                }
            }
        }
    }
}

fn cw(e: &[i64]) -> Coweight {
    Coweight::new(e.to_vec()).expect("valid coweight")
}

fn strings(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect()
}

fn m1(rows: &[&[&str]]) -> LaurentMatrix1 {
    parse_matrix(&strings(rows), &["t"]).expect("literal matrix")
}

fn m2(rows: &[&[&str]], vars: [&str; 2]) -> LaurentMatrix2 {
    parse_matrix(&strings(rows), &vars).expect("literal matrix")
}

fn elem(rows: &[&[&str]]) -> LoopElement {
    LoopElement::new(m1(rows)).expect("literal loop element")
}

fn random_unimodular<R: Rng>(r: usize, factors: usize, rng: &mut R) -> QMatrix {
    let mut p = QMatrix::identity(r);
    for _ in 0..factors {
        let i = rng.gen_range(0..r);
        let j = (i + rng.gen_range(1..r)) % r;
        let mut e = QMatrix::identity(r);
        e.set(i, j, rat(rng.gen_range(-2..=2)));
        p = p.mul(&e);
    }
    p
}

/// Products of one or two exponentials of conjugated Jordan matrices, 18 per rank in `{2, 3, 4}`.
pub fn generated_gammas() -> Vec<(String, LoopElement)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut out = Vec::new();
    for r in 2..=4usize {
        let parts: Vec<Partition> = Partition::all(r).into_iter().filter(|p| p.parts()[0] > 1).collect();
        for k in 0..18 {
            let mut g = LoopElement::identity(r);
            for _ in 0..1 + k % 2 {
                let mu = &parts[rng.gen_range(0..parts.len())];
                let p = random_unimodular(r, 2 * r, &mut rng);
                let x = p.mul(&mu.jordan_matrix()).mul(&p.inverse().expect("unimodular"));
                g = g.mul(&exp_embed(&x).expect("nilpotent"));
            }
            out.push((format!("r={r} #{k}"), g));
        }
    }
    out
}

/// Nonzero coweights of rank 2 to 5 with `Σλ² ≤ 20`, each with two seeds.
fn type_a_cases() -> Vec<(Coweight, u64)> {
    (2..=5)
        .flat_map(|r| Coweight::enumerate(r, 4))
        .filter(|l| !l.is_zero() && l.sum_of_squares() <= 20)
        .flat_map(|l| [(l.clone(), 0), (l, 1)])
        .enumerate()
        .map(|(i, (l, s))| (l, 100 * i as u64 + s))
        .collect()
}

fn glr_cases() -> Vec<XiClass> {
    (1..=4)
        .flat_map(|r| Coweight::enumerate(r, 4))
        .filter(|l| l.is_symmetric() && l.sum_of_squares() <= 20)
        .flat_map(|l| xi_enumerate(&l))
        .collect()
}

fn random_snf_input<R: Rng>(r: usize, rng: &mut R) -> LaurentMatrix1 {
    let poly = |rng: &mut R| LaurentPoly1::from_terms((0..=2).map(|k| (k, rat(rng.gen_range(-2..=2)))));
    let mut left = LaurentMatrix1::identity(r);
    let mut right = LaurentMatrix1::identity(r);
    for _ in 0..2 * r {
        for m in [&mut left, &mut right] {
            let i = rng.gen_range(0..r);
            let j = (i + rng.gen_range(1..r)) % r;
            let mut e = LaurentMatrix1::identity(r);
            e.set(i, j, poly(rng));
            *m = m.mul(&e);
        }
    }
    let exps: Vec<i64> = (0..r).map(|_| rng.gen_range(0..=2)).collect();
    let mut d = LaurentMatrix1::monomial_diagonal(&exps);
    d.set(0, 0, d.get(0, 0).scale(&rat(rng.gen_range(1..=3))));
    left.mul(&d).mul(&right)
}

fn unipotent2<R: Rng>(r: usize, factors: usize, rng: &mut R, mono: impl Fn(&mut R) -> (i64, i64)) -> LaurentMatrix2 {
    let mut acc = LaurentMatrix2::identity(r);
    for _ in 0..factors {
        let i = rng.gen_range(0..r);
        let j = (i + rng.gen_range(1..r)) % r;
        let mut e = LaurentMatrix2::identity(r);
        let c = if rng.gen_bool(0.5) { Rational::one() } else { rat(-2) };
        e.set(i, j, LaurentPoly2::monomial(c, mono(rng)));
        acc = acc.mul(&e);
    }
    acc
}
