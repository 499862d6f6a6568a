//! Torus, swap, Weyl and constant-group actions on quadruples, compared with the loop side.

use grassline::exactalg::{frac, qmatrix};
use grassline::loopgroup::{factorize, iota, LoopElement};
use grassline::selftest::generated_gammas;
use grassline::transitions::{act_g, act_swap, act_torus, act_weyl, build_quad, extract_quad, SplitOptions};

fn quad(g: &LoopElement) -> grassline::transitions::TransitionQuad {
    build_quad(&factorize(g).unwrap()).unwrap()
}

fn main() {
    let opts = SplitOptions::default();
    let gammas = generated_gammas();
    let (mut agree, mut total) = (0, 0);
    for (_, g) in gammas.iter().filter(|(_, g)| g.rank() == 2) {
        let q = quad(g);
        let c = frac(3, 2);
        let scaled = extract_quad(&act_torus(&q, &c, &frac(1, 1)).unwrap(), opts).unwrap();
        let swapped = extract_quad(&act_swap(&q), opts).unwrap();
        let weyl = extract_quad(&act_weyl(&q), opts).unwrap();
        let p = qmatrix(&[&[1, 2], &[0, 1]]);
        let conj = extract_quad(&act_g(&q, &p).unwrap(), opts).unwrap();

        let ok =
            scaled == g.rescale(&c) && swapped == g.inverse() && weyl == iota(g) && conj == g.conjugate(&p).unwrap();
        agree += ok as usize;
        total += 1;
    }
    println!("{agree}/{total} rank-2 elements: torus, swap, Weyl and SL(2) actions match the loop side");
}
