//! Dimension vectors, tau multiplicities and quiver-variety dimensions for small coweights.

use grassline::adhm::{
    chern_number, framing_a, framing_d, quiver_dim_a, quiver_dim_d, tau_multiplicities_a, v_from_lambda, vd_from_xi,
    xi_enumerate,
};
use grassline::loopgroup::Coweight;

fn main() {
    for r in 2..=4 {
        for lambda in Coweight::enumerate(r, 2).into_iter().filter(|l| !l.is_zero()) {
            let v = v_from_lambda(&lambda);
            println!(
                "{:?}: v = {v}, c2 = {}, dim = {}, tau = {:?}",
                lambda.entries(),
                chern_number(&v),
                quiver_dim_a(&v, &framing_a(r)),
                tau_multiplicities_a(&v, r).unwrap(),
            );
            for xi in xi_enumerate(&lambda) {
                if let Some(vd) = vd_from_xi(&xi).unwrap() {
                    println!(
                        "    ({},{}): v = {vd}, dim = {}",
                        xi.m_plus,
                        xi.m_minus,
                        quiver_dim_d(&vd, &framing_d(r))
                    );
                }
            }
        }
    }
}
