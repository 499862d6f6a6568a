//! Folded data for iota-fixed strata: enumerate xi, sample, classify.

use grassline::adhm::{sample_datum_d, theta_psi_d, vd_from_xi, xi_enumerate, SampleOptions};
use grassline::loopgroup::{classify_fixed, Coweight};

fn main() {
    for entries in [vec![1, 0, -1], vec![3, 0, 0, -3], vec![2, 1, -1, -2]] {
        let lambda = Coweight::new(entries).unwrap();
        for xi in xi_enumerate(&lambda) {
            let label = format!("{:?} ({},{})", lambda.entries(), xi.m_plus, xi.m_minus);
            match vd_from_xi(&xi).unwrap() {
                None => println!("{label}: empty"),
                Some(vd) => {
                    let d = sample_datum_d(&xi, 7, SampleOptions::default()).unwrap();
                    let c = classify_fixed(&theta_psi_d(&d).unwrap()).unwrap();
                    println!("{label}: v = {vd}, classified as ({},{})", c.m_plus, c.m_minus);
                }
            }
        }
    }
}
