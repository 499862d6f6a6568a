//! Factorize a few loop elements and report their strata.

use grassline::exactalg::{format_matrix, parse_matrix};
use grassline::loopgroup::{factorize, stratum, LoopElement};

fn element(rows: &[&[&str]]) -> LoopElement {
    let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
    LoopElement::new(parse_matrix(&rows, &["t"]).unwrap()).unwrap()
}

fn main() {
    let samples = [
        element(&[&["1", "t^-1"], &["0", "1"]]),
        element(&[&["1 + t^-1", "t^-1"], &["-t^-1", "1 - t^-1"]]),
        element(&[&["1", "t^-1", "1/2*t^-2"], &["0", "1", "t^-1"], &["0", "0", "1"]]),
    ];
    for g in &samples {
        let f = factorize(g).unwrap();
        println!("gamma  = {:?}", format_matrix(g.body(), &["t"]));
        println!("lambda = {:?}", stratum(g).unwrap().entries());
        println!("q1     = {:?}", format_matrix(&f.q1, &["t"]));
        println!("q2     = {:?}", format_matrix(&f.q2, &["t"]));
        assert!(f.is_factorization_of(g));
        println!();
    }
}
