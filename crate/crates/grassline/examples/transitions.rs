//! Build the transition quadruple and triple of an element and recover it again.

use grassline::exactalg::{format_matrix, parse_matrix};
use grassline::loopgroup::{factorize, LoopElement};
use grassline::transitions::{
    build_quad, build_triple, extract_quad, extract_triple, verify_quad, verify_triple, SplitOptions,
};

fn main() {
    let rows = vec![
        vec!["1 + t^-1".to_string(), "t^-1".into()],
        vec!["-t^-1".into(), "1 - t^-1".into()],
    ];
    let g = LoopElement::new(parse_matrix(&rows, &["t"]).unwrap()).unwrap();
    let f = factorize(&g).unwrap();

    let q = build_quad(&f).unwrap();
    for (name, m) in [
        ("g01_00", &q.g01_00),
        ("g10_00", &q.g10_00),
        ("g11_01", &q.g11_01),
        ("g11_10", &q.g11_10),
    ] {
        println!("{name}: {:?}", format_matrix(m, &["t", "u"]));
    }
    let report = verify_quad(&q);
    println!("quad checks pass: {}", report.all_pass());
    assert_eq!(extract_quad(&q, SplitOptions::default()).unwrap(), g);

    let tr = build_triple(&f).unwrap();
    for (name, m) in [("g1_0", &tr.g1_0), ("g2_0", &tr.g2_0), ("g2_1", &tr.g2_1)] {
        println!("{name}: {:?}", format_matrix(m, &["s1", "s2"]));
    }
    println!("triple checks pass: {}", verify_triple(&tr).all_pass());
    assert_eq!(extract_triple(&tr).unwrap(), g);
}
