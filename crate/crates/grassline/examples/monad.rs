//! The monad of a sampled ADHM datum: symbolic identity and fiber ranks.

use grassline::adhm::{monad_maps, sample_datum_a, sample_points, SampleOptions};
use grassline::exactalg::{format_qmatrix, format_rational};
use grassline::loopgroup::Coweight;

fn main() {
    let lambda = Coweight::new(vec![2, 0, -2]).unwrap();
    let d = sample_datum_a(&lambda, 3, SampleOptions::default()).unwrap();
    let m = monad_maps(&d.ungraded());
    println!("b.a = 0 coefficientwise: {}", m.symbolic_check().all_pass());
    for z in sample_points() {
        let label: Vec<String> = z.iter().map(format_rational).collect();
        println!(
            "[{}]: a injective and b surjective: {}",
            label.join(":"),
            m.fiber_ranks_ok(&z)
        );
        if label == ["1", "1", "1"] {
            let (a, b) = m.at(&z);
            println!("  a = {:?}", format_qmatrix(&a));
            println!("  b = {:?}", format_qmatrix(&b));
        }
    }
}
