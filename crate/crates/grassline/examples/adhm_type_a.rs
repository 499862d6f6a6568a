//! Sample graded ADHM data for a coweight and map them to the loop group.

use grassline::adhm::{monad_maps, sample_datum_a, theta_psi_a, v_from_lambda, SampleOptions};
use grassline::exactalg::format_matrix;
use grassline::loopgroup::{stratum, Coweight};

fn main() {
    for entries in [vec![1, -1], vec![2, 0, -2], vec![1, 1, -1, -1]] {
        let lambda = Coweight::new(entries).unwrap();
        println!("lambda {:?}, v = {}", lambda.entries(), v_from_lambda(&lambda));
        for seed in 0..3 {
            let d = sample_datum_a(&lambda, seed, SampleOptions::default()).unwrap();
            let g = theta_psi_a(&d).unwrap();
            let dagger = d.dagger().unwrap();
            println!(
                "  seed {seed}: stratum {:?}, dagger stratum {:?}, monad ok {}",
                stratum(&g).unwrap().entries(),
                stratum(&theta_psi_a(&dagger).unwrap()).unwrap().entries(),
                monad_maps(&d.ungraded()).symbolic_check().all_pass(),
            );
            if seed == 0 {
                println!("  gamma = {:?}", format_matrix(g.body(), &["t"]));
            }
        }
    }
}
