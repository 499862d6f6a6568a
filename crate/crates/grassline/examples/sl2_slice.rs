//! The rank-two picture: membership tests, sl2-triples and the type D dimension count.

use grassline::exactalg::{format_qmatrix, parse_matrix};
use grassline::loopgroup::Partition;
use grassline::sl2lab::{sl2_membership, sl2_triple, type_d_dims_sl2};

fn main() {
    for (m, entry) in [(1, "t^-1"), (2, "t^-2"), (2, "t^-1"), (3, "t^-3")] {
        let rows = vec![vec!["1".to_string(), entry.to_string()], vec!["0".into(), "1".into()]];
        let g = parse_matrix(&rows, &["t"]).unwrap();
        let r = sl2_membership(&g, m);
        println!(
            "m={m}, upper entry {entry}: stratum {}, fixed {}, closure {}, fixed closure {}",
            r.in_stratum, r.in_fixed, r.in_closure, r.in_fixed_closure
        );
    }

    for parts in [vec![2], vec![3], vec![2, 2], vec![3, 1]] {
        let mu = Partition::new(parts.clone()).unwrap();
        let tr = sl2_triple(&mu);
        println!(
            "{parts:?}: h = {:?}, relations hold: {}",
            format_qmatrix(&tr.h),
            tr.check().all_pass()
        );
    }

    for m in [1, 3, 5, 7] {
        let d = type_d_dims_sl2(m).unwrap();
        println!(
            "m={m}: v = {}, dim = {} (expected {})",
            d.dims, d.quiver_dim, d.expected_dim
        );
    }
}
