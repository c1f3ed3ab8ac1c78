//! Pairwise distance matrix over a family of diagrams, computed on a worker
//! pool; the in-process counterpart of `pdmetric matrix`.
//!
//! Run with: cargo run --example distance_matrix

use pdmetric::cli::{format_distance, pairwise_matrix, MetricSpec};
use pdmetric::{GroundMetric, ParamFunction, PersistenceDiagram};

fn main() {
    // three noisy "shapes": tight, spread, and spread with an extra feature
    let diagrams = vec![
        PersistenceDiagram::from_pairs(&[(0.0, 2.0), (0.1, 1.8)]).unwrap(),
        PersistenceDiagram::from_pairs(&[(0.0, 6.0), (0.2, 5.5)]).unwrap(),
        PersistenceDiagram::from_pairs(&[(0.0, 6.0), (0.2, 5.5), (1.0, 9.0)]).unwrap(),
        PersistenceDiagram::from_pairs(&[]).unwrap(),
    ];
    let names = ["tight", "spread", "spread+", "empty"];

    let spec = MetricSpec::prokhorov(ParamFunction::identity(), GroundMetric::LInfinity);
    let table = pairwise_matrix(&diagrams, &spec, 4);

    let n = diagrams.len();
    print!("{:>8}", "");
    for name in names {
        print!(" {name:>14}");
    }
    println!();
    for i in 0..n {
        print!("{:>8}", names[i]);
        for j in 0..n {
            print!(" {:>14}", format_distance(table[i * n + j]));
        }
        println!();
    }
}
