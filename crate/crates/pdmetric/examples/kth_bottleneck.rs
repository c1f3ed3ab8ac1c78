//! Bottleneck distances of every order read off one profile.
//!
//! The k-th bottleneck inf{t > 0 : D(t) < k} asks: how far must points move
//! once we may leave k - 1 of them unmatched? k = 1 is the classical
//! bottleneck distance.
//!
//! Run with: cargo run --example kth_bottleneck

use pdmetric::{full_profile, kth_bottleneck, GroundMetric, PersistenceDiagram};

fn main() {
    // a staircase of individual shifts: 3, 2, 1 and 0
    let x = PersistenceDiagram::from_pairs(&[(0.0, 10.0), (0.0, 20.0), (0.0, 30.0), (0.0, 40.0)])
        .unwrap();
    let z = PersistenceDiagram::from_pairs(&[(0.0, 10.0), (0.0, 21.0), (0.0, 32.0), (0.0, 43.0)])
        .unwrap();
    let metric = GroundMetric::LInfinity;

    let profile = full_profile(&x, &z, metric);
    println!("profile steps: {:?}", profile.steps());

    for k in 1..=4 {
        println!("{k}-th bottleneck = {}", kth_bottleneck(&x, &z, k, metric));
    }
}
