//! Computes the full bottleneck profile of two diagrams and queries it.
//!
//! Run with: cargo run --example bottleneck_profile

use pdmetric::{full_profile, GroundMetric, PersistenceDiagram};

fn main() {
    // the staircase fixture: Y is X with every death time shifted by 3
    let x = PersistenceDiagram::from_pairs(&[(0.0, 10.0), (0.0, 20.0), (0.0, 30.0), (0.0, 40.0)])
        .unwrap();
    let y = PersistenceDiagram::from_pairs(&[(0.0, 13.0), (0.0, 23.0), (0.0, 33.0), (0.0, 43.0)])
        .unwrap();
    let metric = GroundMetric::LInfinity;

    let profile = full_profile(&x, &y, metric);
    println!("steps of D_{{X,Y}} (threshold, value):");
    for &(t, value) in profile.steps() {
        println!("  D(t) = {value} for t in [{t}, next)");
    }

    // the profile is right-continuous: at the jump the new value holds
    for t in [0.0, 1.5, 3.0, 10.0] {
        println!("D({t}) = {}", profile.value_at(t));
    }

    // the serialized form used by the CLI
    let doc = profile.document(metric);
    println!("json: {}", serde_json::to_string(&doc).unwrap());
}
