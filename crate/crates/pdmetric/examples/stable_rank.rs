//! The profile against the empty diagram counts points by persistence:
//! under L∞, D_{X,∅}(t) = |{x : x₁ + 2t < x₂}| (the stable rank function).
//!
//! Run with: cargo run --example stable_rank

use pdmetric::{full_profile, profile_value, GroundMetric, PersistenceDiagram};

fn main() {
    let x = PersistenceDiagram::from_pairs(&[(0.0, 6.0), (0.0, 2.0), (1.0, 8.0), (3.0, 3.5)])
        .unwrap();
    let empty = PersistenceDiagram::default();
    let metric = GroundMetric::LInfinity;

    println!("profile of X against the empty diagram:");
    for &(t, v) in full_profile(&x, &empty, metric).steps() {
        println!("  D(t) = {v} from t = {t}");
    }

    for t in [0.0, 0.5, 1.0, 2.49, 2.5, 4.0] {
        let direct = x
            .points()
            .iter()
            .filter(|p| p.birth() + 2.0 * t < p.death())
            .count();
        let via_matching = profile_value(&x, &empty, t, metric);
        println!("t = {t}: closed form {direct}, matching {via_matching}");
        assert_eq!(direct, via_matching);
    }
}
