//! Reference Wasserstein distances next to the profile-based metrics, with
//! the exhaustive oracle as a cross-check on a small instance.
//!
//! Run with: cargo run --example wasserstein_reference

use pdmetric::oracle::{brute_wasserstein, SIZE_CAP};
use pdmetric::{bottleneck_distance, wasserstein_distance, GroundMetric, PersistenceDiagram};

fn main() {
    let x = PersistenceDiagram::from_pairs(&[(0.0, 4.0), (2.0, 9.0), (5.0, 5.5)]).unwrap();
    let y = PersistenceDiagram::from_pairs(&[(1.0, 5.0), (2.5, 8.0)]).unwrap();
    let metric = GroundMetric::LInfinity;

    for p in [1.0, 2.0, 3.0] {
        let w = wasserstein_distance(&x, &y, p, metric);
        println!("W_{p}(X,Y) = {w}");
    }
    let w_inf = bottleneck_distance(&x, &y, metric);
    println!("W_inf(X,Y) = {w_inf} (bottleneck, always <= any W_p here)");

    // the oracle enumerates every bijection; sizes are capped at SIZE_CAP
    println!("oracle cap: {SIZE_CAP} augmented points");
    for p in [1.0, 2.0] {
        let brute = brute_wasserstein(&x, &y, p, metric).unwrap();
        let fast = wasserstein_distance(&x, &y, p, metric);
        println!("p = {p}: assignment {fast} vs oracle {brute}");
        assert!((fast - brute).abs() <= 1e-12 * brute.max(1.0));
    }
}
