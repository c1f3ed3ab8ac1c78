//! Low-persistence clutter leaves the Prokhorov distance alone while the
//! 1-Wasserstein distance keeps growing with every added point.
//!
//! Run with: cargo run --example noise_robustness

use pdmetric::{prokhorov_distance, wasserstein_distance, GroundMetric, ParamFunction,
               PersistenceDiagram};

fn main() {
    let x = PersistenceDiagram::from_pairs(&[(0.0, 8.0), (1.0, 7.0)]).unwrap();
    let y = PersistenceDiagram::from_pairs(&[(0.5, 9.0), (1.0, 5.5)]).unwrap();
    let metric = GroundMetric::LInfinity;
    let f = ParamFunction::identity();

    let pi = prokhorov_distance(&x, &y, &f, metric);
    println!("clean:    π = {pi}, W₁ = {}", wasserstein_distance(&x, &y, 1.0, metric));

    // sprinkle noise along the diagonal, each point of diagonal distance
    // 0.4·π, well below π and away from the points of X
    for count in [1usize, 5, 25, 125] {
        let mut pairs: Vec<(f64, f64)> =
            y.points().iter().map(|p| (p.birth(), p.death())).collect();
        for i in 0..count {
            let birth = 30.0 + i as f64;
            pairs.push((birth, birth + 0.8 * pi));
        }
        let noisy = PersistenceDiagram::from_pairs(&pairs).unwrap();
        let pi_noisy = prokhorov_distance(&x, &noisy, &f, metric);
        let w1_noisy = wasserstein_distance(&x, &noisy, 1.0, metric);
        println!("+{count:>3} noise: π = {pi_noisy}, W₁ = {w1_noisy}");
        assert_eq!(pi_noisy, pi);
    }
}
