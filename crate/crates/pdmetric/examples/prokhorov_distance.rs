//! The f-Prokhorov distance for several parameter functions.
//!
//! π_f(X,Y) = inf{t > 0 : D_{X,Y}(t) < f(t)}: the threshold at which the
//! profile dips below the graph of f. Growing f makes the metric more
//! permissive: π_g <= π_f whenever f <= g pointwise.
//!
//! Run with: cargo run --example prokhorov_distance

use pdmetric::{prokhorov_distance, GroundMetric, ParamFunction, PersistenceDiagram};

fn main() {
    let x = PersistenceDiagram::from_pairs(&[(0.0, 10.0), (0.0, 20.0), (0.0, 30.0), (0.0, 40.0)])
        .unwrap();
    let y = PersistenceDiagram::from_pairs(&[(0.0, 13.0), (0.0, 23.0), (0.0, 33.0), (0.0, 43.0)])
        .unwrap();
    let metric = GroundMetric::LInfinity;

    // the same functions the CLI accepts as poly:... text
    let functions = [
        ParamFunction::identity(),                              // poly:0,1
        ParamFunction::polynomial(vec![0.0, 2.0]).unwrap(),     // poly:0,2
        ParamFunction::polynomial(vec![0.0, 3.0, 2.0]).unwrap(), // 3t + 2t²
        "poly:0,7".parse().unwrap(),
    ];
    for f in &functions {
        println!("π_f(X,Y) = {} for f = {f}", prokhorov_distance(&x, &y, f, metric));
    }

    // the distance never exceeds the bottleneck distance (f = const:1)
    let bottleneck = pdmetric::bottleneck_distance(&x, &y, metric);
    println!("bottleneck distance = {bottleneck}");
}
