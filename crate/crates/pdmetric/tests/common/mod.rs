//! Shared generators for the integration suites.
#![allow(dead_code)]

use pdmetric::PersistenceDiagram;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Coordinates uniform in [0, 10] above the diagonal.
pub fn random_diagram(rng: &mut ChaCha8Rng, min_points: usize, max_points: usize) -> PersistenceDiagram {
    let n = rng.gen_range(min_points..=max_points);
    let pairs: Vec<(f64, f64)> = (0..n)
        .map(|_| {
            let birth: f64 = rng.gen_range(0.0..10.0);
            let death = birth + rng.gen_range(0.0..10.0 - birth);
            (birth, death)
        })
        .collect();
    PersistenceDiagram::from_pairs(&pairs).expect("generated points are valid")
}
