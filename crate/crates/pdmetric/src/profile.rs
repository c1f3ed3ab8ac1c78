//! The bottleneck profile `D_{X,Y}(t)`: the minimum, over bijections between
//! the augmented diagrams, of the number of pairs matched at distance
//! strictly greater than `t`.
//!
//! `D` is a nonincreasing, right-continuous integer step function of `t`. It
//! equals `|X₀| + |Y₀| - M(t)` where `M` is the maximum matching size in the
//! threshold graph, so its jumps happen exactly at the candidate distances.

use serde::{Deserialize, Serialize};

use crate::diagram::{GroundMetric, PersistenceDiagram};
use crate::matching::{candidate_distances, ThresholdGraph};

/// The complete step function of a diagram pair.
///
/// `steps` holds `(tᵢ, vᵢ)` with `t₀ = 0`, thresholds strictly increasing,
/// values strictly decreasing to a final 0, and `D(s) = vᵢ` for
/// `s ∈ [tᵢ, tᵢ₊₁)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BottleneckProfile {
    steps: Vec<(f64, usize)>,
    sizes: (usize, usize),
}

/// Serialized form of a profile, the `profile` command's JSON contract.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProfileDocument {
    pub ground_order: String,
    pub n_x: usize,
    pub n_y: usize,
    pub steps: Vec<(f64, usize)>,
}

impl BottleneckProfile {
    pub fn steps(&self) -> &[(f64, usize)] {
        &self.steps
    }

    /// Off-diagonal sizes `(|X₀|, |Y₀|)` of the underlying pair.
    pub fn sizes(&self) -> (usize, usize) {
        self.sizes
    }

    /// `D(t)` by binary search over the steps; right-continuous at jumps.
    ///
    /// # Panics
    /// If `t` is negative.
    pub fn value_at(&self, t: f64) -> usize {
        assert!(t >= 0.0, "query point must be nonnegative");
        let idx = self.steps.partition_point(|&(ti, _)| ti <= t);
        debug_assert!(idx > 0, "profiles start at t = 0");
        self.steps[idx - 1].1
    }

    pub fn document(&self, metric: GroundMetric) -> ProfileDocument {
        ProfileDocument {
            ground_order: metric.to_string(),
            n_x: self.sizes.0,
            n_y: self.sizes.1,
            steps: self.steps.clone(),
        }
    }
}

/// `D_{X,Y}(t) = |X₀| + |Y₀| - M(t)`.
///
/// # Panics
/// If `t` is negative.
pub fn profile_value(
    x: &PersistenceDiagram,
    y: &PersistenceDiagram,
    t: f64,
    metric: GroundMetric,
) -> usize {
    let mut graph = ThresholdGraph::new(x, y, t, metric);
    let (nx, ny) = graph.sizes();
    nx + ny - graph.max_matching()
}

/// Sweeps the candidate thresholds in increasing order, reusing the previous
/// matching at each step (edges only appear as `t` grows), and keeps the
/// thresholds where the value drops.
pub fn full_profile(
    x: &PersistenceDiagram,
    y: &PersistenceDiagram,
    metric: GroundMetric,
) -> BottleneckProfile {
    let mut graph = ThresholdGraph::new(x, y, 0.0, metric);
    let (nx, ny) = graph.sizes();
    let total = nx + ny;
    let mut steps: Vec<(f64, usize)> = Vec::new();
    for t in candidate_distances(x, y, metric) {
        graph.raise_threshold(t);
        let value = total - graph.max_matching();
        if steps.last().is_none_or(|&(_, prev)| prev != value) {
            steps.push((t, value));
        }
        if value == 0 {
            break;
        }
    }
    debug_assert_eq!(steps.last().map(|&(_, v)| v), Some(0));
    BottleneckProfile {
        steps,
        sizes: (nx, ny),
    }
}
