//! Maximum-cardinality matching in the geometric threshold graph of two
//! persistence diagrams.
//!
//! For diagrams X, Y and a threshold t the graph has left part
//! `U = X₀ ∪ Y₀′` and right part `V = Y₀ ∪ X₀′`, with an edge {u, v} exactly
//! when one of the following holds:
//!
//! * `u ∈ X₀`, `v ∈ Y₀` and `d(u, v) <= t`,
//! * `u ∈ X₀` and `v` is its own diagonal projection with `d(u, v) <= t`,
//! * `v ∈ Y₀` and `u` is its own diagonal projection with `d(u, v) <= t`,
//! * `u ∈ Y₀′` and `v ∈ X₀′` (projections pair freely).
//!
//! The matching is computed with phased shortest-augmenting-path search.
//! Within a phase, eligible cross neighbors are discovered through
//! fixed-radius queries against a deletable planar index over the opposite
//! side ([`RadiusIndex`]); projection and projection–projection edges are
//! handled through per-node checks and a drain-once pool, so no explicit
//! edge list is ever materialized. A full evaluation is O(n²) in the worst
//! case.

use crate::diagram::{GroundMetric, PersistenceDiagram};
use crate::spatial::RadiusIndex;

const NONE: u32 = u32::MAX;

/// The threshold graph at a given `t`, together with mutable matching state.
///
/// The threshold can only be raised: edges never disappear as `t` grows, so
/// the current matching stays valid and subsequent calls only augment it.
#[derive(Debug, Clone)]
pub struct ThresholdGraph {
    xs: Vec<[f64; 2]>,
    ys: Vec<[f64; 2]>,
    diag_x: Vec<f64>,
    diag_y: Vec<f64>,
    metric: GroundMetric,
    threshold: f64,
    /// Left u: `0..nx` is X₀ point u, `nx..nx+ny` is the projection of
    /// y_{u-nx}. Right v: `0..ny` is Y₀ point v, `ny..ny+nx` is the
    /// projection of x_{v-ny}.
    pair_left: Vec<u32>,
    pair_right: Vec<u32>,
}

/// A matching extracted from a [`ThresholdGraph`]; indices refer to the
/// left/right node numbering documented there.
#[derive(Debug, Clone)]
pub struct MatchingResult {
    pub pairs: Vec<(usize, usize)>,
    pub cardinality: usize,
}

struct Phase {
    layer_left: Vec<u32>,
    layer_right: Vec<u32>,
    /// The layer at which free right vertices were discovered.
    last: u32,
    /// One deletable index per odd layer, over the Y₀ vertices assigned to it.
    yo_trees: Vec<RadiusIndex>,
    /// Per odd layer, the X₀′ vertices assigned to it (drained lazily).
    xp_stacks: Vec<Vec<u32>>,
    used_right: Vec<bool>,
}

impl ThresholdGraph {
    /// # Panics
    /// If `t` is negative or not finite.
    pub fn new(
        x: &PersistenceDiagram,
        y: &PersistenceDiagram,
        t: f64,
        metric: GroundMetric,
    ) -> Self {
        assert!(t >= 0.0 && t.is_finite(), "threshold must be nonnegative");
        let xs: Vec<[f64; 2]> = x.off_diagonal().map(|p| p.coords()).collect();
        let ys: Vec<[f64; 2]> = y.off_diagonal().map(|p| p.coords()).collect();
        let diag_x = x
            .off_diagonal()
            .map(|p| p.diagonal_distance(metric))
            .collect();
        let diag_y = y
            .off_diagonal()
            .map(|p| p.diagonal_distance(metric))
            .collect();
        let n = xs.len() + ys.len();
        Self {
            xs,
            ys,
            diag_x,
            diag_y,
            metric,
            threshold: t,
            pair_left: vec![NONE; n],
            pair_right: vec![NONE; n],
        }
    }

    /// Off-diagonal sizes `(|X₀|, |Y₀|)`.
    pub fn sizes(&self) -> (usize, usize) {
        (self.xs.len(), self.ys.len())
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    /// # Panics
    /// If `t` is below the current threshold.
    pub fn raise_threshold(&mut self, t: f64) {
        assert!(
            t >= self.threshold,
            "threshold can only be raised ({t} < {})",
            self.threshold
        );
        self.threshold = t;
    }

    #[cfg(test)]
    fn dist(&self, a: [f64; 2], b: [f64; 2]) -> f64 {
        self.metric.distance_coords(a, b)
    }

    /// Runs the matching to optimality at the current threshold and returns
    /// its cardinality. Idempotent; after `raise_threshold` it resumes from
    /// the previous matching.
    pub fn max_matching(&mut self) -> usize {
        self.greedy_seed();
        while let Some((mut phase, roots)) = self.layer_phase() {
            let mut augmented = 0usize;
            for &u in &roots {
                if self.augment(u, &mut phase) {
                    augmented += 1;
                }
            }
            debug_assert!(augmented > 0, "layered phase must augment");
            if augmented == 0 {
                break;
            }
        }
        self.pair_left.iter().filter(|&&v| v != NONE).count()
    }

    /// The current matching as explicit pairs.
    pub fn matching(&mut self) -> MatchingResult {
        let cardinality = self.max_matching();
        let pairs = self
            .pair_left
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v != NONE)
            .map(|(u, &v)| (u, v as usize))
            .collect();
        MatchingResult { pairs, cardinality }
    }

    fn pair(&mut self, u: u32, v: u32) {
        self.pair_left[u as usize] = v;
        self.pair_right[v as usize] = u;
    }

    /// Cheap maximal-matching seed: cross pairs via one radius index, then
    /// own-projection pairs, then the free projection–projection block.
    fn greedy_seed(&mut self) {
        let (nx, ny) = self.sizes();
        let free_ys: Vec<([f64; 2], u32)> = (0..ny)
            .filter(|&j| self.pair_right[j] == NONE)
            .map(|j| (self.ys[j], j as u32))
            .collect();
        if !free_ys.is_empty() {
            let mut index = RadiusIndex::build(free_ys);
            for i in 0..nx {
                if self.pair_left[i] != NONE || index.is_empty() {
                    continue;
                }
                if let Some(j) =
                    index.pop_within(self.xs[i], self.threshold, self.metric, &mut |_| false)
                {
                    self.pair(i as u32, j);
                }
            }
        }
        for i in 0..nx {
            let v = (ny + i) as u32;
            if self.pair_left[i] == NONE
                && self.pair_right[v as usize] == NONE
                && self.diag_x[i] <= self.threshold
            {
                self.pair(i as u32, v);
            }
        }
        for j in 0..ny {
            let u = (nx + j) as u32;
            if self.pair_left[u as usize] == NONE
                && self.pair_right[j] == NONE
                && self.diag_y[j] <= self.threshold
            {
                self.pair(u, j as u32);
            }
        }
        let mut free_xp: Vec<u32> = (0..nx)
            .map(|i| (ny + i) as u32)
            .filter(|&v| self.pair_right[v as usize] == NONE)
            .collect();
        for j in 0..ny {
            let u = (nx + j) as u32;
            if self.pair_left[u as usize] != NONE {
                continue;
            }
            match free_xp.pop() {
                Some(v) => self.pair(u, v),
                None => break,
            }
        }
    }

    /// Breadth-first layering from the free left vertices. Returns the phase
    /// structures and the layer-0 roots, or `None` when no augmenting path
    /// exists (the matching is maximum).
    fn layer_phase(&mut self) -> Option<(Phase, Vec<u32>)> {
        let (nx, ny) = self.sizes();
        let n = nx + ny;
        let mut layer_left = vec![NONE; n];
        let mut layer_right = vec![NONE; n];
        let roots: Vec<u32> = (0..n as u32)
            .filter(|&u| self.pair_left[u as usize] == NONE)
            .collect();
        if roots.is_empty() {
            return None;
        }
        for &u in &roots {
            layer_left[u as usize] = 0;
        }

        let mut cross = RadiusIndex::build(
            self.ys
                .iter()
                .enumerate()
                .map(|(j, &p)| (p, j as u32))
                .collect(),
        );
        let mut xp_pool: Vec<u32> = (0..nx as u32).collect();
        let mut frontier = roots.clone();
        let mut last: Option<u32> = None;
        let mut level: u32 = 0;

        while !frontier.is_empty() && last.is_none() {
            let target = level + 1;
            let mut next = Vec::new();
            for &u in &frontier {
                // Newly reached right vertices: record the layer; free ones
                // end the search after this level, matched ones enqueue
                // their partner.
                let mut reach = |v: u32,
                                 layer_right: &mut Vec<u32>,
                                 next: &mut Vec<u32>,
                                 last: &mut Option<u32>| {
                    layer_right[v as usize] = target;
                    let w = self.pair_right[v as usize];
                    if w == NONE {
                        *last = Some(target);
                    } else {
                        layer_left[w as usize] = target + 1;
                        next.push(w);
                    }
                };
                if (u as usize) < nx {
                    let i = u as usize;
                    let v = (ny + i) as u32;
                    if self.diag_x[i] <= self.threshold && layer_right[v as usize] == NONE {
                        reach(v, &mut layer_right, &mut next, &mut last);
                    }
                    while let Some(j) = cross.pop_within(
                        self.xs[i],
                        self.threshold,
                        self.metric,
                        &mut |j| layer_right[j as usize] != NONE,
                    ) {
                        reach(j, &mut layer_right, &mut next, &mut last);
                    }
                } else {
                    let j = u as usize - nx;
                    if self.diag_y[j] <= self.threshold && layer_right[j] == NONE {
                        reach(j as u32, &mut layer_right, &mut next, &mut last);
                    }
                    // Every unlayered projection is adjacent, so the pool is
                    // drained the first time any Y₀′ vertex is expanded.
                    while let Some(i) = xp_pool.pop() {
                        let v = (ny + i as usize) as u32;
                        if layer_right[v as usize] != NONE {
                            continue;
                        }
                        reach(v, &mut layer_right, &mut next, &mut last);
                    }
                }
            }
            frontier = next;
            level += 2;
        }

        let last = last?;
        // Group right vertices by layer for the augmentation pass. Below the
        // final layer every reached vertex is matched; at the final layer
        // only the free ones can terminate a shortest path.
        let buckets = (last / 2 + 1) as usize;
        let mut yo_buckets: Vec<Vec<([f64; 2], u32)>> = vec![Vec::new(); buckets];
        let mut xp_stacks: Vec<Vec<u32>> = vec![Vec::new(); buckets];
        for (v, &layer) in layer_right.iter().enumerate() {
            if layer == NONE {
                continue;
            }
            if layer == last && self.pair_right[v] != NONE {
                continue;
            }
            let bucket = (layer / 2) as usize;
            if v < ny {
                yo_buckets[bucket].push((self.ys[v], v as u32));
            } else {
                xp_stacks[bucket].push((v - ny) as u32);
            }
        }
        let yo_trees = yo_buckets.into_iter().map(RadiusIndex::build).collect();
        let phase = Phase {
            layer_left,
            layer_right,
            last,
            yo_trees,
            xp_stacks,
            used_right: vec![false; n],
        };
        Some((phase, roots))
    }

    /// Depth-first search for one augmenting path in the layered graph.
    /// Every right vertex taken from a phase structure is consumed: it either
    /// joins a path or can serve no other shortest path this phase.
    fn augment(&mut self, u: u32, phase: &mut Phase) -> bool {
        let (nx, ny) = self.sizes();
        let target = phase.layer_left[u as usize] + 1;
        let bucket = (target / 2) as usize;
        if (u as usize) < nx {
            let i = u as usize;
            let v = (ny + i) as u32;
            if self.diag_x[i] <= self.threshold
                && phase.layer_right[v as usize] == target
                && !phase.used_right[v as usize]
            {
                phase.used_right[v as usize] = true;
                if self.advance(v, target, phase) {
                    self.pair(u, v);
                    return true;
                }
            }
            loop {
                let popped = {
                    let Phase {
                        yo_trees,
                        used_right,
                        ..
                    } = phase;
                    yo_trees[bucket].pop_within(self.xs[i], self.threshold, self.metric, &mut |j| {
                        used_right[j as usize]
                    })
                };
                let Some(j) = popped else { break };
                phase.used_right[j as usize] = true;
                if self.advance(j, target, phase) {
                    self.pair(u, j);
                    return true;
                }
            }
        } else {
            let jy = u as usize - nx;
            let v = jy as u32;
            if self.diag_y[jy] <= self.threshold
                && phase.layer_right[jy] == target
                && !phase.used_right[jy]
            {
                phase.used_right[jy] = true;
                if self.advance(v, target, phase) {
                    self.pair(u, v);
                    return true;
                }
            }
            while let Some(i) = phase.xp_stacks[bucket].pop() {
                let v = (ny + i as usize) as u32;
                if phase.used_right[v as usize] {
                    continue;
                }
                phase.used_right[v as usize] = true;
                if self.advance(v, target, phase) {
                    self.pair(u, v);
                    return true;
                }
            }
        }
        false
    }

    fn advance(&mut self, v: u32, target: u32, phase: &mut Phase) -> bool {
        let w = self.pair_right[v as usize];
        if w == NONE {
            debug_assert_eq!(target, phase.last);
            true
        } else if target == phase.last {
            // A matched vertex at the final layer cannot extend a shortest
            // path; it stays consumed.
            false
        } else {
            debug_assert_eq!(phase.layer_left[w as usize], target + 1);
            self.augment(w, phase)
        }
    }

    #[cfg(test)]
    fn has_edge(&self, u: usize, v: usize) -> bool {
        let (nx, ny) = self.sizes();
        match (u < nx, v < ny) {
            (true, true) => self.dist(self.xs[u], self.ys[v]) <= self.threshold,
            (true, false) => v - ny == u && self.diag_x[u] <= self.threshold,
            (false, true) => u - nx == v && self.diag_y[v] <= self.threshold,
            (false, false) => true,
        }
    }
}

/// Maximum cardinality `M(t)` of a matching in the threshold graph.
///
/// # Panics
/// If `t` is negative.
pub fn max_matching_size(
    x: &PersistenceDiagram,
    y: &PersistenceDiagram,
    t: f64,
    metric: GroundMetric,
) -> usize {
    ThresholdGraph::new(x, y, t, metric).max_matching()
}

/// The sorted, deduplicated jump locations of `t ↦ M(t)`: every cross
/// distance `d(x, y)` for `x ∈ X₀, y ∈ Y₀`, every diagonal distance of X₀
/// and of Y₀, with 0 prepended.
pub fn candidate_distances(
    x: &PersistenceDiagram,
    y: &PersistenceDiagram,
    metric: GroundMetric,
) -> Vec<f64> {
    let xs: Vec<_> = x.off_diagonal().collect();
    let ys: Vec<_> = y.off_diagonal().collect();
    let mut out = Vec::with_capacity(xs.len() * ys.len() + xs.len() + ys.len() + 1);
    out.push(0.0);
    for &a in &xs {
        for &b in &ys {
            out.push(metric.distance(a, b));
        }
    }
    for &a in &xs {
        out.push(a.diagonal_distance(metric));
    }
    for &b in &ys {
        out.push(b.diagonal_distance(metric));
    }
    out.sort_unstable_by(f64::total_cmp);
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::PlanePoint;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn dgm(pairs: &[(f64, f64)]) -> PersistenceDiagram {
        PersistenceDiagram::from_pairs(pairs).unwrap()
    }

    /// Exhaustive augmenting-path matching over an explicit edge list; the
    /// independent reference for the geometric search.
    fn reference_matching_size(graph: &ThresholdGraph) -> usize {
        let (nx, ny) = graph.sizes();
        let n = nx + ny;
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|u| (0..n).filter(|&v| graph.has_edge(u, v)).collect())
            .collect();
        let mut pair_right = vec![usize::MAX; n];
        fn try_assign(
            u: usize,
            adj: &[Vec<usize>],
            seen: &mut [bool],
            pair_right: &mut [usize],
        ) -> bool {
            for &v in &adj[u] {
                if seen[v] {
                    continue;
                }
                seen[v] = true;
                if pair_right[v] == usize::MAX
                    || try_assign(pair_right[v], adj, seen, pair_right)
                {
                    pair_right[v] = u;
                    return true;
                }
            }
            false
        }
        let mut size = 0;
        for u in 0..n {
            let mut seen = vec![false; n];
            if try_assign(u, &adj, &mut seen, &mut pair_right) {
                size += 1;
            }
        }
        size
    }

    fn random_diagram(rng: &mut ChaCha8Rng, max_points: usize) -> PersistenceDiagram {
        let n = rng.gen_range(0..=max_points);
        let pairs: Vec<(f64, f64)> = (0..n)
            .map(|_| {
                let b: f64 = rng.gen_range(0.0..10.0);
                let d: f64 = b + rng.gen_range(0.0..(10.0 - b).max(1e-9));
                (b, d)
            })
            .collect();
        dgm(&pairs)
    }

    #[test]
    fn shifted_block_examples() {
        let x = dgm(&[(0.0, 10.0), (0.0, 20.0), (0.0, 30.0), (0.0, 40.0)]);
        let y = dgm(&[(0.0, 13.0), (0.0, 23.0), (0.0, 33.0), (0.0, 43.0)]);
        let m = GroundMetric::LInfinity;
        // Only the projection block is matchable below the shift.
        assert_eq!(max_matching_size(&x, &y, 1.0, m), 4);
        // At exactly the shift every cross pair becomes an edge (d <= t).
        assert_eq!(max_matching_size(&x, &y, 3.0, m), 8);
    }

    #[test]
    fn empty_side_matches_against_projections() {
        let x = dgm(&[(0.0, 6.0), (0.0, 2.0)]);
        let y = dgm(&[]);
        assert_eq!(max_matching_size(&x, &y, 1.0, GroundMetric::LInfinity), 1);
    }

    #[test]
    #[should_panic(expected = "nonnegative")]
    fn negative_threshold_panics() {
        max_matching_size(&dgm(&[]), &dgm(&[]), -1.0, GroundMetric::LInfinity);
    }

    #[test]
    fn candidate_distance_examples() {
        let m = GroundMetric::LInfinity;
        assert_eq!(
            candidate_distances(&dgm(&[(0.0, 4.0)]), &dgm(&[(1.0, 5.0)]), m),
            vec![0.0, 1.0, 2.0]
        );
        assert_eq!(
            candidate_distances(&dgm(&[(0.0, 6.0), (0.0, 2.0)]), &dgm(&[]), m),
            vec![0.0, 1.0, 3.0]
        );
        assert_eq!(candidate_distances(&dgm(&[]), &dgm(&[]), m), vec![0.0]);
    }

    #[test]
    fn candidates_ignore_diagonal_points() {
        let m = GroundMetric::LInfinity;
        assert_eq!(
            candidate_distances(&dgm(&[(2.0, 2.0)]), &dgm(&[]), m),
            vec![0.0]
        );
    }

    #[test]
    fn matches_reference_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for metric in [
            GroundMetric::LInfinity,
            GroundMetric::Lp(1.0),
            GroundMetric::Lp(2.0),
        ] {
            for _ in 0..60 {
                let x = random_diagram(&mut rng, 6);
                let y = random_diagram(&mut rng, 6);
                let cands = candidate_distances(&x, &y, metric);
                let top = *cands.last().unwrap();
                let mut probes = cands.clone();
                // midpoints between jumps, and past the last jump
                for w in cands.windows(2) {
                    probes.push(0.5 * (w[0] + w[1]));
                }
                probes.push(top + 1.0);
                for t in probes {
                    let mut graph = ThresholdGraph::new(&x, &y, t, metric);
                    let fast = graph.max_matching();
                    let want = reference_matching_size(&graph);
                    assert_eq!(fast, want, "t={t} x={x:?} y={y:?}");
                }
            }
        }
    }

    #[test]
    fn incremental_raise_equals_fresh() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let x = random_diagram(&mut rng, 8);
            let y = random_diagram(&mut rng, 8);
            let metric = GroundMetric::LInfinity;
            let cands = candidate_distances(&x, &y, metric);
            let mut graph = ThresholdGraph::new(&x, &y, 0.0, metric);
            for &t in &cands {
                graph.raise_threshold(t);
                assert_eq!(graph.max_matching(), max_matching_size(&x, &y, t, metric));
            }
        }
    }

    #[test]
    fn monotone_and_saturating() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..25 {
            let x = random_diagram(&mut rng, 7);
            let y = random_diagram(&mut rng, 7);
            let metric = GroundMetric::Lp(2.0);
            let (nx, ny) = ThresholdGraph::new(&x, &y, 0.0, metric).sizes();
            let cands = candidate_distances(&x, &y, metric);
            let mut prev = 0usize;
            for &t in &cands {
                let size = max_matching_size(&x, &y, t, metric);
                assert!(size >= prev, "matching size must be nondecreasing in t");
                prev = size;
            }
            // the free projection block alone matches the smaller side
            assert!(max_matching_size(&x, &y, 0.0, metric) >= nx.min(ny));
            // beyond the largest candidate everything is matchable
            let top = cands.last().unwrap();
            assert_eq!(max_matching_size(&x, &y, *top, metric), nx + ny);
        }
    }

    #[test]
    fn constant_between_candidates() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..20 {
            let x = random_diagram(&mut rng, 5);
            let y = random_diagram(&mut rng, 5);
            let metric = GroundMetric::LInfinity;
            let cands = candidate_distances(&x, &y, metric);
            for w in cands.windows(2) {
                let at_jump = max_matching_size(&x, &y, w[0], metric);
                let mid = max_matching_size(&x, &y, 0.5 * (w[0] + w[1]), metric);
                assert_eq!(at_jump, mid);
            }
        }
    }

    #[test]
    fn matching_result_is_a_valid_matching() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..20 {
            let x = random_diagram(&mut rng, 6);
            let y = random_diagram(&mut rng, 6);
            let t = rng.gen_range(0.0..4.0);
            let mut graph = ThresholdGraph::new(&x, &y, t, GroundMetric::LInfinity);
            let result = graph.matching();
            assert_eq!(result.pairs.len(), result.cardinality);
            let mut left_seen = std::collections::HashSet::new();
            let mut right_seen = std::collections::HashSet::new();
            for &(u, v) in &result.pairs {
                assert!(left_seen.insert(u), "left vertex reused");
                assert!(right_seen.insert(v), "right vertex reused");
                assert!(graph.has_edge(u, v), "pair ({u}, {v}) is not an edge");
            }
        }
    }

    #[test]
    fn duplicate_points_carry_multiplicity() {
        let x = dgm(&[(0.0, 4.0), (0.0, 4.0)]);
        let y = dgm(&[(0.0, 4.0)]);
        let m = GroundMetric::LInfinity;
        // one copy pairs across at 0, the other needs its projection
        assert_eq!(max_matching_size(&x, &y, 0.0, m), 2);
        assert_eq!(max_matching_size(&x, &y, 2.0, m), 3);
    }

    #[test]
    fn degenerate_instances_match_reference() {
        let m = GroundMetric::LInfinity;
        // every point identical
        let x = dgm(&[(1.0, 3.0); 9]);
        let y = dgm(&[(1.0, 3.0); 6]);
        for t in [0.0, 0.5, 1.0, 2.0] {
            let mut graph = ThresholdGraph::new(&x, &y, t, m);
            let fast = graph.max_matching();
            assert_eq!(fast, reference_matching_size(&graph), "t={t}");
        }
        // 6 coincident cross pairs plus the 6-wide projection block
        assert_eq!(max_matching_size(&x, &y, 0.0, m), 12);
        // collinear points stacked along one axis
        let x = dgm(&(0..8).map(|i| (0.0, 1.0 + i as f64)).collect::<Vec<_>>());
        let y = dgm(&(0..8).map(|i| (0.0, 1.5 + i as f64)).collect::<Vec<_>>());
        for t in [0.0, 0.25, 0.5, 1.5, 4.0] {
            let mut graph = ThresholdGraph::new(&x, &y, t, m);
            let fast = graph.max_matching();
            assert_eq!(fast, reference_matching_size(&graph), "t={t}");
        }
    }

    #[test]
    fn zero_persistence_points_are_invisible() {
        let x = dgm(&[(1.0, 1.0), (0.0, 4.0)]);
        let y = dgm(&[(3.0, 3.0)]);
        let graph = ThresholdGraph::new(&x, &y, 0.5, GroundMetric::LInfinity);
        assert_eq!(graph.sizes(), (1, 0));
    }

    #[test]
    fn plane_point_coords_roundtrip() {
        let p = PlanePoint::new(0.25, 4.5).unwrap();
        assert_eq!(p.coords(), [0.25, 4.5]);
    }
}
