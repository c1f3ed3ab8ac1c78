//! A deletable planar point index for fixed-radius "report one neighbor"
//! queries.
//!
//! Static balanced kd-tree over a frozen point set. Every query that touches
//! a live point either returns it or removes it, so a sequence of queries and
//! deletions over n points costs O(n·√n) in the worst case rather than
//! rescanning an explicit edge list.

use crate::diagram::GroundMetric;

const NIL: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct Node {
    point: [f64; 2],
    id: u32,
    left: u32,
    right: u32,
    parent: u32,
    alive: bool,
    /// Live nodes in the subtree rooted here, including this one.
    alive_count: u32,
    bb_lo: [f64; 2],
    bb_hi: [f64; 2],
}

#[derive(Debug, Clone, Default)]
pub(crate) struct RadiusIndex {
    nodes: Vec<Node>,
    root: u32,
}

impl RadiusIndex {
    pub fn build(mut items: Vec<([f64; 2], u32)>) -> Self {
        let mut index = RadiusIndex {
            nodes: Vec::with_capacity(items.len()),
            root: NIL,
        };
        index.root = index.build_rec(&mut items, 0, NIL);
        index
    }

    fn build_rec(&mut self, items: &mut [([f64; 2], u32)], depth: usize, parent: u32) -> u32 {
        if items.is_empty() {
            return NIL;
        }
        let axis = depth % 2;
        let mid = items.len() / 2;
        items.select_nth_unstable_by(mid, |a, b| a.0[axis].total_cmp(&b.0[axis]));
        let (point, id) = items[mid];

        let slot = self.nodes.len() as u32;
        self.nodes.push(Node {
            point,
            id,
            left: NIL,
            right: NIL,
            parent,
            alive: true,
            alive_count: 0,
            bb_lo: point,
            bb_hi: point,
        });

        let (lo_half, rest) = items.split_at_mut(mid);
        let hi_half = &mut rest[1..];
        let left = self.build_rec(lo_half, depth + 1, slot);
        let right = self.build_rec(hi_half, depth + 1, slot);

        let mut count = 1;
        let mut bb_lo = point;
        let mut bb_hi = point;
        for child in [left, right] {
            if child != NIL {
                let c = &self.nodes[child as usize];
                count += c.alive_count;
                bb_lo = [bb_lo[0].min(c.bb_lo[0]), bb_lo[1].min(c.bb_lo[1])];
                bb_hi = [bb_hi[0].max(c.bb_hi[0]), bb_hi[1].max(c.bb_hi[1])];
            }
        }
        let node = &mut self.nodes[slot as usize];
        node.left = left;
        node.right = right;
        node.alive_count = count;
        node.bb_lo = bb_lo;
        node.bb_hi = bb_hi;
        slot
    }

    pub fn is_empty(&self) -> bool {
        self.root == NIL || self.nodes[self.root as usize].alive_count == 0
    }

    /// Finds one live point within distance `radius` of `q`, removes it and
    /// returns its id. Points for which `stale` answers true were consumed
    /// by other means; they are removed lazily when encountered and never
    /// returned.
    pub fn pop_within(
        &mut self,
        q: [f64; 2],
        radius: f64,
        metric: GroundMetric,
        stale: &mut dyn FnMut(u32) -> bool,
    ) -> Option<u32> {
        if self.root == NIL {
            return None;
        }
        self.pop_rec(self.root, q, radius, metric, stale)
    }

    fn pop_rec(
        &mut self,
        slot: u32,
        q: [f64; 2],
        radius: f64,
        metric: GroundMetric,
        stale: &mut dyn FnMut(u32) -> bool,
    ) -> Option<u32> {
        let (alive, id, point, left, right) = {
            let node = &self.nodes[slot as usize];
            if node.alive_count == 0 || metric.distance_to_box(q, node.bb_lo, node.bb_hi) > radius
            {
                return None;
            }
            (node.alive, node.id, node.point, node.left, node.right)
        };
        if alive && metric.distance_coords(point, q) <= radius {
            self.remove(slot);
            if !stale(id) {
                return Some(id);
            }
        }
        if left != NIL {
            if let Some(found) = self.pop_rec(left, q, radius, metric, stale) {
                return Some(found);
            }
        }
        if right != NIL {
            return self.pop_rec(right, q, radius, metric, stale);
        }
        None
    }

    fn remove(&mut self, slot: u32) {
        self.nodes[slot as usize].alive = false;
        let mut cur = slot;
        while cur != NIL {
            self.nodes[cur as usize].alive_count -= 1;
            cur = self.nodes[cur as usize].parent;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids_within_brute(
        points: &[([f64; 2], u32)],
        q: [f64; 2],
        r: f64,
        metric: GroundMetric,
    ) -> Vec<u32> {
        let mut v: Vec<u32> = points
            .iter()
            .filter(|(p, _)| metric.distance_coords(*p, q) <= r)
            .map(|&(_, id)| id)
            .collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn pops_exactly_the_points_in_range() {
        let points: Vec<([f64; 2], u32)> = (0..40)
            .map(|i| {
                let x = (i as f64 * 0.37).sin() * 10.0;
                let y = (i as f64 * 0.61).cos() * 10.0;
                ([x, y], i)
            })
            .collect();
        for metric in [
            GroundMetric::LInfinity,
            GroundMetric::Lp(1.0),
            GroundMetric::Lp(2.0),
        ] {
            let q = [1.0, -2.0];
            let r = 4.5;
            let mut index = RadiusIndex::build(points.clone());
            let mut got = Vec::new();
            while let Some(id) = index.pop_within(q, r, metric, &mut |_| false) {
                got.push(id);
            }
            got.sort_unstable();
            assert_eq!(got, ids_within_brute(&points, q, r, metric));
            // everything in range is gone; the rest is still poppable at r = ∞-ish
            assert!(index.pop_within(q, r, metric, &mut |_| false).is_none());
        }
    }

    #[test]
    fn stale_points_are_skipped_and_cleaned() {
        let points: Vec<([f64; 2], u32)> =
            vec![([0.0, 0.0], 0), ([0.5, 0.5], 1), ([0.6, 0.1], 2)];
        let mut index = RadiusIndex::build(points);
        let stale = [false, true, false];
        let mut got = Vec::new();
        while let Some(id) =
            index.pop_within([0.0, 0.0], 1.0, GroundMetric::LInfinity, &mut |id| {
                stale[id as usize]
            })
        {
            got.push(id);
        }
        got.sort_unstable();
        assert_eq!(got, vec![0, 2]);
    }

    #[test]
    fn zero_radius_matches_coincident_points_only() {
        let points = vec![([1.0, 2.0], 0), ([1.0, 2.0], 1), ([1.0, 2.5], 2)];
        let mut index = RadiusIndex::build(points);
        let mut got = Vec::new();
        while let Some(id) = index.pop_within([1.0, 2.0], 0.0, GroundMetric::LInfinity, &mut |_| false)
        {
            got.push(id);
        }
        got.sort_unstable();
        assert_eq!(got, vec![0, 1]);
    }

    #[test]
    fn empty_index() {
        let mut index = RadiusIndex::build(Vec::new());
        assert!(index.is_empty());
        assert_eq!(
            index.pop_within([0.0, 0.0], 1.0, GroundMetric::LInfinity, &mut |_| false),
            None
        );
    }
}
