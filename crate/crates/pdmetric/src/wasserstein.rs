//! Reference p-Wasserstein and bottleneck distances, and the machine-checked
//! audit of the inequalities relating them to the profile and Prokhorov
//! distances.
//!
//! `W_p(X,Y)^p` is the optimal value of a square assignment problem on
//! `|X₀| + |Y₀|` rows: off-diagonal points may pair across at `d(x,y)^p`,
//! with their own projection at `diagonal_distance^p`, and projections pair
//! with each other for free. Pairing a point with a foreign projection is
//! never optimal, so those slots are disallowed; the optimum is unchanged.
//! Solved exactly in cubic time by shortest augmenting paths with potentials.

use std::fmt;

use crate::diagram::{GroundMetric, PersistenceDiagram};
use crate::matching::candidate_distances;
use crate::profile::full_profile;
use crate::prokhorov::{kth_bottleneck, prokhorov_distance, ParamFunction};

/// Absolute slack used when checking the audited inequalities.
pub const BOUND_SLACK: f64 = 1e-9;

/// Dense square cost matrix of the assignment reduction.
#[derive(Debug, Clone)]
pub struct CostMatrix {
    side: usize,
    entries: Vec<f64>,
    /// Strictly larger than any admissible matching total; marks the
    /// disallowed foreign-projection slots.
    sentinel: f64,
}

impl CostMatrix {
    /// Costs `d^p` for the pair (X, Y): rows are `X₀ ∪ Y₀′`, columns
    /// `Y₀ ∪ X₀′`, in the same numbering as the threshold graph.
    pub fn new(
        x: &PersistenceDiagram,
        y: &PersistenceDiagram,
        p: f64,
        metric: GroundMetric,
    ) -> Self {
        assert!(p >= 1.0 && p.is_finite(), "order must satisfy 1 <= p < ∞");
        let xs: Vec<_> = x.off_diagonal().collect();
        let ys: Vec<_> = y.off_diagonal().collect();
        let (nx, ny) = (xs.len(), ys.len());
        let side = nx + ny;
        let pow = |d: f64| if p == 1.0 { d } else { d.powf(p) };

        let mut finite_sum = 1.0f64;
        let mut entries = vec![0.0; side * side];
        for (i, &xi) in xs.iter().enumerate() {
            for (j, &yj) in ys.iter().enumerate() {
                let c = pow(metric.distance(xi, yj));
                entries[i * side + j] = c;
                finite_sum += c;
            }
            let c = pow(xi.diagonal_distance(metric));
            entries[i * side + (ny + i)] = c;
            finite_sum += c;
        }
        for (j, &yj) in ys.iter().enumerate() {
            let c = pow(yj.diagonal_distance(metric));
            entries[(nx + j) * side + j] = c;
            finite_sum += c;
        }
        let sentinel = finite_sum + 1.0;
        for (i, _) in xs.iter().enumerate() {
            for k in 0..nx {
                if k != i {
                    entries[i * side + (ny + k)] = sentinel;
                }
            }
        }
        for (j, _) in ys.iter().enumerate() {
            for k in 0..ny {
                if k != j {
                    entries[(nx + j) * side + k] = sentinel;
                }
            }
        }
        Self {
            side,
            entries,
            sentinel,
        }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.side + col]
    }

    /// Exact optimal assignment total, summed over the original entries.
    pub fn optimal_total(&self) -> f64 {
        let assignment = solve_assignment(&self.entries, self.side);
        let total: f64 = assignment
            .iter()
            .enumerate()
            .map(|(row, &col)| self.entry(row, col))
            .sum();
        debug_assert!(total < self.sentinel, "optimum cannot use a disallowed slot");
        total
    }
}

/// Shortest augmenting paths with potentials on a dense matrix; O(n³).
fn solve_assignment(cost: &[f64], n: usize) -> Vec<usize> {
    let mut u = vec![0.0f64; n + 1];
    let mut v = vec![0.0f64; n + 1];
    let mut row_of = vec![0usize; n + 1]; // row matched to a column, 0 = none
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        row_of[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let reduced = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if reduced < minv[j] {
                    minv[j] = reduced;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0usize; n];
    for j in 1..=n {
        if row_of[j] > 0 {
            assignment[row_of[j] - 1] = j - 1;
        }
    }
    assignment
}

/// Orders a pair canonically so that both argument orders run the identical
/// computation; this makes the (mathematically symmetric) distance bitwise
/// symmetric despite float summation order.
fn canonical_pair<'a>(
    x: &'a PersistenceDiagram,
    y: &'a PersistenceDiagram,
) -> (&'a PersistenceDiagram, &'a PersistenceDiagram) {
    let key = |d: &PersistenceDiagram| {
        let mut coords: Vec<[f64; 2]> = d.off_diagonal().map(|p| p.coords()).collect();
        coords.sort_unstable_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
        coords
    };
    let (kx, ky) = (key(x), key(y));
    let le = kx
        .iter()
        .zip(&ky)
        .find_map(|(a, b)| {
            let ord = a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1]));
            (!ord.is_eq()).then_some(ord.is_lt())
        })
        .unwrap_or(kx.len() <= ky.len());
    if le {
        (x, y)
    } else {
        (y, x)
    }
}

/// `W_p(X, Y)`: exact optimal assignment value, raised to `1/p`.
///
/// # Panics
/// If `p < 1` or `p` is not finite.
pub fn wasserstein_distance(
    x: &PersistenceDiagram,
    y: &PersistenceDiagram,
    p: f64,
    metric: GroundMetric,
) -> f64 {
    let (x, y) = canonical_pair(x, y);
    let matrix = CostMatrix::new(x, y, p, metric);
    if matrix.side() == 0 {
        return 0.0;
    }
    let total = matrix.optimal_total();
    if p == 1.0 {
        total
    } else if p == 2.0 {
        total.sqrt()
    } else {
        total.powf(p.recip())
    }
}

/// `W_∞(X, Y)`, the least `t` beyond which the profile vanishes.
pub fn bottleneck_distance(
    x: &PersistenceDiagram,
    y: &PersistenceDiagram,
    metric: GroundMetric,
) -> f64 {
    kth_bottleneck(x, y, 1, metric)
}

/// One audited inequality: `left <= right` up to [`BOUND_SLACK`].
#[derive(Debug, Clone)]
pub struct BoundCheck {
    pub name: String,
    pub left: f64,
    pub right: f64,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.left <= self.right + BOUND_SLACK
    }
}

impl fmt::Display for BoundCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} <= {} : {}",
            self.name,
            self.left,
            self.right,
            if self.holds() { "holds" } else { "VIOLATED" }
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct BoundsReport {
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    pub fn push(&mut self, name: impl Into<String>, left: f64, right: f64) {
        self.checks.push(BoundCheck {
            name: name.into(),
            left,
            right,
        });
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(BoundCheck::holds)
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        Ok(())
    }
}

/// Evaluates both sides of every audited inequality on (X, Y):
///
/// * the Chebyshev-style bound `D(t) <= W_p^p / t^p` at the midpoints of the
///   profile steps and past its support,
/// * `π_f <= W_p^(p/(p+q)) · c^(-1/(p+q))` for `f = c·t^q`,
/// * `W_q^q <= π_q^q · (max d(X,Y)^q + |X₀| + |Y₀| - 1)` with `π_q` the
///   `t^q`-Prokhorov distance and `max d(X,Y)` the largest candidate
///   distance,
/// * the chained comparison
///   `W_q^q <= W_p^(pq/(p+q)) · (max d(X,Y)^q + |X₀| + |Y₀| - 1)`.
///
/// # Panics
/// If `p < 1`, `q < 1`, or `c <= 0`.
pub fn audit_bounds(
    x: &PersistenceDiagram,
    y: &PersistenceDiagram,
    p: f64,
    q: u32,
    c: f64,
    metric: GroundMetric,
) -> BoundsReport {
    assert!(p >= 1.0 && p.is_finite());
    assert!(q >= 1);
    assert!(c > 0.0 && c.is_finite());
    let mut report = BoundsReport::default();

    let (nx, ny) = (x.off_diagonal().count(), y.off_diagonal().count());
    let w_p = wasserstein_distance(x, y, p, metric);
    let w_q = wasserstein_distance(x, y, q as f64, metric);
    let profile = full_profile(x, y, metric);

    // Chebyshev-style tail bound, probed inside every step of the profile.
    let steps = profile.steps();
    let mut probes: Vec<f64> = steps
        .windows(2)
        .map(|w| 0.5 * (w[0].0 + w[1].0))
        .collect();
    probes.push(steps.last().map_or(1.0, |&(t, _)| t + 1.0));
    for t in probes {
        if t <= 0.0 {
            continue;
        }
        report.push(
            format!("chebyshev[p={p},t={t}]"),
            profile.value_at(t) as f64,
            w_p.powf(p) / t.powf(p),
        );
    }

    // π_f against W_p for f = c·t^q.
    let f = ParamFunction::monomial(c, q).expect("valid monomial");
    let pi_f = prokhorov_distance(x, y, &f, metric);
    let exponent = p / (p + q as f64);
    report.push(
        format!("prokhorov_le_wasserstein[p={p},q={q},c={c}]"),
        pi_f,
        w_p.powf(exponent) * c.powf(-1.0 / (p + q as f64)),
    );

    // W_q against π_q = π_{t^q}; the size factor uses the largest candidate
    // pair distance, an upper bound for any matched distance.
    let max_d = candidate_distances(x, y, metric)
        .last()
        .copied()
        .unwrap_or(0.0);
    let size_factor = max_d.powi(q as i32) + (nx + ny) as f64 - 1.0;
    let pi_q = prokhorov_distance(
        x,
        y,
        &ParamFunction::monomial(1.0, q).expect("valid monomial"),
        metric,
    );
    report.push(
        format!("wasserstein_le_prokhorov[q={q}]"),
        w_q.powi(q as i32),
        pi_q.powi(q as i32) * size_factor,
    );

    // Chained Wasserstein comparison obtained by combining the two bounds.
    report.push(
        format!("wasserstein_chain[p={p},q={q}]"),
        w_q.powi(q as i32),
        w_p.powf(p * q as f64 / (p + q as f64)) * size_factor,
    );

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_wasserstein;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn dgm(pairs: &[(f64, f64)]) -> PersistenceDiagram {
        PersistenceDiagram::from_pairs(pairs).unwrap()
    }

    const INF: GroundMetric = GroundMetric::LInfinity;

    #[test]
    fn single_point_pair() {
        let x = dgm(&[(0.0, 4.0)]);
        let y = dgm(&[(1.0, 5.0)]);
        // matching across (cost 1) beats the double-diagonal route (cost 4)
        assert_eq!(wasserstein_distance(&x, &y, 1.0, INF), 1.0);
    }

    #[test]
    fn against_empty() {
        let x = dgm(&[(0.0, 6.0), (0.0, 2.0)]);
        let y = dgm(&[]);
        assert_eq!(wasserstein_distance(&x, &y, 1.0, INF), 4.0);
        let w2 = wasserstein_distance(&x, &y, 2.0, INF);
        assert!((w2 - 10f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn empty_pair() {
        assert_eq!(wasserstein_distance(&dgm(&[]), &dgm(&[]), 1.0, INF), 0.0);
    }

    #[test]
    #[should_panic(expected = "1 <= p")]
    fn sub_one_order_panics() {
        wasserstein_distance(&dgm(&[(0.0, 4.0)]), &dgm(&[]), 0.5, INF);
    }

    #[test]
    fn bottleneck_examples() {
        let x = dgm(&[(0.0, 10.0), (0.0, 20.0), (0.0, 30.0), (0.0, 40.0)]);
        let y = dgm(&[(0.0, 13.0), (0.0, 23.0), (0.0, 33.0), (0.0, 43.0)]);
        assert_eq!(bottleneck_distance(&x, &y, INF), 3.0);
        assert_eq!(bottleneck_distance(&x, &x, INF), 0.0);
        assert_eq!(bottleneck_distance(&dgm(&[(0.0, 4.0)]), &dgm(&[]), INF), 2.0);
    }

    #[test]
    fn cost_matrix_layout() {
        let x = dgm(&[(0.0, 4.0)]);
        let y = dgm(&[(1.0, 5.0)]);
        let m = CostMatrix::new(&x, &y, 1.0, INF);
        assert_eq!(m.side(), 2);
        assert_eq!(m.entry(0, 0), 1.0); // cross
        assert_eq!(m.entry(0, 1), 2.0); // own projection of x
        assert_eq!(m.entry(1, 0), 2.0); // own projection of y
        assert_eq!(m.entry(1, 1), 0.0); // projections pair freely
    }

    #[test]
    fn foreign_projection_slots_are_disallowed() {
        let x = dgm(&[(0.0, 4.0), (0.0, 8.0)]);
        let y = dgm(&[]);
        let m = CostMatrix::new(&x, &y, 1.0, INF);
        assert_eq!(m.side(), 2);
        assert_eq!(m.entry(0, 0), 2.0);
        assert_eq!(m.entry(1, 1), 4.0);
        assert!(m.entry(0, 1) > 6.0 && m.entry(1, 0) > 6.0);
        assert_eq!(m.optimal_total(), 6.0);
    }

    #[test]
    fn matches_oracle_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..60 {
            let n = rng.gen_range(0..=4usize);
            let m = rng.gen_range(0..=4usize);
            let mk = |rng: &mut ChaCha8Rng, n: usize| {
                let pairs: Vec<(f64, f64)> = (0..n)
                    .map(|_| {
                        let b: f64 = rng.gen_range(0.0..10.0);
                        (b, b + rng.gen_range(0.0..10.0 - b))
                    })
                    .collect();
                dgm(&pairs)
            };
            let x = mk(&mut rng, n);
            let y = mk(&mut rng, m);
            for p in [1.0, 2.0] {
                for metric in [INF, GroundMetric::Lp(2.0)] {
                    let fast = wasserstein_distance(&x, &y, p, metric);
                    let brute = brute_wasserstein(&x, &y, p, metric).unwrap();
                    assert!(
                        (fast - brute).abs() <= 1e-12 * brute.max(1.0),
                        "p={p} fast={fast} brute={brute}"
                    );
                }
            }
        }
    }

    #[test]
    fn metric_properties_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let mk = |rng: &mut ChaCha8Rng| {
            let n = rng.gen_range(1..=4usize);
            let pairs: Vec<(f64, f64)> = (0..n)
                .map(|_| {
                    let b: f64 = rng.gen_range(0.0..10.0);
                    (b, b + rng.gen_range(0.0..10.0 - b))
                })
                .collect();
            dgm(&pairs)
        };
        for _ in 0..40 {
            let x = mk(&mut rng);
            let y = mk(&mut rng);
            let z = mk(&mut rng);
            for p in [1.0, 2.0] {
                let xy = wasserstein_distance(&x, &y, p, INF);
                let yx = wasserstein_distance(&y, &x, p, INF);
                assert_eq!(xy, yx, "symmetry");
                let xz = wasserstein_distance(&x, &z, p, INF);
                let yz = wasserstein_distance(&y, &z, p, INF);
                assert!(xz <= xy + yz + 1e-9, "triangle inequality");
                // bottleneck bounded by Wasserstein
                assert!(bottleneck_distance(&x, &y, INF) <= xy + 1e-9);
            }
        }
    }

    #[test]
    fn audit_single_point_example() {
        let x = dgm(&[(0.0, 4.0)]);
        let y = dgm(&[(1.0, 5.0)]);
        let report = audit_bounds(&x, &y, 1.0, 1, 1.0, INF);
        assert!(report.checks.len() >= 4);
        assert!(report.all_hold(), "{report}");
        // π_id = 1 <= sqrt(W₁) = 1
        let pw = report
            .checks
            .iter()
            .find(|c| c.name.starts_with("prokhorov_le_wasserstein"))
            .unwrap();
        assert_eq!(pw.left, 1.0);
        assert_eq!(pw.right, 1.0);
        // Chebyshev at t = 0.5: D = 1 <= W₁/0.5 = 2
        let ch = report
            .checks
            .iter()
            .find(|c| c.name.starts_with("chebyshev") && c.name.contains("t=0.5"))
            .unwrap();
        assert_eq!((ch.left, ch.right), (1.0, 2.0));
    }

    #[test]
    fn audit_identical_pair() {
        let x = dgm(&[(0.0, 4.0), (2.0, 9.0)]);
        let report = audit_bounds(&x, &x, 2.0, 2, 3.0, INF);
        assert!(report.all_hold(), "{report}");
    }

    #[test]
    fn audit_grid_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        let mk = |rng: &mut ChaCha8Rng| {
            let n = rng.gen_range(1..=5usize);
            let pairs: Vec<(f64, f64)> = (0..n)
                .map(|_| {
                    let b: f64 = rng.gen_range(0.0..10.0);
                    (b, b + rng.gen_range(0.0..10.0 - b))
                })
                .collect();
            dgm(&pairs)
        };
        for round in 0..60 {
            let x = mk(&mut rng);
            let y = mk(&mut rng);
            for p in [1.0, 2.0] {
                for q in [1u32, 2] {
                    for c in [1.0, 3.0] {
                        let report = audit_bounds(&x, &y, p, q, c, INF);
                        assert!(report.all_hold(), "round {round}: {report}");
                    }
                }
            }
        }
    }
}
