//! Exhaustive ground truth on small diagrams.
//!
//! Minimizes over every bijection between the augmented sides `X₀ ∪ Y₀′`
//! and `Y₀ ∪ X₀′`, by dynamic programming over the set of used right nodes
//! (each of the `|U|!` bijections is a root-to-leaf path through the subset
//! lattice, so the minimum is exact). Unlike the fast paths, nothing is
//! disallowed: an off-diagonal point may pair with any projection at its
//! true planar distance. Projection–projection pairs cost zero. Instances
//! are capped at 10 augmented points per side.

use thiserror::Error;

use crate::diagram::{GroundMetric, PersistenceDiagram};
use crate::prokhorov::{search_candidates, ParamFunction};

/// Hard cap on `|X₀| + |Y₀|` (10! ≈ 3.6M bijections).
pub const SIZE_CAP: usize = 10;

#[derive(Debug, Clone, Error, PartialEq)]
#[error("instance too large for exhaustive enumeration: {size} augmented points > cap {cap}")]
pub struct SizeCapExceeded {
    pub size: usize,
    pub cap: usize,
}

#[derive(Debug, Clone, Copy)]
enum Node {
    Off([f64; 2]),
    Projection([f64; 2]),
}

fn augmented_sides(
    x: &PersistenceDiagram,
    y: &PersistenceDiagram,
) -> Result<(Vec<Node>, Vec<Node>), SizeCapExceeded> {
    let xs: Vec<[f64; 2]> = x.off_diagonal().map(|p| p.coords()).collect();
    let ys: Vec<[f64; 2]> = y.off_diagonal().map(|p| p.coords()).collect();
    let size = xs.len() + ys.len();
    if size > SIZE_CAP {
        return Err(SizeCapExceeded {
            size,
            cap: SIZE_CAP,
        });
    }
    let proj = |p: &[f64; 2]| {
        let mid = 0.5 * (p[0] + p[1]);
        [mid, mid]
    };
    let mut left: Vec<Node> = xs.iter().copied().map(Node::Off).collect();
    left.extend(ys.iter().map(|p| Node::Projection(proj(p))));
    let mut right: Vec<Node> = ys.iter().copied().map(Node::Off).collect();
    right.extend(xs.iter().map(|p| Node::Projection(proj(p))));
    Ok((left, right))
}

fn pair_distance(u: Node, v: Node, metric: GroundMetric) -> f64 {
    match (u, v) {
        (Node::Projection(_), Node::Projection(_)) => 0.0,
        (Node::Off(a), Node::Off(b))
        | (Node::Off(a), Node::Projection(b))
        | (Node::Projection(a), Node::Off(b)) => metric.distance_coords(a, b),
    }
}

/// Minimum over all bijections of `Σ cost(k, v)` where left node `k` pairs
/// with right node `v`. `dp[mask]` is the best assignment of the first
/// `popcount(mask)` left nodes onto the right subset `mask`.
fn min_over_bijections(n: usize, cost: impl Fn(usize, usize) -> f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let full = 1usize << n;
    let mut dp = vec![f64::INFINITY; full];
    dp[0] = 0.0;
    for mask in 1..full {
        let k = (mask as u32).count_ones() as usize - 1;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let candidate = dp[mask ^ (1 << v)] + cost(k, v);
            if candidate < dp[mask] {
                dp[mask] = candidate;
            }
        }
    }
    dp[full - 1]
}

/// Minimum over all bijections of the number of pairs farther apart than `t`.
pub fn brute_profile_value(
    x: &PersistenceDiagram,
    y: &PersistenceDiagram,
    t: f64,
    metric: GroundMetric,
) -> Result<usize, SizeCapExceeded> {
    assert!(t >= 0.0, "threshold must be nonnegative");
    let (left, right) = augmented_sides(x, y)?;
    let n = left.len();
    let over: Vec<f64> = left
        .iter()
        .flat_map(|&u| {
            right
                .iter()
                .map(move |&v| f64::from(pair_distance(u, v, metric) > t))
        })
        .collect();
    Ok(min_over_bijections(n, |k, v| over[k * n + v]) as usize)
}

/// Minimum p-th-power transport cost over all bijections, raised to 1/p.
pub fn brute_wasserstein(
    x: &PersistenceDiagram,
    y: &PersistenceDiagram,
    p: f64,
    metric: GroundMetric,
) -> Result<f64, SizeCapExceeded> {
    assert!(p >= 1.0 && p.is_finite(), "order must satisfy 1 <= p < ∞");
    let (left, right) = augmented_sides(x, y)?;
    let n = left.len();
    let powers: Vec<f64> = left
        .iter()
        .flat_map(|&u| {
            right.iter().map(move |&v| {
                let d = pair_distance(u, v, metric);
                if p == 1.0 {
                    d
                } else {
                    d.powf(p)
                }
            })
        })
        .collect();
    let best = min_over_bijections(n, |k, v| powers[k * n + v]);
    Ok(if p == 1.0 || n == 0 {
        best
    } else if p == 2.0 {
        best.sqrt()
    } else {
        best.powf(p.recip())
    })
}

/// `π_f` by scanning the same candidate set the fast path searches,
/// evaluating the profile exhaustively at each element.
pub fn brute_prokhorov(
    x: &PersistenceDiagram,
    y: &PersistenceDiagram,
    f: &ParamFunction,
    metric: GroundMetric,
) -> Result<f64, SizeCapExceeded> {
    let candidates = search_candidates(x, y, f, metric);
    for &t in &candidates {
        if f.admits(brute_profile_value(x, y, t, metric)?, t) {
            return Ok(t);
        }
    }
    unreachable!("the predicate always passes at the largest candidate")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dgm(pairs: &[(f64, f64)]) -> PersistenceDiagram {
        PersistenceDiagram::from_pairs(pairs).unwrap()
    }

    const INF: GroundMetric = GroundMetric::LInfinity;

    #[test]
    fn profile_examples() {
        let x = dgm(&[(0.0, 4.0)]);
        let y = dgm(&[(1.0, 5.0)]);
        // both bijections enumerated, min(1, 2)
        assert_eq!(brute_profile_value(&x, &y, 0.5, INF), Ok(1));
        let x2 = dgm(&[(0.0, 6.0), (0.0, 2.0)]);
        assert_eq!(brute_profile_value(&x2, &dgm(&[]), 2.0, INF), Ok(1));
        let same = dgm(&[(1.0, 3.0)]);
        assert_eq!(brute_profile_value(&same, &same, 0.1, INF), Ok(0));
    }

    #[test]
    fn prokhorov_examples() {
        let id = ParamFunction::identity();
        assert_eq!(
            brute_prokhorov(&dgm(&[(0.0, 4.0)]), &dgm(&[(1.0, 5.0)]), &id, INF),
            Ok(1.0)
        );
        let x = dgm(&[(2.0, 4.5), (0.0, 9.0)]);
        assert_eq!(brute_prokhorov(&x, &x, &id, INF), Ok(0.0));
        let shift_x = dgm(&[(0.0, 10.0), (0.0, 20.0), (0.0, 30.0), (0.0, 40.0)]);
        let shift_y = dgm(&[(0.0, 13.0), (0.0, 23.0), (0.0, 33.0), (0.0, 43.0)]);
        let double = ParamFunction::polynomial(vec![0.0, 2.0]).unwrap();
        assert_eq!(brute_prokhorov(&shift_x, &shift_y, &double, INF), Ok(2.0));
    }

    #[test]
    fn wasserstein_examples() {
        assert_eq!(
            brute_wasserstein(&dgm(&[(0.0, 4.0)]), &dgm(&[(1.0, 5.0)]), 1.0, INF),
            Ok(1.0)
        );
        let x = dgm(&[(0.0, 6.0), (0.0, 2.0)]);
        assert_eq!(
            brute_wasserstein(&x, &dgm(&[]), 2.0, INF),
            Ok(10f64.sqrt())
        );
        assert_eq!(brute_wasserstein(&x, &x, 1.5, INF), Ok(0.0));
    }

    #[test]
    fn permutation_invariance() {
        let a = dgm(&[(0.0, 4.0), (1.0, 6.0), (2.0, 3.0)]);
        let b = dgm(&[(2.0, 3.0), (0.0, 4.0), (1.0, 6.0)]);
        let y = dgm(&[(0.5, 5.0), (1.5, 2.5)]);
        for t in [0.0, 0.4, 1.0, 2.5] {
            assert_eq!(
                brute_profile_value(&a, &y, t, INF),
                brute_profile_value(&b, &y, t, INF)
            );
        }
    }

    #[test]
    fn size_cap_is_enforced() {
        let big: Vec<(f64, f64)> = (0..11).map(|i| (i as f64, i as f64 + 1.0)).collect();
        let x = dgm(&big);
        let err = brute_profile_value(&x, &dgm(&[]), 1.0, INF).unwrap_err();
        assert_eq!(err, SizeCapExceeded { size: 11, cap: 10 });
    }
}
