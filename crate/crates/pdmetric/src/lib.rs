//! Metrics for persistence diagrams built around the bottleneck profile.
//!
//! The bottleneck profile `D_{X,Y}(t)` counts how many points of two
//! diagrams a best matching must move farther than `t`. It is a
//! nonincreasing integer step function whose level sets encode the
//! bottleneck distance (where it reaches 0), the k-th bottlenecks, and the
//! family of discrete f-Prokhorov distances
//! `π_f = inf{t > 0 : D_{X,Y}(t) < f(t)}` for monotone parameter functions
//! `f`. Reference p-Wasserstein distances and an exhaustive oracle round out
//! the toolkit, together with an audit of the inequalities tying everything
//! together.
//!
//! # Quick start
//!
//! ```
//! use pdmetric::{full_profile, prokhorov_distance, GroundMetric, ParamFunction,
//!                PersistenceDiagram};
//!
//! let x = PersistenceDiagram::parse("0 6\n0 2").unwrap();
//! let y = PersistenceDiagram::parse("").unwrap();
//! let metric = GroundMetric::LInfinity;
//!
//! let profile = full_profile(&x, &y, metric);
//! assert_eq!(profile.steps(), &[(0.0, 2), (1.0, 1), (3.0, 0)]);
//!
//! let pi = prokhorov_distance(&x, &y, &ParamFunction::identity(), metric);
//! assert_eq!(pi, 1.0);
//! ```
//!
//! The `examples/` directory contains one runnable program per capability
//! (`cargo run --example bottleneck_profile`, etc.); the thin `pdmetric`
//! binary exposes the same operations as `profile`, `dist`, `matrix` and
//! `check` subcommands.

pub mod cli;
pub mod diagram;
pub mod matching;
pub mod oracle;
pub mod profile;
pub mod prokhorov;
mod spatial;
pub mod wasserstein;

pub use diagram::{GroundMetric, ParseError, PersistenceDiagram, PlanePoint};
pub use matching::{candidate_distances, max_matching_size, MatchingResult, ThresholdGraph};
pub use profile::{full_profile, profile_value, BottleneckProfile, ProfileDocument};
pub use prokhorov::{kth_bottleneck, prokhorov_distance, ParamFunction};
pub use wasserstein::{
    audit_bounds, bottleneck_distance, wasserstein_distance, BoundsReport, CostMatrix,
};
