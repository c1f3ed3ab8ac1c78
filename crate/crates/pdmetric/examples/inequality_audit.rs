//! Audits the inequalities relating the profile, Prokhorov and Wasserstein
//! distances on one diagram pair; the in-process counterpart of
//! `pdmetric check`.
//!
//! Run with: cargo run --example inequality_audit

use pdmetric::{audit_bounds, GroundMetric, PersistenceDiagram};

fn main() {
    let x = PersistenceDiagram::from_pairs(&[(0.0, 4.0), (1.0, 7.0), (2.0, 2.5)]).unwrap();
    let y = PersistenceDiagram::from_pairs(&[(0.5, 4.5), (1.5, 9.0)]).unwrap();
    let metric = GroundMetric::LInfinity;

    for (p, q, c) in [(1.0, 1u32, 1.0), (2.0, 1, 1.0), (2.0, 2, 3.0)] {
        println!("--- p = {p}, q = {q}, c = {c} ---");
        let report = audit_bounds(&x, &y, p, q, c, metric);
        print!("{report}");
        assert!(report.all_hold());
    }
}
