//! Operator-norm growth of the algebraic interpolant: the Lebesgue function
//! is maximized over an offset grid, and the estimates grow no faster than
//! a constant times `log^3 n`.
//!
//! Run with: `cargo run --example lebesgue_growth` (release profile
//! recommended for the larger scales)

use chebcube::lebesgue::{lebesgue_estimate, lebesgue_function};
use chebcube::transform::CubePoint;
use chebcube::Result;

fn main() -> Result<()> {
    // The Lebesgue function itself: the sum of |fundamental polynomial|
    // at one point. At a node it equals one; between nodes it grows.
    let x = CubePoint::algebraic(&[0.31, -0.62])?;
    println!(
        "pointwise Lebesgue function, dim 2, n = 8, at (0.31, -0.62): {:.6}\n",
        lebesgue_function(2, 8, &x)?
    );

    for (dim, scales) in [(2usize, vec![4i64, 8, 16]), (3, vec![4, 8])] {
        println!("dimension {dim} (offset grid with 4 n probes per axis):");
        println!(
            "  {:>4} {:>8} {:>12} {:>20}",
            "n", "nodes", "estimate", "estimate/log^3(n)"
        );
        let mut reports = Vec::new();
        for &n in &scales {
            let report = lebesgue_estimate(dim, n, 4 * n as usize)?;
            println!(
                "  {:>4} {:>8} {:>12.6} {:>20.6}",
                report.n, report.node_count, report.estimate, report.normalized
            );
            reports.push(report);
        }
        // Estimates are nondecreasing in n; the normalized column stays
        // within a constant of its first value.
        assert!(reports.windows(2).all(|w| w[0].estimate <= w[1].estimate));
        let first = reports[0].normalized;
        assert!(reports.iter().all(|r| r.normalized <= 4.0 * first));
        println!("  growth bounded by 4x the first normalized value\n");
    }
    Ok(())
}
