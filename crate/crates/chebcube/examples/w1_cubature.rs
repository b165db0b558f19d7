//! Second-kind Chebyshev cubature: interior-node rules for the weight
//! `prod sqrt(1 - t_i^2)`, exact for products `U_a U_b (U_c)` up to total
//! degree `2n - 5` (pairwise sums in three dimensions).
//!
//! Run with: `cargo run --example w1_cubature`

use chebcube::cubature::{w1_rule, WeightKind};
use chebcube::lattice::IndexVector;
use chebcube::oracle::{exact_moment, reference_quadrature};
use chebcube::transform::{chebyshev_eval, ChebyshevKind};
use chebcube::Result;

fn main() -> Result<()> {
    // Second-kind rules drop the cube boundary entirely: all nodes are
    // interior, and the total mass is (1/2)^d (the weight's own integral
    // under the normalized measure).
    let rule = w1_rule(2, 4)?;
    println!(
        "dim 2, n = 4: {} interior nodes, {}",
        rule.node_count(),
        rule.exactness().describe()
    );
    let interior = rule
        .indices()
        .iter()
        .all(|k| k.coords().iter().all(|&c| 0 < c && c < 4));
    println!("  all indices strictly inside the octant: {interior}");
    let mass = rule.apply(|_| 1.0)?;
    println!("  discrete mass = {mass:.15} (exact 1/4 = 0.25)");

    // Exactness sweep against the closed-form second-kind moments.
    let n = 7;
    let rule = w1_rule(2, n)?;
    let degree = 2 * n - 5;
    let mut worst = 0.0f64;
    let mut checked = 0usize;
    for a in 0..=degree as u32 {
        for b in 0..=degree as u32 - a {
            let j = IndexVector::new2(a as i64, b as i64);
            let want = exact_moment(WeightKind::ChebyshevSecond, &j)?;
            let want = *want.numer() as f64 / *want.denom() as f64;
            let got = rule.apply(|t| {
                chebyshev_eval(ChebyshevKind::Second, a, t[0]).unwrap()
                    * chebyshev_eval(ChebyshevKind::Second, b, t[1]).unwrap()
            })?;
            worst = worst.max((got - want).abs());
            checked += 1;
        }
    }
    println!(
        "\ndim 2, n = {n}: worst moment error over {checked} products with degree <= {degree}: {worst:.2e}"
    );

    // Convergence on an analytic integrand under the second-kind weight.
    println!("\nconvergence on cos(t1) exp(t2), dim 2:");
    let want = reference_quadrature(2, WeightKind::ChebyshevSecond, 40, |t| {
        t[0].cos() * t[1].exp()
    })?;
    for n in [3i64, 4, 6, 8, 12, 16] {
        let got = w1_rule(2, n)?.apply(|t| t[0].cos() * t[1].exp())?;
        println!("  n = {n:>2}: error {:.3e}", (got - want).abs());
    }
    Ok(())
}
