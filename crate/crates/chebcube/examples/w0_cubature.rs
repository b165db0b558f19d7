//! First-kind Chebyshev cubature: rational-weight rules on cosine-mapped
//! lattice nodes, exact for products `T_a T_b (T_c)` up to total degree
//! `2n - 1` (pairwise sums in three dimensions), with a split even/odd grid
//! evaluation form in two dimensions and spectral convergence on analytic
//! integrands.
//!
//! Run with: `cargo run --example w0_cubature`

use chebcube::cubature::{w0_rule, w0_split_apply_2d, WeightKind};
use chebcube::lattice::IndexVector;
use chebcube::oracle::{exact_moment, reference_quadrature};
use chebcube::transform::{chebyshev_eval, ChebyshevKind};
use chebcube::Result;

fn main() -> Result<()> {
    // The smallest two-dimensional rule, printed in full.
    let rule = w0_rule(2, 2)?;
    println!(
        "dim 2, n = 2: {} nodes, normalization {}, {}",
        rule.node_count(),
        rule.normalization(),
        rule.exactness().describe()
    );
    let weights = rule
        .rational_weights()
        .expect("first-kind weights are rational");
    for (i, (k, weight)) in rule.indices().iter().zip(weights).enumerate() {
        println!(
            "  k = {:<8} node = ({:>4.1}, {:>4.1})  weight = {weight}",
            k.to_string(),
            rule.node(i)[0],
            rule.node(i)[1],
        );
    }

    // Exactness sweep: every first-kind product with total degree < 2n
    // integrates to its exact rational moment.
    let n = 6;
    let rule = w0_rule(2, n)?;
    let mut worst = 0.0f64;
    let mut checked = 0usize;
    for a in 0..=(2 * n - 1) as u32 {
        for b in 0..=(2 * n - 1) as u32 - a {
            let j = IndexVector::new2(a as i64, b as i64);
            let want = exact_moment(WeightKind::ChebyshevFirst, &j)?;
            let want = *want.numer() as f64 / *want.denom() as f64;
            let got = rule.apply(|t| {
                chebyshev_eval(ChebyshevKind::First, a, t[0]).unwrap()
                    * chebyshev_eval(ChebyshevKind::First, b, t[1]).unwrap()
            })?;
            worst = worst.max((got - want).abs());
            checked += 1;
        }
    }
    println!(
        "\ndim 2, n = {n}: worst moment error over {checked} products with degree <= {}: {worst:.2e}",
        2 * n - 1
    );

    // The assembled rule equals the interleaved even/odd grid evaluation.
    let f = |t: &[f64]| (t[0] + 0.5 * t[1]).exp();
    let assembled = rule.apply(f)?;
    let split = w0_split_apply_2d(n, f)?;
    println!(
        "split-form agreement: |{assembled:.15} - {split:.15}| = {:.2e}",
        (assembled - split).abs()
    );

    // Spectral convergence on an analytic integrand, against an
    // independent high-order reference.
    println!("\nconvergence on exp(t1 + t2 + t3), dim 3:");
    let want = reference_quadrature(3, WeightKind::ChebyshevFirst, 40, |t| {
        (t[0] + t[1] + t[2]).exp()
    })?;
    for n in [2i64, 4, 6, 8, 12] {
        let got = w0_rule(3, n)?.apply(|t| (t[0] + t[1] + t[2]).exp())?;
        println!("  n = {n:>2}: error {:.3e}", (got - want).abs());
    }
    Ok(())
}
