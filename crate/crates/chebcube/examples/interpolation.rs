//! The three interpolation operators: the trigonometric interpolant on the
//! half-open node lattice, its symmetrized closed-cube variant, and the
//! algebraic interpolant on the folded octant nodes — plus the fundamental
//! polynomials' delta property and partition of unity.
//!
//! Run with: `cargo run --example interpolation`

use chebcube::interp::{
    fundamental_poly, AlgebraicInterpolant, SymTrigInterpolant, TrigInterpolant,
};
use chebcube::kernels::KernelEvalConfig;
use chebcube::lattice::{generate_index_set, IndexSetKind, IndexVector};
use chebcube::transform::{cos_2pi, cos_pi, CubePoint};
use chebcube::Result;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    let n = 4i64;
    let cfg = KernelEvalConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);

    // Trigonometric interpolation reproduces any function that lives in its
    // own mode set, here a lattice exponential.  The mode set is the
    // half-open frequency tile: (nu1 + nu2, nu2 - nu1) in [-n, n)^2.
    let nu = IndexVector::new2(2, -1);
    let interp = TrigInterpolant::from_fn(2, n, |x| {
        Complex64::from_polar(
            1.0,
            2.0 * std::f64::consts::PI
                * (nu.get(0) as f64 * x.get(0) + nu.get(1) as f64 * x.get(1)),
        )
    })?;
    let probe = CubePoint::torus(&[0.17, -0.31])?;
    let got = interp.eval(&probe)?;
    let want = Complex64::from_polar(
        1.0,
        2.0 * std::f64::consts::PI
            * (nu.get(0) as f64 * probe.get(0) + nu.get(1) as f64 * probe.get(1)),
    );
    println!("trigonometric interpolant at n = {n} (dim 2):");
    println!(
        "  reproduces the exponential with frequency {nu}: error {:.2e}",
        (got - want).norm()
    );
    println!(
        "  coefficient at {nu}: {:.6}",
        interp.coefficient(&nu).unwrap().re
    );

    // The symmetrized variant samples the closed cube; interior nodes come
    // back exactly, and congruent boundary nodes are averaged coherently.
    let f = |x: &CubePoint| (cos_2pi(x.get(0)) + 0.5 * cos_2pi(x.get(1))).exp();
    let sym = SymTrigInterpolant::from_fn(2, n, f)?;
    let interior = CubePoint::torus(&[1.0 / (2.0 * n as f64), 1.0 / (2.0 * n as f64)])?;
    println!(
        "\nsymmetrized interpolant: interior node error {:.2e}",
        (sym.eval(&interior)? - f(&interior)).abs()
    );

    // The algebraic interpolant works on the cosine-mapped octant nodes.
    // Fundamental polynomials take value one at their own node, zero at the
    // others, and sum to one everywhere.
    println!("\nalgebraic interpolant at n = {n} (dim 2):");
    let octant = generate_index_set(IndexSetKind::SpatialOctant, 2, n)?;
    let mut worst = 0.0f64;
    for k in &octant {
        for j in &octant {
            let node = CubePoint::algebraic(&[
                cos_pi(j.get(0) as f64 / n as f64),
                cos_pi(j.get(1) as f64 / n as f64),
            ])?;
            let value = fundamental_poly(2, n, k, &node, &cfg)?;
            let want = if k == j { 1.0 } else { 0.0 };
            worst = worst.max((value - want).abs());
        }
    }
    println!(
        "  delta property over all {} node pairs: {worst:.2e}",
        octant.len() * octant.len()
    );

    let mut worst = 0.0f64;
    for _ in 0..50 {
        let x = CubePoint::algebraic(&[rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)])?;
        let total: f64 = octant
            .iter()
            .map(|k| fundamental_poly(2, n, k, &x, &cfg).unwrap())
            .sum();
        worst = worst.max((total - 1.0).abs());
    }
    println!("  partition of unity at 50 random points: {worst:.2e}");

    // Interpolating samples of a low-degree polynomial returns it exactly.
    let g = |t: &[f64]| 1.0 + t[0] * t[1] + 0.25 * (2.0 * t[1] * t[1] - 1.0);
    let algebraic = AlgebraicInterpolant::from_fn(2, n, g)?;
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let coords = [rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)];
        let x = CubePoint::algebraic(&coords)?;
        worst = worst.max((algebraic.eval(&x)? - g(&coords)).abs());
    }
    println!("  reproduction of an in-space polynomial at 50 points: {worst:.2e}");
    Ok(())
}
