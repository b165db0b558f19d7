//! Lebesgue function and Lebesgue constant estimation for the algebraic
//! interpolant.
//!
//! The Lebesgue function `L(x) = sum_k |l_k(x)|` is maximized over two probe
//! families: a node-avoiding offset grid `x_j = (g + 1/2) / (2 G)` covering
//! `[0, 1/2]^d` (one torus fundamental octant — the function is even and
//! 1-periodic per axis, so this loses nothing) and the exact node grid
//! `x_j = k / 2n` (where the function should return to 1).
//!
//! Evaluating every fundamental polynomial at every probe through the
//! compact kernels would cost `O(G^d |nodes| 2^d)` kernel calls; instead the
//! octant-mode expansion
//!
//! ```text
//! l_k(x) = (lambda_k / 2 n^d) sum_m w_m prod_j f(m_j, k_j, x_j)
//! ```
//!
//! is contracted one axis at a time, sharing the partial contractions across
//! the probe grid: the innermost stage costs `(n+1)^{d+1}` multiplies per
//! probe and the outer stages amortize to nothing.  Probe rows are processed
//! in parallel; the maximum is an associative reduction, so the result is
//! deterministic.

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::cubature::fold_weight;
use crate::error::{Error, Result};
use crate::interp::{fundamental_poly, octant_mode_weights};
use crate::kernels::KernelEvalConfig;
use crate::lattice::{generate_index_set, IndexSetKind};
use crate::transform::{cos_pi, CubePoint};

/// A Lebesgue-constant estimate at one scale.
#[derive(Clone, Copy, Debug, serde::Serialize, serde::Deserialize)]
pub struct LebesgueReport {
    pub dim: usize,
    pub n: i64,
    /// Number of interpolation nodes (octant node count).
    pub node_count: usize,
    /// Offset probes per axis.
    pub grid: usize,
    /// Max of the Lebesgue function over the offset and node grids.
    pub estimate: f64,
    /// `estimate / (ln n)^3`, the growth-normalized value.
    pub normalized: f64,
}

/// The Lebesgue function `sum_k |l_k(x)|` at one point, evaluated through
/// the compact kernels.  Reference route; prefer [`lebesgue_estimate`] for
/// grid scans.
pub fn lebesgue_function(dim: usize, n: i64, x: &CubePoint) -> Result<f64> {
    let cfg = KernelEvalConfig::default();
    let octant = generate_index_set(IndexSetKind::SpatialOctant, dim, n)?;
    let mut total = 0.0;
    for k in &octant {
        total += fundamental_poly(dim, n, k, x, &cfg)?.abs();
    }
    Ok(total)
}

/// Per-axis factor table `f(m, k, x_g)` for the octant-mode expansion,
/// laid out as `[g][m][k]` with `k` contiguous.
fn axis_factors(n: i64, xs: &[f64]) -> Vec<f64> {
    let kdim = (n + 1) as usize;
    let mut table = vec![0.0f64; xs.len() * kdim * kdim];
    for (g, &x) in xs.iter().enumerate() {
        let base = g * kdim * kdim;
        for k in 0..kdim {
            table[base + k] = 1.0; // m = 0
        }
        for m in 1..kdim {
            let osc = 2.0 * cos_pi(2.0 * m as f64 * x);
            for k in 0..kdim {
                table[base + m * kdim + k] = osc * cos_pi((m * k) as f64 / n as f64);
            }
        }
    }
    table
}

/// Octant-mode weights as a dense `(n+1)^d` tensor (zero off the closed
/// frequency set), plus the fold-weighted octant node list as flat indices
/// into an `(n+1)^d` value tensor.
struct Expansion {
    kdim: usize,
    weights: Vec<f64>,
    nodes: Vec<(usize, f64)>,
    scale: f64,
}

fn expansion(dim: usize, n: i64) -> Result<Expansion> {
    let kdim = (n + 1) as usize;
    let mut weights = vec![0.0f64; kdim.pow(dim as u32)];
    for (m, w) in octant_mode_weights(dim, n)? {
        let mut flat = 0usize;
        for i in 0..dim {
            flat = flat * kdim + m.get(i) as usize;
        }
        weights[flat] = w;
    }
    let octant = generate_index_set(IndexSetKind::SpatialOctant, dim, n)?;
    let mut nodes = Vec::with_capacity(octant.len());
    for k in &octant {
        let mut flat = 0usize;
        for i in 0..dim {
            flat = flat * kdim + k.get(i) as usize;
        }
        let lambda = fold_weight(dim, n, k)?
            .to_f64()
            .expect("fold weight is a small rational");
        nodes.push((flat, lambda));
    }
    Ok(Expansion {
        kdim,
        weights,
        nodes,
        scale: 1.0 / (2 * n.pow(dim as u32)) as f64,
    })
}

/// Max of the Lebesgue function over the tensor grid `xs x xs` (2D).
fn grid_max_2d(exp: &Expansion, table: &[f64], probes: usize) -> f64 {
    let kdim = exp.kdim;
    let plane = kdim * kdim;
    (0..probes)
        .into_par_iter()
        .map(|g1| {
            let e1 = &table[g1 * plane..(g1 + 1) * plane];
            // u[k1][m2] = sum_{m1} W[m1][m2] f(m1, k1, x_{g1})
            let mut u = vec![0.0f64; plane];
            for m1 in 0..kdim {
                let w_row = &exp.weights[m1 * kdim..(m1 + 1) * kdim];
                let f_row = &e1[m1 * kdim..(m1 + 1) * kdim];
                for k1 in 0..kdim {
                    let c = f_row[k1];
                    if c == 0.0 {
                        continue;
                    }
                    let u_row = &mut u[k1 * kdim..(k1 + 1) * kdim];
                    for (u_val, w_val) in u_row.iter_mut().zip(w_row) {
                        *u_val += c * w_val;
                    }
                }
            }
            let mut best = 0.0f64;
            let mut s = vec![0.0f64; plane];
            for g2 in 0..probes {
                let e2 = &table[g2 * plane..(g2 + 1) * plane];
                // s[k1][k2] = sum_{m2} u[k1][m2] f(m2, k2, x_{g2})
                s.iter_mut().for_each(|v| *v = 0.0);
                for k1 in 0..kdim {
                    let u_row = &u[k1 * kdim..(k1 + 1) * kdim];
                    let s_row = &mut s[k1 * kdim..(k1 + 1) * kdim];
                    for (m2, &u_val) in u_row.iter().enumerate() {
                        if u_val == 0.0 {
                            continue;
                        }
                        let f_row = &e2[m2 * kdim..(m2 + 1) * kdim];
                        for (s_val, f_val) in s_row.iter_mut().zip(f_row) {
                            *s_val += u_val * f_val;
                        }
                    }
                }
                let value: f64 = exp
                    .nodes
                    .iter()
                    .map(|&(flat, lambda)| lambda * s[flat].abs())
                    .sum();
                best = best.max(value * exp.scale);
            }
            best
        })
        .reduce(|| 0.0, f64::max)
}

/// Max of the Lebesgue function over the tensor grid `xs x xs x xs` (3D).
fn grid_max_3d(exp: &Expansion, table: &[f64], probes: usize) -> f64 {
    let kdim = exp.kdim;
    let plane = kdim * kdim;
    let cube = plane * kdim;
    (0..probes)
        .into_par_iter()
        .map(|g1| {
            let e1 = &table[g1 * plane..(g1 + 1) * plane];
            // u[k1][m2][m3] = sum_{m1} W[m1][m2][m3] f(m1, k1, x_{g1})
            let mut u = vec![0.0f64; cube];
            for m1 in 0..kdim {
                let w_block = &exp.weights[m1 * plane..(m1 + 1) * plane];
                let f_row = &e1[m1 * kdim..(m1 + 1) * kdim];
                for k1 in 0..kdim {
                    let c = f_row[k1];
                    if c == 0.0 {
                        continue;
                    }
                    let u_block = &mut u[k1 * plane..(k1 + 1) * plane];
                    for (u_val, w_val) in u_block.iter_mut().zip(w_block) {
                        *u_val += c * w_val;
                    }
                }
            }
            let mut best = 0.0f64;
            let mut v = vec![0.0f64; cube];
            let mut s = vec![0.0f64; cube];
            for g2 in 0..probes {
                let e2 = &table[g2 * plane..(g2 + 1) * plane];
                // v[k1][k2][m3] = sum_{m2} u[k1][m2][m3] f(m2, k2, x_{g2})
                v.iter_mut().for_each(|val| *val = 0.0);
                for k1 in 0..kdim {
                    let u_block = &u[k1 * plane..(k1 + 1) * plane];
                    let v_block = &mut v[k1 * plane..(k1 + 1) * plane];
                    for m2 in 0..kdim {
                        let u_row = &u_block[m2 * kdim..(m2 + 1) * kdim];
                        let f_row = &e2[m2 * kdim..(m2 + 1) * kdim];
                        for k2 in 0..kdim {
                            let c = f_row[k2];
                            if c == 0.0 {
                                continue;
                            }
                            let v_row = &mut v_block[k2 * kdim..(k2 + 1) * kdim];
                            for (v_val, u_val) in v_row.iter_mut().zip(u_row) {
                                *v_val += c * u_val;
                            }
                        }
                    }
                }
                for g3 in 0..probes {
                    let e3 = &table[g3 * plane..(g3 + 1) * plane];
                    // s[k1][k2][k3] = sum_{m3} v[k1][k2][m3] f(m3, k3, x_{g3})
                    s.iter_mut().for_each(|val| *val = 0.0);
                    for kk in 0..plane {
                        let v_row = &v[kk * kdim..(kk + 1) * kdim];
                        let s_row = &mut s[kk * kdim..(kk + 1) * kdim];
                        for (m3, &v_val) in v_row.iter().enumerate() {
                            if v_val == 0.0 {
                                continue;
                            }
                            let f_row = &e3[m3 * kdim..(m3 + 1) * kdim];
                            for (s_val, f_val) in s_row.iter_mut().zip(f_row) {
                                *s_val += v_val * f_val;
                            }
                        }
                    }
                    let value: f64 = exp
                        .nodes
                        .iter()
                        .map(|&(flat, lambda)| lambda * s[flat].abs())
                        .sum();
                    best = best.max(value * exp.scale);
                }
            }
            best
        })
        .reduce(|| 0.0, f64::max)
}

fn grid_max(dim: usize, exp: &Expansion, n: i64, xs: &[f64]) -> f64 {
    let table = axis_factors(n, xs);
    match dim {
        2 => grid_max_2d(exp, &table, xs.len()),
        _ => grid_max_3d(exp, &table, xs.len()),
    }
}

/// Estimates the Lebesgue constant at scale `n`: the maximum of the Lebesgue
/// function over `grid` node-avoiding offset probes per axis plus the exact
/// node grid.  `grid` must be at least `4 n`, enough to resolve the
/// oscillation between adjacent nodes.
pub fn lebesgue_estimate(dim: usize, n: i64, grid: usize) -> Result<LebesgueReport> {
    if dim != 2 && dim != 3 {
        return Err(Error::UnsupportedDimension(dim));
    }
    if n < 1 {
        return Err(Error::ScaleOutOfRange {
            what: "Lebesgue estimate",
            n,
            min: 1,
        });
    }
    if (grid as i64) < 4 * n {
        return Err(Error::InvalidArgument(format!(
            "the offset grid needs at least 4 n = {} probes per axis, got {grid}",
            4 * n
        )));
    }
    let exp = expansion(dim, n)?;
    let offset_xs: Vec<f64> = (0..grid)
        .map(|g| (2 * g + 1) as f64 / (4 * grid) as f64)
        .collect();
    let node_xs: Vec<f64> = (0..=n).map(|k| k as f64 / (2 * n) as f64).collect();
    let over_offsets = grid_max(dim, &exp, n, &offset_xs);
    let over_nodes = grid_max(dim, &exp, n, &node_xs);
    let estimate = over_offsets.max(over_nodes);
    let log_n = (n as f64).ln();
    Ok(LebesgueReport {
        dim,
        n,
        node_count: exp.nodes.len(),
        grid,
        estimate,
        normalized: estimate / log_n.powi(3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct max over the same probe families, through the compact kernels.
    fn direct_grid_max(dim: usize, n: i64, grid: usize) -> f64 {
        let offset_xs: Vec<f64> = (0..grid)
            .map(|g| (2 * g + 1) as f64 / (4 * grid) as f64)
            .collect();
        let node_xs: Vec<f64> = (0..=n).map(|k| k as f64 / (2 * n) as f64).collect();
        let mut best = 0.0f64;
        for xs in [&offset_xs, &node_xs] {
            let mut probe = vec![0usize; dim];
            loop {
                let coords: Vec<f64> = probe.iter().map(|&g| xs[g]).collect();
                let x = CubePoint::torus(&coords).unwrap();
                best = best.max(lebesgue_function(dim, n, &x).unwrap());
                // Odometer over the tensor grid.
                let mut axis = 0;
                loop {
                    probe[axis] += 1;
                    if probe[axis] < xs.len() {
                        break;
                    }
                    probe[axis] = 0;
                    axis += 1;
                    if axis == dim {
                        break;
                    }
                }
                if axis == dim {
                    break;
                }
            }
        }
        best
    }

    #[test]
    fn fast_path_matches_direct_kernel_route() {
        for (dim, n, grid) in [(2usize, 2i64, 9usize), (2, 3, 13), (3, 2, 8)] {
            let fast = lebesgue_estimate(dim, n, grid).unwrap();
            let direct = direct_grid_max(dim, n, grid);
            assert!(
                (fast.estimate - direct).abs() < 1e-9 * direct,
                "dim {dim}, n = {n}: fast {} vs direct {direct}",
                fast.estimate
            );
        }
    }

    #[test]
    fn estimate_rejects_a_grid_coarser_than_the_node_spacing() {
        let err = lebesgue_estimate(2, 4, 15).unwrap_err();
        assert!(err.to_string().contains("16"), "message: {err}");
        assert!(lebesgue_estimate(2, 4, 16).is_ok());
    }

    #[test]
    fn lebesgue_function_returns_to_one_at_nodes() {
        for (dim, n) in [(2usize, 4i64), (3, 2)] {
            let x = CubePoint::torus(&vec![1.0 / (2.0 * n as f64); dim]).unwrap();
            let v = lebesgue_function(dim, n, &x).unwrap();
            assert!((v - 1.0).abs() < 1e-9, "node value at dim {dim}: {v}");
            let report = lebesgue_estimate(dim, n, 4 * n as usize).unwrap();
            assert!(report.estimate >= v - 1e-9);
        }
    }

    #[test]
    fn estimates_grow_with_scale() {
        let mut last = 0.0;
        for n in [2i64, 4, 8] {
            let report = lebesgue_estimate(2, n, 4 * n as usize).unwrap();
            assert!(
                report.estimate > last,
                "estimate at n = {n}: {} after {last}",
                report.estimate
            );
            last = report.estimate;
        }
    }

    #[test]
    fn report_fields_are_consistent() {
        let report = lebesgue_estimate(2, 5, 20).unwrap();
        assert_eq!(report.dim, 2);
        assert_eq!(report.n, 5);
        assert_eq!(report.grid, 20);
        assert_eq!(report.node_count, 5 * 6 / 2 + 2 + 1);
        let log_n = 5.0f64.ln();
        assert!((report.normalized - report.estimate / log_n.powi(3)).abs() < 1e-12);
    }
}
