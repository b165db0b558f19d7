//! Compact closed-form evaluators for the reproducing kernels.
//!
//! The kernels are finite exponential sums over the closed frequency sets of
//! [`crate::lattice`]; summing them literally costs `O(n^d)` per point.  The
//! closed forms here cost `O(1)` (2D) or `O(1)` with a handful of trig calls
//! (3D) and are validated against the literal sums in [`crate::oracle`].
//!
//! Removable singularities are handled in two layers:
//!
//! - the four-variable theta quotients reduce each factor around its nearest
//!   (half-)period and take the exact limit only when the reduced argument is
//!   exactly zero — they are total functions and need no configuration;
//! - the 2D quotient form and the 3D "x-form" have genuinely singular
//!   denominators; a [`KernelEvalConfig`] chooses between switching to the
//!   limit formula (default) or to the literal direct sum when a denominator
//!   falls below the threshold.

use crate::error::{Error, Result};
use crate::oracle::{direct_kernel_sum, KernelId};
use crate::transform::{cos_pi, sin_pi, to_homogeneous, Chart, CubePoint, HomogeneousPoint};

/// What to do when a denominator falls below the singular threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularFallback {
    /// Evaluate the removable limit (or the total homogeneous form in 3D).
    LimitFormula,
    /// Evaluate the literal exponential sum.
    DirectSum,
}

/// Singularity handling for the quotient-form kernel evaluators.
#[derive(Clone, Copy, Debug)]
pub struct KernelEvalConfig {
    /// Denominators smaller than this trigger the fallback.
    pub singular_threshold: f64,
    pub fallback: SingularFallback,
}

impl Default for KernelEvalConfig {
    fn default() -> Self {
        KernelEvalConfig {
            singular_threshold: 1e-8,
            fallback: SingularFallback::LimitFormula,
        }
    }
}

fn require_torus(x: &CubePoint, dim: usize) -> Result<()> {
    if x.dim() != dim {
        return Err(Error::UnsupportedDimension(x.dim()));
    }
    if x.chart() != Chart::Torus {
        return Err(Error::InvalidArgument(
            "kernels are evaluated in the torus chart".to_string(),
        ));
    }
    Ok(())
}

/// 2D Dirichlet-type kernel: `(1/4) * sum` of exponentials over the closed
/// frequency diamond `|nu_1| + |nu_2| <= n`.  Closed form
///
/// ```text
/// D_n(x) = (1/2) [cos((2n+1)pi x1) cos(pi x1) - cos((2n+1)pi x2) cos(pi x2)]
///          / (cos(2 pi x1) - cos(2 pi x2))
/// ```
///
/// with a removable singularity where `cos(2 pi x1) = cos(2 pi x2)`.  On the
/// diagonal the limit formula is used (or the direct sum, per config); where
/// additionally `sin(2 pi x1) ~ 0` (corner points) the direct sum is always
/// used.  1-periodic in each coordinate; `n >= 0`.
pub fn dirichlet_2d(n: i64, x: &CubePoint, cfg: &KernelEvalConfig) -> Result<f64> {
    require_torus(x, 2)?;
    if n < 0 {
        return Err(Error::ScaleOutOfRange {
            what: "Dirichlet kernel",
            n,
            min: 0,
        });
    }
    if n == 0 {
        return Ok(0.25);
    }
    let (x1, x2) = (x.get(0), x.get(1));
    let denom = cos_pi(2.0 * x1) - cos_pi(2.0 * x2);
    if denom.abs() >= cfg.singular_threshold {
        let m = (2 * n + 1) as f64;
        let num = cos_pi(m * x1) * cos_pi(x1) - cos_pi(m * x2) * cos_pi(x2);
        return Ok(0.5 * num / denom);
    }
    match cfg.fallback {
        SingularFallback::DirectSum => Ok(direct_kernel_sum(KernelId::Dirichlet2d, n, x)?.re),
        SingularFallback::LimitFormula => {
            // cos(2 pi x1) = cos(2 pi x2) means x2 = ±x1 (mod 1); the kernel
            // is even and 1-periodic in each variable, so the diagonal limit
            // at u = x1 covers every branch.
            let u = x1;
            let s = sin_pi(2.0 * u);
            if s.abs() < cfg.singular_threshold {
                // Corner (u on the half-integer grid): L'Hopital degenerates;
                // the literal sum is the correct value.
                return Ok(direct_kernel_sum(KernelId::Dirichlet2d, n, x)?.re);
            }
            let m = (2 * n + 1) as f64;
            let num = m * sin_pi(m * u) * cos_pi(u) + cos_pi(m * u) * sin_pi(u);
            Ok(0.5 * num / (2.0 * s))
        }
    }
}

/// 2D symmetrized kernel: the reciprocal-class-size weighted exponential sum
/// over the closed frequency diamond, normalized to 1 at the origin:
///
/// ```text
/// Phi_n(x) = (1/(2 n^2)) { 2 [D_n(x) + D_{n-1}(x)]
///            - (1/2) (cos(2 pi n x1) + cos(2 pi n x2)) }
/// ```
///
/// The boundary of the diamond carries weight 1/2 except the four axis
/// vertices, which carry 1/4 — averaging consecutive Dirichlet kernels halves
/// the boundary, and the cosine term removes the remaining vertex excess.
pub fn phi_star_2d(n: i64, x: &CubePoint, cfg: &KernelEvalConfig) -> Result<f64> {
    require_torus(x, 2)?;
    if n < 1 {
        return Err(Error::ScaleOutOfRange {
            what: "symmetrized 2D kernel",
            n,
            min: 1,
        });
    }
    let dn = dirichlet_2d(n, x, cfg)?;
    let dn1 = dirichlet_2d(n - 1, x, cfg)?;
    let nf = n as f64;
    let vertex = 0.5 * (cos_pi(2.0 * nf * x.get(0)) + cos_pi(2.0 * nf * x.get(1)));
    Ok((2.0 * (dn + dn1) - vertex) / (2.0 * nf * nf))
}

/// One factor `sin(m pi t) / sin(pi t)` of the theta kernel, reduced around
/// the nearest integer; exact limit `m * (-1)^{k(m-1)}` at `t = k`.
fn theta_factor(m: i64, t: f64) -> f64 {
    let k = t.round();
    let r = t - k;
    let sign = if ((k as i64) * (m - 1)) % 2 == 0 {
        1.0
    } else {
        -1.0
    };
    if r == 0.0 {
        sign * m as f64
    } else {
        sign * sin_pi(m as f64 * r) / sin_pi(r)
    }
}

/// The four-variable theta kernel `prod_{i=1}^4 sin(m pi t_i) / sin(pi t_i)`
/// on homogeneous coordinates; `theta(m, 0) = m^4`.  Total function (each
/// factor takes its exact limit); `m <= 0` gives 0.
pub fn theta(m: i64, t: &HomogeneousPoint) -> f64 {
    if m <= 0 {
        return 0.0;
    }
    (0..4).map(|i| theta_factor(m, t.get(i))).product()
}

/// One factor `sin(m pi s) / sin(2 pi s)` (even `m`), reduced around the
/// nearest half-integer; exact limit `(m/2) * (-1)^{h(m-2)/2}` at `s = h/2`.
fn rho_factor(m: i64, s: f64) -> f64 {
    debug_assert!(m % 2 == 0 && m > 0, "rho factors need positive even m");
    let h = (2.0 * s).round();
    let r = s - h / 2.0;
    let sign = if ((h as i64) * ((m - 2) / 2)) % 2 == 0 {
        1.0
    } else {
        -1.0
    };
    if r == 0.0 {
        sign * (m / 2) as f64
    } else {
        sign * sin_pi(m as f64 * r) / sin_pi(2.0 * r)
    }
}

/// The odd theta correction: the exponential sum over the nested odd shells,
/// in the closed sum-of-products form
///
/// ```text
/// theta_odd_n = sum_j rho_a(t_j) prod_{i != j} rho_b(t_i),
/// (a, b) = (n, n+2) for even n, (n+3, n+1) for odd n,
/// ```
///
/// where `rho_m(s) = sin(m pi s)/sin(2 pi s)` (all indices even).  Total
/// function; `n <= 0` gives 0 (empty shell).
pub fn theta_odd(n: i64, t: &HomogeneousPoint) -> f64 {
    if n <= 0 {
        return 0.0;
    }
    let (a, b) = if n % 2 == 0 {
        (n, n + 2)
    } else {
        (n + 3, n + 1)
    };
    let rho_a: Vec<f64> = (0..4).map(|i| rho_factor(a, t.get(i))).collect();
    let rho_b: Vec<f64> = (0..4).map(|i| rho_factor(b, t.get(i))).collect();
    (0..4)
        .map(|j| {
            rho_a[j]
                * (0..4)
                    .filter(|&i| i != j)
                    .map(|i| rho_b[i])
                    .product::<f64>()
        })
        .sum()
}

/// The pairwise-closed 3D Dirichlet kernel in homogeneous coordinates:
///
/// ```text
/// D_n = theta_{n+1} - theta_n - (theta_odd_n - theta_odd_{n-2})
/// ```
///
/// Equals the unnormalized exponential sum over the pairwise-closed
/// frequency set; `n >= 0` (the value at `n = 0` is identically 1).
pub fn dn_star_3d(n: i64, t: &HomogeneousPoint) -> Result<f64> {
    if n < 0 {
        return Err(Error::ScaleOutOfRange {
            what: "pairwise Dirichlet kernel",
            n,
            min: 0,
        });
    }
    Ok(theta(n + 1, t) - theta(n, t) - (theta_odd(n, t) - theta_odd(n - 2, t)))
}

/// `sin(2 pi m t) / sin(2 pi t)`, reduced around the nearest half-integer;
/// exact limit `m * (-1)^{h(m-1)}` at `t = h/2`; identically 0 for `m = 0`.
fn edge_ratio(m: i64, t: f64) -> f64 {
    if m == 0 {
        return 0.0;
    }
    let h = (2.0 * t).round();
    let r = t - h / 2.0;
    let sign = if ((h as i64) * (m - 1)) % 2 == 0 {
        1.0
    } else {
        -1.0
    };
    if r == 0.0 {
        sign * m as f64
    } else {
        sign * sin_pi(2.0 * m as f64 * r) / sin_pi(2.0 * r)
    }
}

/// 3D symmetrized kernel: the reciprocal-class-size weighted exponential sum
/// over the pairwise-closed frequency set, normalized to 1 at the origin.
///
/// Averaging consecutive pairwise Dirichlet kernels leaves the boundary
/// classes overweighted; the three correction groups below subtract the
/// excess per class type (edge classes of size 3, vertex classes of size 6,
/// and — for even `n` — the centered vertex classes of size 4):
///
/// ```text
/// 2 n^3 Phi_n = (1/2)(D_n + D_{n-1})
///   - (1/3) sum_nu r_m(t_nu) sum_{j != nu} cos 2 pi (n t_j + floor(n/2) t_nu)
///   - (1/3) sum_{mu < nu} cos 2 pi n (t_mu + t_nu)
///   - [n even] (1/2) sum_j cos 2 pi n t_j ,     m = floor((n-1)/2).
/// ```
///
/// Total function; validated against the literal weighted sum.
pub fn phi_star_3d(n: i64, x: &CubePoint) -> Result<f64> {
    require_torus(x, 3)?;
    if n < 1 {
        return Err(Error::ScaleOutOfRange {
            what: "symmetrized 3D kernel",
            n,
            min: 1,
        });
    }
    let t = to_homogeneous(x)?;
    let bracket = phi_star_3d_bracket(n, &t)?;
    Ok(bracket / (2.0 * n.pow(3) as f64))
}

fn phi_star_3d_bracket(n: i64, t: &HomogeneousPoint) -> Result<f64> {
    let nf = n as f64;
    let half = n / 2;
    let m_edge = (n - 1) / 2;
    let mut bracket = 0.5 * (dn_star_3d(n, t)? + dn_star_3d(n - 1, t)?);
    // Edge classes (size 3).
    let mut edge = 0.0;
    for nu in 0..4 {
        let r = edge_ratio(m_edge, t.get(nu));
        if r != 0.0 {
            let mut inner = 0.0;
            for j in 0..4 {
                if j != nu {
                    inner += cos_pi(2.0 * (nf * t.get(j) + half as f64 * t.get(nu)));
                }
            }
            edge += r * inner;
        }
    }
    bracket -= edge / 3.0;
    // Vertex classes of size 6 (the octahedron vertices).
    let mut pair = 0.0;
    for mu in 0..4 {
        for nu in mu + 1..4 {
            pair += cos_pi(2.0 * nf * (t.get(mu) + t.get(nu)));
        }
    }
    bracket -= pair / 3.0;
    // Centered vertex classes of size 4 exist only for even n.
    if n % 2 == 0 {
        let axis: f64 = (0..4).map(|j| cos_pi(2.0 * nf * t.get(j))).sum();
        bracket -= 0.5 * axis;
    }
    Ok(bracket)
}

/// `G_a(x) = cos^2(a pi x1) + cos^2(a pi x2) + cos^2(a pi x3)
///  - 2 cos(a pi x1) cos(a pi x2) cos(a pi x3) - 1`, the polynomial identity
/// `G_a(x) = 4 prod_i sin(a pi t_i)` in homogeneous coordinates.
fn g_poly(a: i64, x: &CubePoint) -> f64 {
    let c1 = cos_pi(a as f64 * x.get(0));
    let c2 = cos_pi(a as f64 * x.get(1));
    let c3 = cos_pi(a as f64 * x.get(2));
    c1 * c1 + c2 * c2 + c3 * c3 - 2.0 * c1 * c2 * c3 - 1.0
}

/// The pairwise-closed 3D Dirichlet kernel evaluated directly in the cube
/// coordinates (the "x-form"): theta quotients become ratios of the
/// symmetric polynomials `G_a`, avoiding homogeneous coordinates on the
/// generic stratum.
///
/// Near the singular strata (any `t_i` within the threshold of a
/// half-integer, detected through `G_1(x)`, `G_1(2x)`, and the inner
/// denominators) the evaluation falls back per `cfg`: the homogeneous-
/// coordinate form (total) or the literal direct sum.
pub fn dn_3d_x(n: i64, x: &CubePoint, cfg: &KernelEvalConfig) -> Result<f64> {
    require_torus(x, 3)?;
    if n < 1 {
        return Err(Error::ScaleOutOfRange {
            what: "pairwise Dirichlet kernel",
            n,
            min: 1,
        });
    }
    let t = to_homogeneous(x)?;
    let x2 = CubePoint::torus(&[2.0 * x.get(0), 2.0 * x.get(1), 2.0 * x.get(2)])?;
    let g1 = g_poly(1, x);
    let g1_doubled = g_poly(1, &x2);

    let fallback = |t: &HomogeneousPoint| -> Result<f64> {
        match cfg.fallback {
            SingularFallback::LimitFormula => dn_star_3d(n, t),
            SingularFallback::DirectSum => {
                Ok(direct_kernel_sum(KernelId::PairwiseDirichlet3d, n, x)?.re)
            }
        }
    };

    if g1.abs() < cfg.singular_threshold || g1_doubled.abs() < cfg.singular_threshold {
        return fallback(&t);
    }
    // theta_{n+1} - theta_n as G-ratios.
    let theta_diff = (g_poly(n + 1, x) - g_poly(n, x)) / g1;
    // Odd corrections: theta_odd_m = (G_{b/2}(2x)/G_1(2x)) * sum_j sin(a pi t_j)/sin(b pi t_j)
    // with (a, b) = (m, m+2) for even m, (m+3, m+1) for odd m.
    let mut odd_terms = [0.0f64; 2];
    for (slot, m) in odd_terms.iter_mut().zip([n, n - 2]) {
        if m <= 0 {
            continue;
        }
        let (a, b) = if m % 2 == 0 {
            (m, m + 2)
        } else {
            (m + 3, m + 1)
        };
        let mut ratio_sum = 0.0;
        for j in 0..4 {
            let denom = sin_pi(b as f64 * t.get(j));
            if denom.abs() < cfg.singular_threshold {
                return fallback(&t);
            }
            ratio_sum += sin_pi(a as f64 * t.get(j)) / denom;
        }
        *slot = g_poly(b / 2, &x2) / g1_doubled * ratio_sum;
    }
    Ok(theta_diff - (odd_terms[0] - odd_terms[1]))
}
