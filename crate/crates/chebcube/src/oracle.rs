//! Brute-force reference implementations.
//!
//! Everything here is deliberately literal: exact moments from 1D
//! orthogonality, tensor-product Gauss-Chebyshev quadrature, coefficient
//! extraction by quadrature against the product basis, and kernel values by
//! summing every exponential in the defining index set.  The compact formulas
//! elsewhere in the crate are tested against these; the only code shared with
//! them is index-set generation from [`crate::lattice`].

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::Rational64;

use crate::cubature::WeightKind;
use crate::error::{Error, Result};
use crate::lattice::{
    classify_frequency, congruence_class, generate_index_set, CongruenceLattice, GeneratorMatrix,
    IndexSetKind, IndexVector,
};
use crate::transform::{CubePoint, HomogeneousPoint};

/// Exact normalized moment of the product Chebyshev basis element with
/// nonnegative multi-degree `j` against the weight:
///
/// - first kind: `(1/pi^d) ∫ prod T_{j_i} * W0 = 1` iff `j = 0`, else 0;
/// - second kind: `(1/pi^d) ∫ prod U_{j_i} * W1 = (1/2)^d` iff `j = 0`, else 0.
pub fn exact_moment(weight: WeightKind, j: &IndexVector) -> Result<Rational64> {
    let dim = j.dim();
    if j.coords().iter().any(|&c| c < 0) {
        return Err(Error::InvalidArgument(format!(
            "moment multi-degree must be nonnegative, got {j}"
        )));
    }
    let zero = j.coords().iter().all(|&c| c == 0);
    match weight {
        WeightKind::ChebyshevFirst => Ok(if zero {
            Rational64::from_integer(1)
        } else {
            Rational64::new(0, 1)
        }),
        WeightKind::ChebyshevSecond => Ok(if zero {
            Rational64::new(1, 1 << dim)
        } else {
            Rational64::new(0, 1)
        }),
        other => Err(Error::InvalidArgument(format!(
            "exact moments are defined for the algebraic weights, not {other}"
        ))),
    }
}

/// 1D normalized pair moment `(1/pi) ∫ T_a T_b w0` (first kind) or
/// `(1/pi) ∫ U_a U_b w1` (second kind).
pub fn chebyshev_pair_moment(weight: WeightKind, a: u32, b: u32) -> Result<Rational64> {
    match weight {
        WeightKind::ChebyshevFirst => Ok(if a != b {
            Rational64::new(0, 1)
        } else if a == 0 {
            Rational64::from_integer(1)
        } else {
            Rational64::new(1, 2)
        }),
        WeightKind::ChebyshevSecond => Ok(if a == b {
            Rational64::new(1, 2)
        } else {
            Rational64::new(0, 1)
        }),
        other => Err(Error::InvalidArgument(format!(
            "pair moments are defined for the algebraic weights, not {other}"
        ))),
    }
}

/// Table of exact normalized moments for one weight and dimension.
#[derive(Clone, Copy, Debug)]
pub struct MomentTable {
    dim: usize,
    weight: WeightKind,
}

impl MomentTable {
    pub fn new(dim: usize, weight: WeightKind) -> Result<Self> {
        if dim != 2 && dim != 3 {
            return Err(Error::UnsupportedDimension(dim));
        }
        if !matches!(
            weight,
            WeightKind::ChebyshevFirst | WeightKind::ChebyshevSecond
        ) {
            return Err(Error::InvalidArgument(format!(
                "moment tables exist for the algebraic weights, not {weight}"
            )));
        }
        Ok(MomentTable { dim, weight })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn weight(&self) -> WeightKind {
        self.weight
    }

    /// Moment of the basis element with multi-degree `j`.
    pub fn moment(&self, j: &IndexVector) -> Result<Rational64> {
        if j.dim() != self.dim {
            return Err(Error::UnsupportedDimension(j.dim()));
        }
        exact_moment(self.weight, j)
    }
}

/// Tensor-product Gauss-Chebyshev quadrature of `f` against the normalized
/// weight: `order` nodes per axis, exact for per-axis polynomial degree
/// `<= 2 * order - 1`.
pub fn reference_quadrature<F>(dim: usize, weight: WeightKind, order: usize, f: F) -> Result<f64>
where
    F: Fn(&[f64]) -> f64,
{
    if dim != 2 && dim != 3 {
        return Err(Error::UnsupportedDimension(dim));
    }
    if order == 0 {
        return Err(Error::InvalidArgument(
            "quadrature order must be positive".to_string(),
        ));
    }
    let (nodes, weights) = gauss_chebyshev_1d(weight, order)?;
    let mut total = 0.0;
    if dim == 2 {
        for (t1, w1) in nodes.iter().zip(&weights) {
            for (t2, w2) in nodes.iter().zip(&weights) {
                total += w1 * w2 * f(&[*t1, *t2]);
            }
        }
    } else {
        for (t1, w1) in nodes.iter().zip(&weights) {
            for (t2, w2) in nodes.iter().zip(&weights) {
                for (t3, w3) in nodes.iter().zip(&weights) {
                    total += w1 * w2 * w3 * f(&[*t1, *t2, *t3]);
                }
            }
        }
    }
    Ok(total)
}

/// 1D Gauss-Chebyshev nodes and normalized weights.
fn gauss_chebyshev_1d(weight: WeightKind, order: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let m = order as f64;
    match weight {
        WeightKind::ChebyshevFirst => {
            // Nodes cos((2i-1)pi/2m), equal weights 1/m for (1/pi)∫ f w0.
            let nodes = (1..=order)
                .map(|i| ((2 * i - 1) as f64 * std::f64::consts::PI / (2.0 * m)).cos())
                .collect();
            let weights = vec![1.0 / m; order];
            Ok((nodes, weights))
        }
        WeightKind::ChebyshevSecond => {
            // Nodes cos(i pi/(m+1)), weights sin^2(i pi/(m+1))/(m+1) for
            // (1/pi)∫ f w1.
            let mut nodes = Vec::with_capacity(order);
            let mut weights = Vec::with_capacity(order);
            for i in 1..=order {
                let theta = i as f64 * std::f64::consts::PI / (m + 1.0);
                nodes.push(theta.cos());
                weights.push(theta.sin().powi(2) / (m + 1.0));
            }
            Ok((nodes, weights))
        }
        other => Err(Error::InvalidArgument(format!(
            "reference quadrature is defined for the algebraic weights, not {other}"
        ))),
    }
}

/// Chebyshev coefficients of `f` on `[-1,1]^dim` up to per-axis degree
/// `resolution / 2`, extracted by Gauss-Chebyshev quadrature against the
/// first-kind basis.
///
/// Valid whenever `resolution >= 2 * (degree of f per axis)`; callers probing
/// the support of a polynomial must supply at least that resolution.
pub fn coefficient_extract<F>(
    dim: usize,
    f: F,
    resolution: usize,
) -> Result<BTreeMap<IndexVector, f64>>
where
    F: Fn(&[f64]) -> f64,
{
    if dim != 2 && dim != 3 {
        return Err(Error::UnsupportedDimension(dim));
    }
    if resolution < 2 {
        return Err(Error::InvalidArgument(
            "coefficient extraction needs resolution >= 2".to_string(),
        ));
    }
    let m = resolution;
    let max_deg = resolution / 2;
    // First-kind Gauss-Chebyshev grid: theta_i = (2i-1) pi / 2m.
    let thetas: Vec<f64> = (1..=m)
        .map(|i| (2 * i - 1) as f64 * std::f64::consts::PI / (2.0 * m as f64))
        .collect();
    let points: Vec<f64> = thetas.iter().map(|t| t.cos()).collect();
    // cos_table[deg][i] = cos(deg * theta_i) = T_deg(points[i]).
    let cos_table: Vec<Vec<f64>> = (0..=max_deg)
        .map(|deg| thetas.iter().map(|t| (deg as f64 * t).cos()).collect())
        .collect();

    let mut out = BTreeMap::new();
    if dim == 2 {
        let mut values = vec![vec![0.0; m]; m];
        for (i1, v1) in values.iter_mut().enumerate() {
            for (i2, v) in v1.iter_mut().enumerate() {
                *v = f(&[points[i1], points[i2]]);
            }
        }
        for d1 in 0..=max_deg {
            for d2 in 0..=max_deg {
                let mut acc = 0.0;
                for i1 in 0..m {
                    let mut inner = 0.0;
                    for i2 in 0..m {
                        inner += values[i1][i2] * cos_table[d2][i2];
                    }
                    acc += inner * cos_table[d1][i1];
                }
                let nonzero = usize::from(d1 > 0) + usize::from(d2 > 0);
                let coeff = acc * (1 << nonzero) as f64 / (m * m) as f64;
                out.insert(IndexVector::new2(d1 as i64, d2 as i64), coeff);
            }
        }
    } else {
        let mut values = vec![vec![vec![0.0; m]; m]; m];
        for (i1, v1) in values.iter_mut().enumerate() {
            for (i2, v2) in v1.iter_mut().enumerate() {
                for (i3, v) in v2.iter_mut().enumerate() {
                    *v = f(&[points[i1], points[i2], points[i3]]);
                }
            }
        }
        for d1 in 0..=max_deg {
            for d2 in 0..=max_deg {
                for d3 in 0..=max_deg {
                    let mut acc = 0.0;
                    for i1 in 0..m {
                        for i2 in 0..m {
                            let mut inner = 0.0;
                            for i3 in 0..m {
                                inner += values[i1][i2][i3] * cos_table[d3][i3];
                            }
                            acc += inner * cos_table[d2][i2] * cos_table[d1][i1];
                        }
                    }
                    let nonzero = usize::from(d1 > 0) + usize::from(d2 > 0) + usize::from(d3 > 0);
                    let coeff = acc * (1 << nonzero) as f64 / (m * m * m) as f64;
                    out.insert(IndexVector::new3(d1 as i64, d2 as i64, d3 as i64), coeff);
                }
            }
        }
    }
    Ok(out)
}

/// Literal per-axis fold count: how many equal-weight trig nodes `j` in the
/// half-open box map to the algebraic node labeled `k` (octant index).
/// This is the reference for the first-kind cubature weights.
pub fn fold_count(dim: usize, n: i64, k: &IndexVector) -> Result<u64> {
    if !crate::lattice::index_set_contains(IndexSetKind::SpatialOctant, dim, n, k)? {
        return Err(Error::OutsideIndexSet {
            index: k.to_string(),
            set: format!("{} at n = {n}", IndexSetKind::SpatialOctant.name()),
        });
    }
    let spatial = generate_index_set(IndexSetKind::SpatialHalfOpen, dim, n)?;
    let two_n = 2 * n;
    let mut count = 0u64;
    for j in &spatial {
        let matches = (0..dim).all(|i| {
            (j.get(i) - k.get(i)).rem_euclid(two_n) == 0
                || (j.get(i) + k.get(i)).rem_euclid(two_n) == 0
        });
        if matches {
            count += 1;
        }
    }
    Ok(count)
}

/// Which kernel a literal sum should reproduce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelId {
    /// 2D: `(1/4) * sum over the closed frequency diamond` of `e(nu . x)`.
    Dirichlet2d,
    /// 2D: `(1/2n^2) * sum` with reciprocal-class-size weights.
    SymmetrizedKernel2d,
    /// 3D: unnormalized sum over the pairwise-closed frequency set.
    PairwiseDirichlet3d,
    /// 3D: `(1/2n^3) * sum` with reciprocal-class-size weights.
    SymmetrizedKernel3d,
}

/// Evaluates the kernel named by `id` as a literal exponential sum over its
/// defining index set.  Ground truth for the compact formulas.
pub fn direct_kernel_sum(id: KernelId, n: i64, x: &CubePoint) -> Result<Complex64> {
    let dim = match id {
        KernelId::Dirichlet2d | KernelId::SymmetrizedKernel2d => 2,
        _ => 3,
    };
    if x.dim() != dim {
        return Err(Error::UnsupportedDimension(x.dim()));
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    let phase = |nu: &IndexVector| -> Complex64 {
        let dot: f64 = nu
            .coords()
            .iter()
            .zip(x.coords())
            .map(|(&a, &b)| a as f64 * b)
            .sum();
        Complex64::from_polar(1.0, two_pi * dot)
    };
    match id {
        KernelId::Dirichlet2d => {
            let set = generate_index_set(IndexSetKind::FrequencyClosed, 2, n)?;
            let sum: Complex64 = set.iter().map(phase).sum();
            Ok(sum / 4.0)
        }
        KernelId::SymmetrizedKernel2d => {
            let set = generate_index_set(IndexSetKind::FrequencyClosed, 2, n)?;
            let lat = CongruenceLattice::Generator(GeneratorMatrix::new(2, n)?);
            let mut sum = Complex64::new(0.0, 0.0);
            for nu in &set {
                let class_size = congruence_class(nu, &set, &lat)?.len() as f64;
                sum += phase(nu) / class_size;
            }
            Ok(sum / (2.0 * (n * n) as f64))
        }
        KernelId::PairwiseDirichlet3d => {
            let set = generate_index_set(IndexSetKind::FrequencyPairwiseClosed, 3, n)?;
            Ok(set.iter().map(phase).sum())
        }
        KernelId::SymmetrizedKernel3d => {
            let set = generate_index_set(IndexSetKind::FrequencyPairwiseClosed, 3, n)?;
            let mut sum = Complex64::new(0.0, 0.0);
            for nu in &set {
                let class = classify_frequency(n, nu)?;
                sum += phase(nu) / class.multiplicity as f64;
            }
            Ok(sum / (2.0 * n.pow(3) as f64))
        }
    }
}

/// The homogeneous exponent sets behind the 3D theta kernels: integer
/// 4-vectors summing to zero with all components congruent mod 4.
///
/// `enumerate_h_star(n)` restricts to pairwise spread `<= 4n` (both
/// parities); `enumerate_h_odd(n)` to the all-odd members; `enumerate_g(n)`
/// to the all-even members (the image of the pairwise-closed 3D set).
fn enumerate_h(n: i64, keep: impl Fn(&[i64; 4]) -> bool) -> Vec<[i64; 4]> {
    let bound = 3 * n;
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                let d = -(a + b + c);
                if d < -bound || d > bound {
                    continue;
                }
                let v = [a, b, c, d];
                let congruent = v.iter().all(|x| x.rem_euclid(4) == a.rem_euclid(4));
                if !congruent {
                    continue;
                }
                let spread_ok = (0..4).all(|i| (i + 1..4).all(|j| (v[i] - v[j]).abs() <= 4 * n));
                if spread_ok && keep(&v) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// All members of the spread-limited homogeneous exponent set.
pub fn enumerate_h_star(n: i64) -> Vec<[i64; 4]> {
    enumerate_h(n, |_| true)
}

/// The all-odd members (exponents of the odd theta correction).
pub fn enumerate_h_odd(n: i64) -> Vec<[i64; 4]> {
    enumerate_h(n, |v| v[0] % 2 != 0)
}

/// The all-even members; in bijection with the pairwise-closed 3D set.
pub fn enumerate_g(n: i64) -> Vec<[i64; 4]> {
    enumerate_h(n, |v| v[0] % 2 == 0)
}

fn hom_exponential(j: &[i64; 4], t: &HomogeneousPoint) -> Complex64 {
    let dot: f64 = j
        .iter()
        .zip(t.coords())
        .map(|(&ji, ti)| ji as f64 * ti)
        .sum();
    Complex64::from_polar(1.0, std::f64::consts::PI * dot / 2.0)
}

/// Literal evaluation of the four-factor theta kernel: each factor is the
/// centered exponential sum `sum_{|l| <= m-1, l ≡ m-1 (mod 2)} e(pi i l t_i)`,
/// whose closed form is `sin(m pi t_i) / sin(pi t_i)`.
pub fn theta_direct(m: i64, t: &HomogeneousPoint) -> Complex64 {
    if m <= 0 {
        return Complex64::new(0.0, 0.0);
    }
    let mut prod = Complex64::new(1.0, 0.0);
    for i in 0..4 {
        let ti = t.get(i);
        let mut factor = Complex64::new(0.0, 0.0);
        let mut l = -(m - 1);
        while l < m {
            factor += Complex64::from_polar(1.0, std::f64::consts::PI * l as f64 * ti);
            l += 2;
        }
        prod *= factor;
    }
    prod
}

/// Literal evaluation of the odd theta correction: the sum of exponentials
/// over every odd shell `m = n, n-2, ..., >= 1` (shells are summed
/// separately; inner shells repeat).
pub fn theta_odd_direct(n: i64, t: &HomogeneousPoint) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    let mut m = n;
    while m >= 1 {
        for j in enumerate_h_odd(m) {
            total += hom_exponential(&j, t);
        }
        m -= 2;
    }
    total
}

/// Literal sum of exponentials over one spread-limited shell (both parities).
pub fn h_star_direct_sum(n: i64, t: &HomogeneousPoint) -> Complex64 {
    enumerate_h_star(n)
        .iter()
        .map(|j| hom_exponential(j, t))
        .sum()
}

/// Literal sum of exponentials over a single odd shell.
pub fn h_odd_shell_sum(n: i64, t: &HomogeneousPoint) -> Complex64 {
    enumerate_h_odd(n)
        .iter()
        .map(|j| hom_exponential(j, t))
        .sum()
}
