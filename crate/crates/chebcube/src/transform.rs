//! Coordinate charts, index maps, homogeneous coordinates, and stable
//! trigonometric / Chebyshev primitives.
//!
//! Points live in one of two charts:
//!
//! - **torus**: coordinates `x` with period 1 (the rules' natural domain);
//!   any finite coordinates are accepted and treated modulo 1;
//! - **algebraic**: coordinates `t = cos(2 pi x) in [-1, 1]` (the square/cube
//!   the cubature rules ultimately integrate over).
//!
//! The index maps relabel integer node indices `j` as frequency indices
//! `k = 2n B^{-T} j` and back; they are parity-sensitive bijections between
//! the spatial and frequency index sets of [`crate::lattice`].

use crate::error::{Error, Result};
use crate::lattice::IndexVector;

/// Which coordinates a [`CubePoint`] carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chart {
    /// 1-periodic coordinates; canonical box `[-1/2, 1/2)^d`.
    Torus,
    /// Coordinates in `[-1, 1]^d` (images of the cosine map).
    Algebraic,
}

/// A point of the square or cube in one of the two charts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubePoint {
    coords: [f64; 3],
    dim: u8,
    chart: Chart,
}

impl CubePoint {
    /// Torus-chart point; accepts any finite coordinates (period 1).
    pub fn torus(coords: &[f64]) -> Result<Self> {
        Self::build(coords, Chart::Torus)
    }

    /// Algebraic-chart point; every coordinate must lie in `[-1, 1]`.
    pub fn algebraic(coords: &[f64]) -> Result<Self> {
        let p = Self::build(coords, Chart::Algebraic)?;
        for &c in p.coords() {
            if !(-1.0..=1.0).contains(&c) {
                return Err(Error::OutsideDomain { value: c });
            }
        }
        Ok(p)
    }

    fn build(coords: &[f64], chart: Chart) -> Result<Self> {
        let dim = coords.len();
        if dim != 2 && dim != 3 {
            return Err(Error::UnsupportedDimension(dim));
        }
        let mut arr = [0.0; 3];
        for (slot, &c) in arr.iter_mut().zip(coords) {
            if !c.is_finite() {
                return Err(Error::NonFiniteCoordinate { value: c });
            }
            *slot = c;
        }
        Ok(CubePoint {
            coords: arr,
            dim: dim as u8,
            chart,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords[..self.dim as usize]
    }

    pub fn get(&self, i: usize) -> f64 {
        self.coords()[i]
    }

    /// Torus points folded into the canonical box `[-1/2, 1/2)`; algebraic
    /// points are returned unchanged.
    pub fn reduced(&self) -> CubePoint {
        match self.chart {
            Chart::Algebraic => *self,
            Chart::Torus => {
                let mut out = *self;
                for c in out.coords.iter_mut().take(self.dim as usize) {
                    let mut r = *c - c.round();
                    // c.round() ties away from zero, so r lands in [-1/2, 1/2];
                    // fold the +1/2 endpoint down to -1/2 for canonicity.
                    if r == 0.5 {
                        r = -0.5;
                    }
                    *c = r;
                }
                out
            }
        }
    }
}

impl std::fmt::Display for CubePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Torus chart to algebraic chart: `t_i = cos(2 pi x_i)`.
///
/// Exact at quarter periods: `x_i in Z/4` maps to `t_i in {-1, 0, 1}` with no
/// rounding error.
pub fn cosine_map(x: &CubePoint) -> Result<CubePoint> {
    if x.chart() != Chart::Torus {
        return Err(Error::InvalidArgument(
            "cosine_map expects a torus-chart point".to_string(),
        ));
    }
    let t: Vec<f64> = x.coords().iter().map(|&c| cos_pi(2.0 * c)).collect();
    CubePoint::algebraic(&t)
}

/// Algebraic chart to torus chart: `x_i = arccos(t_i) / (2 pi) in [0, 1/2]`.
pub fn arccos_map(t: &CubePoint) -> Result<CubePoint> {
    if t.chart() != Chart::Algebraic {
        return Err(Error::InvalidArgument(
            "arccos_map expects an algebraic-chart point".to_string(),
        ));
    }
    let x: Vec<f64> = t
        .coords()
        .iter()
        .map(|&c| c.acos() / (2.0 * std::f64::consts::PI))
        .collect();
    CubePoint::torus(&x)
}

/// Spatial index to frequency index, 2D: `k = (j_1 + j_2, j_2 - j_1)`.
pub fn index_map_2d(j: &IndexVector) -> Result<IndexVector> {
    require_dim(j, 2)?;
    Ok(IndexVector::new2(j.get(0) + j.get(1), j.get(1) - j.get(0)))
}

/// Inverse of [`index_map_2d`]; errors unless `k_1 ≡ k_2 (mod 2)`.
pub fn index_map_2d_inverse(k: &IndexVector) -> Result<IndexVector> {
    require_dim(k, 2)?;
    let (a, b) = (k.get(0), k.get(1));
    if (a + b).rem_euclid(2) != 0 {
        return Err(Error::ParityMismatch {
            index: k.to_string(),
        });
    }
    Ok(IndexVector::new2((a - b) / 2, (a + b) / 2))
}

/// Spatial index to frequency index, 3D:
/// `k = (-j_1 + j_2 + j_3, j_1 - j_2 + j_3, j_1 + j_2 - j_3)`.
pub fn index_map_3d(j: &IndexVector) -> Result<IndexVector> {
    require_dim(j, 3)?;
    let (a, b, c) = (j.get(0), j.get(1), j.get(2));
    Ok(IndexVector::new3(-a + b + c, a - b + c, a + b - c))
}

/// Inverse of [`index_map_3d`]; errors unless all `k_i` share one parity.
pub fn index_map_3d_inverse(k: &IndexVector) -> Result<IndexVector> {
    require_dim(k, 3)?;
    let (a, b, c) = (k.get(0), k.get(1), k.get(2));
    if (a + b).rem_euclid(2) != 0 || (a + c).rem_euclid(2) != 0 {
        return Err(Error::ParityMismatch {
            index: k.to_string(),
        });
    }
    Ok(IndexVector::new3((b + c) / 2, (a + c) / 2, (a + b) / 2))
}

/// Dimension-dispatching index map.
pub fn index_map(j: &IndexVector) -> Result<IndexVector> {
    match j.dim() {
        2 => index_map_2d(j),
        3 => index_map_3d(j),
        d => Err(Error::UnsupportedDimension(d)),
    }
}

/// Dimension-dispatching inverse index map.
pub fn index_map_inverse(k: &IndexVector) -> Result<IndexVector> {
    match k.dim() {
        2 => index_map_2d_inverse(k),
        3 => index_map_3d_inverse(k),
        d => Err(Error::UnsupportedDimension(d)),
    }
}

fn require_dim(v: &IndexVector, dim: usize) -> Result<()> {
    if v.dim() != dim {
        return Err(Error::UnsupportedDimension(v.dim()));
    }
    Ok(())
}

/// Tolerance on the zero-sum constraint of homogeneous coordinates.
pub const HOMOGENEOUS_SUM_TOL: f64 = 1e-14;

/// A 3D torus point in homogeneous coordinates: four reals summing to zero.
///
/// The 3D kernels are symmetric functions of these four coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HomogeneousPoint {
    t: [f64; 4],
}

impl HomogeneousPoint {
    /// Validates the zero-sum constraint (`|sum| <= 1e-14`).
    pub fn new(t: [f64; 4]) -> Result<Self> {
        for &c in &t {
            if !c.is_finite() {
                return Err(Error::NonFiniteCoordinate { value: c });
            }
        }
        let sum = t[0] + t[1] + t[2] + t[3];
        if sum.abs() > HOMOGENEOUS_SUM_TOL {
            return Err(Error::NotHomogeneous {
                sum,
                tol: HOMOGENEOUS_SUM_TOL,
            });
        }
        Ok(HomogeneousPoint { t })
    }

    pub fn coords(&self) -> [f64; 4] {
        self.t
    }

    pub fn get(&self, i: usize) -> f64 {
        self.t[i]
    }
}

/// Torus coordinates to homogeneous coordinates:
/// `t_1 = (-x_1+x_2+x_3)/2`, `t_2 = (x_1-x_2+x_3)/2`, `t_3 = (x_1+x_2-x_3)/2`,
/// `t_4 = -(t_1+t_2+t_3)`, so the zero-sum constraint holds exactly.
pub fn to_homogeneous(x: &CubePoint) -> Result<HomogeneousPoint> {
    if x.dim() != 3 {
        return Err(Error::UnsupportedDimension(x.dim()));
    }
    if x.chart() != Chart::Torus {
        return Err(Error::InvalidArgument(
            "to_homogeneous expects a torus-chart point".to_string(),
        ));
    }
    let (x1, x2, x3) = (x.get(0), x.get(1), x.get(2));
    let t1 = 0.5 * (-x1 + x2 + x3);
    let t2 = 0.5 * (x1 - x2 + x3);
    let t3 = 0.5 * (x1 + x2 - x3);
    let t4 = -(t1 + t2 + t3);
    HomogeneousPoint::new([t1, t2, t3, t4])
}

/// Inverse of [`to_homogeneous`]: `x_1 = t_2+t_3`, `x_2 = t_1+t_3`,
/// `x_3 = t_1+t_2`.
pub fn from_homogeneous(t: &HomogeneousPoint) -> Result<CubePoint> {
    let c = t.coords();
    CubePoint::torus(&[c[1] + c[2], c[0] + c[2], c[0] + c[1]])
}

/// Frequency index to the four-component homogeneous exponent:
/// `j = 2 * (-k_1+k_2+k_3, k_1-k_2+k_3, k_1+k_2-k_3, -k_1-k_2-k_3)`.
///
/// Satisfies `k . x = (j . t) / 4` for `t = to_homogeneous(x)`, so
/// exponentials in `x` become exponentials in homogeneous coordinates.
pub fn hom_index_map(k: &IndexVector) -> Result<[i64; 4]> {
    require_dim(k, 3)?;
    let (a, b, c) = (k.get(0), k.get(1), k.get(2));
    Ok([
        2 * (-a + b + c),
        2 * (a - b + c),
        2 * (a + b - c),
        2 * (-a - b - c),
    ])
}

/// Chebyshev polynomial family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebyshevKind {
    /// `T_m(cos θ) = cos(m θ)`.
    First,
    /// `U_m(cos θ) = sin((m+1) θ) / sin θ`.
    Second,
}

/// Evaluates `T_m(t)` or `U_m(t)` for `t in [-1, 1]` via the trigonometric
/// representation (numerically stable for all degrees used here).
///
/// At `t = ±1` the second-kind value is the exact limit `(±1)^m (m+1)`.
pub fn chebyshev_eval(kind: ChebyshevKind, degree: u32, t: f64) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::NonFiniteCoordinate { value: t });
    }
    if !(-1.0..=1.0).contains(&t) {
        return Err(Error::OutsideDomain { value: t });
    }
    let theta = t.acos();
    let m = degree as f64;
    Ok(match kind {
        ChebyshevKind::First => (m * theta).cos(),
        ChebyshevKind::Second => {
            let s = theta.sin();
            if s == 0.0 {
                // theta = 0 or pi: the limit (±1)^m (m+1).
                let sign = if t > 0.0 || degree.is_multiple_of(2) {
                    1.0
                } else {
                    -1.0
                };
                sign * (m + 1.0)
            } else {
                ((m + 1.0) * theta).sin() / s
            }
        }
    })
}

/// Three-term recurrence evaluation of the same polynomials; an independent
/// reference for [`chebyshev_eval`] (used by the oracle tests).
pub fn chebyshev_eval_recurrence(kind: ChebyshevKind, degree: u32, t: f64) -> f64 {
    let (mut prev, mut curr) = match kind {
        ChebyshevKind::First => (1.0, t),
        ChebyshevKind::Second => (1.0, 2.0 * t),
    };
    if degree == 0 {
        return prev;
    }
    for _ in 1..degree {
        (prev, curr) = (curr, 2.0 * t * curr - prev);
    }
    curr
}

/// `sin(pi x)` with argument reduction to the nearest integer; exact zeros at
/// integers and exact ±1 at half-integers.
pub fn sin_pi(x: f64) -> f64 {
    let m = x.round();
    let r = x - m;
    let sign = if (m as i64) & 1 == 0 { 1.0 } else { -1.0 };
    if r == 0.0 {
        return 0.0;
    }
    if r.abs() == 0.5 {
        return sign * r.signum();
    }
    sign * (std::f64::consts::PI * r).sin()
}

/// `cos(pi x)` with argument reduction to the nearest integer; exact ±1 at
/// integers and exact zeros at half-integers.
pub fn cos_pi(x: f64) -> f64 {
    let m = x.round();
    let r = x - m;
    let sign = if (m as i64) & 1 == 0 { 1.0 } else { -1.0 };
    if r == 0.0 {
        return sign;
    }
    if r.abs() == 0.5 {
        return 0.0;
    }
    sign * (std::f64::consts::PI * r).cos()
}

/// `sin(2 pi x)` via [`sin_pi`].
pub fn sin_2pi(x: f64) -> f64 {
    sin_pi(2.0 * x)
}

/// `cos(2 pi x)` via [`cos_pi`].
pub fn cos_2pi(x: f64) -> f64 {
    cos_pi(2.0 * x)
}
