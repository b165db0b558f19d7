//! Interpolation operators on the lattice node families.
//!
//! Three operators share the node lattice `j / 2n`:
//!
//! - [`TrigInterpolant`]: the plain trigonometric interpolant on the
//!   half-open node box, with one Fourier mode per residue class of the
//!   generator lattice;
//! - [`SymTrigInterpolant`]: its fully symmetric counterpart on the closed
//!   node box, a boundary-weighted sum of symmetrized-kernel translates;
//! - [`AlgebraicInterpolant`]: the polynomial interpolant on the folded
//!   (octant) Chebyshev nodes `cos(k pi / n)` in `[-1, 1]^d`, whose
//!   fundamental polynomials are symmetrized-kernel translates pushed
//!   through the cosine change of variables.
//!
//! [`reproducing_basis`] spans the exact polynomial space the algebraic
//! interpolant reproduces, one basis function per aliasing orbit.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::cubature::fold_weight;
use crate::error::{Error, Result};
use crate::kernels::{dirichlet_2d, phi_star_2d, phi_star_3d, KernelEvalConfig};
use crate::lattice::{
    classify_frequency, congruence_class, expected_cardinality, generate_index_set,
    index_set_contains, CongruenceLattice, GeneratorMatrix, IndexSetKind, IndexVector,
};
use crate::transform::{
    arccos_map, chebyshev_eval, cos_pi, sin_pi, Chart, ChebyshevKind, CubePoint,
};

/// Checks that the sample keys are exactly `expected` (which is sorted, as
/// produced by [`generate_index_set`]); names the first offending key.
fn validate_sample_keys<V>(
    samples: &BTreeMap<IndexVector, V>,
    expected: &[IndexVector],
    set_name: &str,
) -> Result<()> {
    let mut keys = samples.keys();
    for want in expected {
        match keys.next() {
            Some(got) if got == want => {}
            Some(got) if got < want => {
                return Err(Error::SampleKeyMismatch {
                    detail: format!("unexpected sample key {got} (not in {set_name})"),
                });
            }
            _ => {
                return Err(Error::SampleKeyMismatch {
                    detail: format!("missing sample for node {want} of {set_name}"),
                });
            }
        }
    }
    if let Some(extra) = keys.next() {
        return Err(Error::SampleKeyMismatch {
            detail: format!("unexpected sample key {extra} (not in {set_name})"),
        });
    }
    Ok(())
}

/// Folds an algebraic point onto the torus chart (each coordinate through
/// `arccos / 2 pi`); torus points pass through unchanged.
fn to_torus_point(x: &CubePoint) -> Result<CubePoint> {
    match x.chart() {
        Chart::Torus => Ok(*x),
        Chart::Algebraic => arccos_map(x),
    }
}

/// Symmetrized kernel translate `Phi((x - k / 2n) on the torus)`, dispatched
/// on dimension.
fn phi_star_translate(
    dim: usize,
    n: i64,
    x: &CubePoint,
    k: &IndexVector,
    signs: usize,
    cfg: &KernelEvalConfig,
) -> Result<f64> {
    let denom = (2 * n) as f64;
    let mut coords = [0.0f64; 3];
    for (i, c) in coords.iter_mut().enumerate().take(dim) {
        let s = if signs & (1 << i) != 0 { -1.0 } else { 1.0 };
        *c = s * x.get(i) - k.get(i) as f64 / denom;
    }
    let y = CubePoint::torus(&coords[..dim])?;
    match dim {
        2 => phi_star_2d(n, &y, cfg),
        3 => phi_star_3d(n, &y),
        other => Err(Error::UnsupportedDimension(other)),
    }
}

/// Trigonometric interpolant on the half-open node box: matches the given
/// nodal values and has one Fourier mode per residue class of the generator
/// lattice.  Equals the normalized sum of Dirichlet-type kernel translates,
/// reorganized into an explicit Fourier expansion (the discrete Fourier
/// coefficients below are exactly the per-mode collapse of that sum).
#[derive(Clone, Debug)]
pub struct TrigInterpolant {
    dim: usize,
    n: i64,
    modes: Vec<IndexVector>,
    coeffs: Vec<Complex64>,
}

impl TrigInterpolant {
    /// Interpolates complex nodal data keyed by the half-open node box.
    pub fn new(dim: usize, n: i64, samples: &BTreeMap<IndexVector, Complex64>) -> Result<Self> {
        let nodes = generate_index_set(IndexSetKind::SpatialHalfOpen, dim, n)?;
        validate_sample_keys(samples, &nodes, IndexSetKind::SpatialHalfOpen.name())?;
        let modes = generate_index_set(IndexSetKind::FrequencyHalfOpen, dim, n)?;
        let scale = 1.0 / (2 * n.pow(dim as u32)) as f64;
        let mut coeffs = Vec::with_capacity(modes.len());
        for nu in &modes {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in &nodes {
                // Character phase -2 pi (nu . j) / 2n, evaluated with the
                // range-reduced trig helpers so lattice phases stay exact.
                let p = -(nu.dot(j) as f64) / n as f64;
                acc += samples[j] * Complex64::new(cos_pi(p), sin_pi(p));
            }
            coeffs.push(acc * scale);
        }
        Ok(TrigInterpolant {
            dim,
            n,
            modes,
            coeffs,
        })
    }

    /// Interpolates real nodal data.
    pub fn new_real(dim: usize, n: i64, samples: &BTreeMap<IndexVector, f64>) -> Result<Self> {
        let complex = samples
            .iter()
            .map(|(k, &v)| (*k, Complex64::new(v, 0.0)))
            .collect();
        Self::new(dim, n, &complex)
    }

    /// Samples a torus function on the node lattice and interpolates it.
    pub fn from_fn<F>(dim: usize, n: i64, f: F) -> Result<Self>
    where
        F: Fn(&CubePoint) -> Complex64,
    {
        let nodes = generate_index_set(IndexSetKind::SpatialHalfOpen, dim, n)?;
        let denom = (2 * n) as f64;
        let mut samples = BTreeMap::new();
        for j in nodes {
            let mut coords = [0.0f64; 3];
            for (slot, &c) in coords.iter_mut().zip(j.coords()) {
                *slot = c as f64 / denom;
            }
            let x = CubePoint::torus(&coords[..dim])?;
            samples.insert(j, f(&x));
        }
        Self::new(dim, n, &samples)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn scale(&self) -> i64 {
        self.n
    }

    /// The Fourier modes, one per residue class of the generator lattice.
    pub fn modes(&self) -> &[IndexVector] {
        &self.modes
    }

    /// The Fourier coefficient attached to a mode, if it is one of
    /// [`Self::modes`].
    pub fn coefficient(&self, nu: &IndexVector) -> Option<Complex64> {
        self.modes
            .binary_search(nu)
            .ok()
            .map(|pos| self.coeffs[pos])
    }

    /// Evaluates the interpolant at a torus point.
    pub fn eval(&self, x: &CubePoint) -> Result<Complex64> {
        if x.dim() != self.dim {
            return Err(Error::UnsupportedDimension(x.dim()));
        }
        if x.chart() != Chart::Torus {
            return Err(Error::InvalidArgument(
                "trigonometric interpolants are evaluated in the torus chart".to_string(),
            ));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (nu, a) in self.modes.iter().zip(&self.coeffs) {
            let mut p = 0.0;
            for i in 0..self.dim {
                p += 2.0 * nu.get(i) as f64 * x.get(i);
            }
            acc += a * Complex64::new(cos_pi(p), sin_pi(p));
        }
        Ok(acc)
    }
}

/// Fully symmetric trigonometric interpolant on the closed node box: the
/// plain sum of symmetrized-kernel translates `sum_k f_k Phi(x - k/2n)`.
///
/// Interior samples are reproduced; at a boundary node the value is the sum
/// of the samples over the node's congruence class modulo `2n Z^d` (the
/// boundary aliasing rule) — e.g. an edge-pair node returns the sum of its
/// two samples and a corner node the sum over all identified corners.
#[derive(Clone, Debug)]
pub struct SymTrigInterpolant {
    dim: usize,
    n: i64,
    indices: Vec<IndexVector>,
    samples: Vec<f64>,
    cfg: KernelEvalConfig,
}

impl SymTrigInterpolant {
    /// Interpolates nodal data keyed by the closed node box.
    pub fn new(dim: usize, n: i64, samples: &BTreeMap<IndexVector, f64>) -> Result<Self> {
        let indices = generate_index_set(IndexSetKind::SpatialClosed, dim, n)?;
        validate_sample_keys(samples, &indices, IndexSetKind::SpatialClosed.name())?;
        let values = indices.iter().map(|k| samples[k]).collect();
        Ok(SymTrigInterpolant {
            dim,
            n,
            indices,
            samples: values,
            cfg: KernelEvalConfig::default(),
        })
    }

    /// Samples a torus function on the closed node box and interpolates it.
    pub fn from_fn<F>(dim: usize, n: i64, f: F) -> Result<Self>
    where
        F: Fn(&CubePoint) -> f64,
    {
        let indices = generate_index_set(IndexSetKind::SpatialClosed, dim, n)?;
        let denom = (2 * n) as f64;
        let mut samples = BTreeMap::new();
        for k in indices {
            let mut coords = [0.0f64; 3];
            for (slot, &c) in coords.iter_mut().zip(k.coords()) {
                *slot = c as f64 / denom;
            }
            let x = CubePoint::torus(&coords[..dim])?;
            samples.insert(k, f(&x));
        }
        Self::new(dim, n, &samples)
    }

    /// Replaces the kernel singularity handling.
    pub fn with_config(mut self, cfg: KernelEvalConfig) -> Self {
        self.cfg = cfg;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn scale(&self) -> i64 {
        self.n
    }

    /// Evaluates the interpolant at a torus point.
    pub fn eval(&self, x: &CubePoint) -> Result<f64> {
        if x.dim() != self.dim {
            return Err(Error::UnsupportedDimension(x.dim()));
        }
        if x.chart() != Chart::Torus {
            return Err(Error::InvalidArgument(
                "trigonometric interpolants are evaluated in the torus chart".to_string(),
            ));
        }
        let mut acc = 0.0;
        for (k, f_k) in self.indices.iter().zip(&self.samples) {
            if *f_k != 0.0 {
                acc += f_k * phi_star_translate(self.dim, self.n, x, k, 0, &self.cfg)?;
            }
        }
        Ok(acc)
    }
}

/// Fundamental polynomial of the algebraic interpolant: `1` at the octant
/// node `k`, `0` at every other octant node.  Computed as the fold-weighted
/// sign-average of symmetrized-kernel translates,
///
/// ```text
/// l_k(x) = lambda_k 2^{-d} sum_{sigma} Phi(sigma u - k / 2n),
/// ```
///
/// where `u` is the torus preimage of `x` under the cosine map and
/// `lambda_k` is the fold weight of `k`.  Accepts either chart.
pub fn fundamental_poly(
    dim: usize,
    n: i64,
    k: &IndexVector,
    x: &CubePoint,
    cfg: &KernelEvalConfig,
) -> Result<f64> {
    if !index_set_contains(IndexSetKind::SpatialOctant, dim, n, k)? {
        return Err(Error::OutsideIndexSet {
            index: k.to_string(),
            set: format!("{} at n = {n}", IndexSetKind::SpatialOctant.name()),
        });
    }
    if x.dim() != dim {
        return Err(Error::UnsupportedDimension(x.dim()));
    }
    let u = to_torus_point(x)?;
    let lambda = fold_weight(dim, n, k)?
        .to_f64()
        .expect("fold weight is a small rational");
    let mut acc = 0.0;
    for signs in 0..(1usize << dim) {
        acc += phi_star_translate(dim, n, &u, k, signs, cfg)?;
    }
    Ok(lambda * acc / (1usize << dim) as f64)
}

/// The 2D fundamental polynomial in closed form:
///
/// ```text
/// l_k(x) = (lambda_k / 4 n^2) [ sum_sigma (D_n + D_{n-1})(sigma u - k/2n)
///          - (-1)^{k_1} cos(2 pi n u_1) - (-1)^{k_2} cos(2 pi n u_2) ]
/// ```
///
/// — the sign-averaged kernel route of [`fundamental_poly`] with the
/// symmetrized kernel expanded and its vertex correction collapsed across
/// the sign average.  Kept as an independent evaluation route.
pub fn fundamental_poly_closed_2d(
    n: i64,
    k: &IndexVector,
    x: &CubePoint,
    cfg: &KernelEvalConfig,
) -> Result<f64> {
    if !index_set_contains(IndexSetKind::SpatialOctant, 2, n, k)? {
        return Err(Error::OutsideIndexSet {
            index: k.to_string(),
            set: format!("{} at n = {n}", IndexSetKind::SpatialOctant.name()),
        });
    }
    if x.dim() != 2 {
        return Err(Error::UnsupportedDimension(x.dim()));
    }
    let u = to_torus_point(x)?;
    let denom = (2 * n) as f64;
    let mut translate_sum = 0.0;
    for signs in 0..4usize {
        let mut coords = [0.0f64; 3];
        for (i, c) in coords.iter_mut().enumerate().take(2) {
            let s = if signs & (1 << i) != 0 { -1.0 } else { 1.0 };
            *c = s * u.get(i) - k.get(i) as f64 / denom;
        }
        let y = CubePoint::torus(&coords[..2])?;
        translate_sum += dirichlet_2d(n, &y, cfg)? + dirichlet_2d(n - 1, &y, cfg)?;
    }
    let sign1 = if k.get(0) % 2 == 0 { 1.0 } else { -1.0 };
    let sign2 = if k.get(1) % 2 == 0 { 1.0 } else { -1.0 };
    let vertex =
        sign1 * cos_pi(2.0 * n as f64 * u.get(0)) + sign2 * cos_pi(2.0 * n as f64 * u.get(1));
    let lambda = fold_weight(2, n, k)?
        .to_f64()
        .expect("fold weight is a small rational");
    Ok(lambda / (4 * n * n) as f64 * (translate_sum - vertex))
}

/// Polynomial interpolant on the folded Chebyshev nodes `cos(k pi / n)`,
/// `k` in the octant node set: `L f = sum_k f_k l_k` with the fundamental
/// polynomials of [`fundamental_poly`].
#[derive(Clone, Debug)]
pub struct AlgebraicInterpolant {
    dim: usize,
    n: i64,
    indices: Vec<IndexVector>,
    samples: Vec<f64>,
    cfg: KernelEvalConfig,
}

impl AlgebraicInterpolant {
    /// Interpolates nodal data keyed by the octant node set.
    pub fn new(dim: usize, n: i64, samples: &BTreeMap<IndexVector, f64>) -> Result<Self> {
        let indices = generate_index_set(IndexSetKind::SpatialOctant, dim, n)?;
        validate_sample_keys(samples, &indices, IndexSetKind::SpatialOctant.name())?;
        let values = indices.iter().map(|k| samples[k]).collect();
        Ok(AlgebraicInterpolant {
            dim,
            n,
            indices,
            samples: values,
            cfg: KernelEvalConfig::default(),
        })
    }

    /// Samples a function on the algebraic nodes and interpolates it.
    pub fn from_fn<F>(dim: usize, n: i64, f: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> f64,
    {
        let indices = generate_index_set(IndexSetKind::SpatialOctant, dim, n)?;
        let mut samples = BTreeMap::new();
        for k in indices {
            let node = Self::node_coords(dim, n, &k);
            samples.insert(k, f(&node[..dim]));
        }
        Self::new(dim, n, &samples)
    }

    /// Replaces the kernel singularity handling.
    pub fn with_config(mut self, cfg: KernelEvalConfig) -> Self {
        self.cfg = cfg;
        self
    }

    fn node_coords(dim: usize, n: i64, k: &IndexVector) -> [f64; 3] {
        let mut node = [0.0f64; 3];
        for (slot, &c) in node.iter_mut().zip(k.coords()).take(dim) {
            *slot = cos_pi(c as f64 / n as f64);
        }
        node
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn scale(&self) -> i64 {
        self.n
    }

    /// The octant node indices, in lexicographic order.
    pub fn indices(&self) -> &[IndexVector] {
        &self.indices
    }

    /// The algebraic coordinates of the `i`-th node.
    pub fn node(&self, i: usize) -> [f64; 3] {
        Self::node_coords(self.dim, self.n, &self.indices[i])
    }

    /// Evaluates the interpolant; accepts either chart.
    pub fn eval(&self, x: &CubePoint) -> Result<f64> {
        if x.dim() != self.dim {
            return Err(Error::UnsupportedDimension(x.dim()));
        }
        let u = to_torus_point(x)?;
        let signs = 1usize << self.dim;
        let mut acc = 0.0;
        for (k, f_k) in self.indices.iter().zip(&self.samples) {
            if *f_k == 0.0 {
                continue;
            }
            let lambda = fold_weight(self.dim, self.n, k)?
                .to_f64()
                .expect("fold weight is a small rational");
            let mut translate = 0.0;
            for s in 0..signs {
                translate += phi_star_translate(self.dim, self.n, &u, k, s, &self.cfg)?;
            }
            acc += f_k * lambda * translate / signs as f64;
        }
        Ok(acc)
    }
}

/// One element of the exact reproducing space of the algebraic interpolant:
/// the boundary-weighted sum of the Chebyshev products over one aliasing
/// orbit (the sign flips of one residue class of the closed frequency set).
#[derive(Clone, Debug)]
pub struct BasisFunction {
    rep: IndexVector,
    terms: Vec<(IndexVector, f64)>,
}

impl BasisFunction {
    /// The lexicographically smallest nonnegative mode of the orbit.
    pub fn rep(&self) -> &IndexVector {
        &self.rep
    }

    /// The modes of the orbit with their reciprocal-class-size weights.
    pub fn terms(&self) -> &[(IndexVector, f64)] {
        &self.terms
    }

    /// Evaluates the basis function; on the torus chart each term is
    /// `w prod_j cos(2 pi nu_j x_j)`, on the algebraic chart the equal
    /// Chebyshev product `w prod_j T_{|nu_j|}(t_j)`.
    pub fn eval(&self, x: &CubePoint) -> Result<f64> {
        let dim = x.dim();
        if dim != self.rep.dim() {
            return Err(Error::UnsupportedDimension(dim));
        }
        let mut acc = 0.0;
        for (nu, w) in &self.terms {
            let mut prod = *w;
            for i in 0..dim {
                prod *= match x.chart() {
                    Chart::Torus => cos_pi(2.0 * nu.get(i) as f64 * x.get(i)),
                    Chart::Algebraic => chebyshev_eval(
                        ChebyshevKind::First,
                        nu.get(i).unsigned_abs() as u32,
                        x.get(i),
                    )?,
                };
            }
            acc += prod;
        }
        Ok(acc)
    }
}

/// The reciprocal-class-size weight of every nonnegative mode of the closed
/// frequency set — the spectral coefficients of the symmetrized kernel
/// (`2 n^d Phi = sum_nu w_nu e_nu`) folded to the octant.  The fundamental
/// polynomials expand over exactly these modes:
///
/// ```text
/// l_k(x) = (lambda_k / 2 n^d) sum_m w_m prod_j f(m_j, k_j, x_j),
/// f(0, k, x) = 1,  f(m, k, x) = 2 cos(2 pi m x) cos(pi m k / n),
/// ```
///
/// which is the fast evaluation route used by [`crate::lebesgue`].
pub fn octant_mode_weights(dim: usize, n: i64) -> Result<BTreeMap<IndexVector, f64>> {
    let kind = match dim {
        2 => IndexSetKind::FrequencyClosed,
        3 => IndexSetKind::FrequencyPairwiseClosed,
        other => return Err(Error::UnsupportedDimension(other)),
    };
    let set = generate_index_set(kind, dim, n)?;
    let lattice = CongruenceLattice::Generator(GeneratorMatrix::new(dim, n)?);
    let mut weights = BTreeMap::new();
    for m in set.iter().filter(|m| m.coords().iter().all(|&c| c >= 0)) {
        let w = if dim == 2 {
            1.0 / congruence_class(m, &set, &lattice)?.len() as f64
        } else {
            classify_frequency(n, m)?
                .weight()
                .to_f64()
                .expect("class weight is a small rational")
        };
        weights.insert(*m, w);
    }
    Ok(weights)
}

/// The exact reproducing space of the algebraic interpolant at scale `n`,
/// as one [`BasisFunction`] per aliasing orbit.  The number of orbits equals
/// the number of octant nodes.
pub fn reproducing_basis(dim: usize, n: i64) -> Result<Vec<BasisFunction>> {
    let kind = match dim {
        2 => IndexSetKind::FrequencyClosed,
        3 => IndexSetKind::FrequencyPairwiseClosed,
        other => return Err(Error::UnsupportedDimension(other)),
    };
    let set = generate_index_set(kind, dim, n)?;
    // Reciprocal class sizes: congruence classes of the generator lattice.
    let mut weight = BTreeMap::new();
    if dim == 2 {
        let lattice = CongruenceLattice::Generator(GeneratorMatrix::new(2, n)?);
        for nu in &set {
            let class = congruence_class(nu, &set, &lattice)?;
            weight.insert(*nu, 1.0 / class.len() as f64);
        }
    } else {
        for nu in &set {
            weight.insert(
                *nu,
                classify_frequency(n, nu)?
                    .weight()
                    .to_f64()
                    .expect("class weight is a small rational"),
            );
        }
    }
    let lattice = CongruenceLattice::Generator(GeneratorMatrix::new(dim, n)?);
    let mut claimed: BTreeSet<IndexVector> = BTreeSet::new();
    let mut basis = Vec::new();
    for m in set.iter().filter(|m| m.coords().iter().all(|&c| c >= 0)) {
        if claimed.contains(m) {
            continue;
        }
        // The orbit: all classes of all sign flips of m, merged.
        let mut orbit: BTreeSet<IndexVector> = BTreeSet::new();
        for signs in 0..(1usize << dim) {
            let mut coords = [0i64; 3];
            for (i, slot) in coords.iter_mut().enumerate().take(dim) {
                let s = if signs & (1 << i) != 0 { -1 } else { 1 };
                *slot = s * m.get(i);
            }
            let flipped = IndexVector::new(&coords[..dim])?;
            for member in congruence_class(&flipped, &set, &lattice)? {
                orbit.insert(member);
            }
        }
        // Claim every octant face of the orbit so each orbit appears once.
        for nu in &orbit {
            claimed.insert(nu.map(|c| c.abs()));
        }
        let terms = orbit.iter().map(|nu| (*nu, weight[nu])).collect();
        basis.push(BasisFunction { rep: *m, terms });
    }
    debug_assert_eq!(
        basis.len() as i64,
        expected_cardinality(IndexSetKind::SpatialOctant, dim, n)?
            .expect("octant cardinality is closed-form"),
        "one aliasing orbit per octant node"
    );
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{classify_spatial, orthogonality_indicator};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_torus_point(rng: &mut ChaCha8Rng, dim: usize) -> CubePoint {
        let coords: Vec<f64> = (0..dim).map(|_| rng.random_range(-0.5..0.5)).collect();
        CubePoint::torus(&coords).unwrap()
    }

    fn random_algebraic_point(rng: &mut ChaCha8Rng, dim: usize) -> CubePoint {
        let coords: Vec<f64> = (0..dim).map(|_| rng.random_range(-1.0..1.0)).collect();
        CubePoint::algebraic(&coords).unwrap()
    }

    fn node_point(dim: usize, n: i64, j: &IndexVector) -> CubePoint {
        let denom = (2 * n) as f64;
        let coords: Vec<f64> = (0..dim).map(|i| j.get(i) as f64 / denom).collect();
        CubePoint::torus(&coords).unwrap()
    }

    #[test]
    fn trig_interpolant_reproduces_its_modes() {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for (dim, n) in [(2usize, 3i64), (3, 2)] {
            let modes = generate_index_set(IndexSetKind::FrequencyHalfOpen, dim, n).unwrap();
            for nu in modes.iter().step_by(3) {
                let interp = TrigInterpolant::from_fn(dim, n, |x| {
                    let mut p = 0.0;
                    for i in 0..dim {
                        p += 2.0 * nu.get(i) as f64 * x.get(i);
                    }
                    Complex64::new(cos_pi(p), sin_pi(p))
                })
                .unwrap();
                for _ in 0..5 {
                    let x = random_torus_point(&mut rng, dim);
                    let mut p = 0.0;
                    for i in 0..dim {
                        p += 2.0 * nu.get(i) as f64 * x.get(i);
                    }
                    let expect = Complex64::new(cos_pi(p), sin_pi(p));
                    let got = interp.eval(&x).unwrap();
                    assert!(
                        (got - expect).norm() < 1e-10,
                        "mode {nu} not reproduced at {x}: {got} vs {expect}"
                    );
                }
            }
        }
    }

    #[test]
    fn trig_interpolant_matches_literal_kernel_translate_sum() {
        // The Fourier-coefficient evaluation is an exact reorganization of
        // (1/2n^d) sum_j f_j K(x - j/2n) with K the unnormalized mode sum.
        let mut rng = ChaCha8Rng::seed_from_u64(103);
        for (dim, n) in [(2usize, 3i64), (3, 2)] {
            let nodes = generate_index_set(IndexSetKind::SpatialHalfOpen, dim, n).unwrap();
            let modes = generate_index_set(IndexSetKind::FrequencyHalfOpen, dim, n).unwrap();
            let samples: BTreeMap<IndexVector, Complex64> = nodes
                .iter()
                .map(|j| {
                    (
                        *j,
                        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                    )
                })
                .collect();
            let interp = TrigInterpolant::new(dim, n, &samples).unwrap();
            let scale = 1.0 / (2 * n.pow(dim as u32)) as f64;
            for _ in 0..10 {
                let x = random_torus_point(&mut rng, dim);
                let mut literal = Complex64::new(0.0, 0.0);
                for j in &nodes {
                    let mut kernel = Complex64::new(0.0, 0.0);
                    for nu in &modes {
                        let mut p = 0.0;
                        for i in 0..dim {
                            p += 2.0
                                * nu.get(i) as f64
                                * (x.get(i) - j.get(i) as f64 / (2 * n) as f64);
                        }
                        kernel += Complex64::new(cos_pi(p), sin_pi(p));
                    }
                    literal += samples[j] * kernel;
                }
                literal *= scale;
                let fast = interp.eval(&x).unwrap();
                assert!(
                    (fast - literal).norm() < 1e-10,
                    "dual route mismatch at {x}: {fast} vs {literal}"
                );
            }
        }
    }

    #[test]
    fn trig_interpolant_matches_nodal_data() {
        let mut rng = ChaCha8Rng::seed_from_u64(107);
        for (dim, n) in [(2usize, 4i64), (3, 2)] {
            let nodes = generate_index_set(IndexSetKind::SpatialHalfOpen, dim, n).unwrap();
            let samples: BTreeMap<IndexVector, Complex64> = nodes
                .iter()
                .map(|j| {
                    (
                        *j,
                        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                    )
                })
                .collect();
            let interp = TrigInterpolant::new(dim, n, &samples).unwrap();
            for j in &nodes {
                let got = interp.eval(&node_point(dim, n, j)).unwrap();
                assert!(
                    (got - samples[j]).norm() < 1e-11,
                    "nodal value at {j}: {got} vs {}",
                    samples[j]
                );
            }
        }
    }

    #[test]
    fn trig_interpolant_coefficients_collapse_kernel_translates() {
        // Interpolating a single mode makes exactly one coefficient 1.
        let dim = 2;
        let n = 3i64;
        let nu = IndexVector::new2(1, 1);
        assert!(index_set_contains(IndexSetKind::FrequencyHalfOpen, 2, n, &nu).unwrap());
        let interp = TrigInterpolant::from_fn(dim, n, |x| {
            let p = 2.0 * (nu.get(0) as f64 * x.get(0) + nu.get(1) as f64 * x.get(1));
            Complex64::new(cos_pi(p), sin_pi(p))
        })
        .unwrap();
        for mu in interp.modes() {
            let a = interp.coefficient(mu).unwrap();
            let expect = if *mu == nu { 1.0 } else { 0.0 };
            assert!(
                (a - expect).norm() < 1e-12,
                "coefficient at {mu}: {a} vs {expect}"
            );
        }
        // And aliased modes reproduce the representative: shifting nu by a
        // generator column lands outside the mode set but samples equally.
        let b = GeneratorMatrix::new(2, n).unwrap();
        let shift = b.mul_vec(&IndexVector::new2(0, 1)).unwrap();
        let aliased = IndexVector::new2(nu.get(0) + shift.get(0), nu.get(1) + shift.get(1));
        let interp2 = TrigInterpolant::from_fn(dim, n, |x| {
            let p = 2.0 * (aliased.get(0) as f64 * x.get(0) + aliased.get(1) as f64 * x.get(1));
            Complex64::new(cos_pi(p), sin_pi(p))
        })
        .unwrap();
        let a = interp2.coefficient(&nu).unwrap();
        assert!((a - 1.0).norm() < 1e-12, "aliased coefficient: {a}");
        // Cross-check the aliasing relation itself.
        let diff = aliased.sub(&nu);
        assert_eq!(
            orthogonality_indicator(
                2,
                n,
                &diff,
                crate::lattice::DiscreteOrthogonality::GeneratorSide
            )
            .unwrap(),
            1
        );
    }

    #[test]
    fn trig_interpolant_preserves_constants() {
        // I 1 = 1 everywhere: the normalized kernel translates form a
        // partition of unity.
        let mut rng = ChaCha8Rng::seed_from_u64(109);
        for (dim, n) in [(2usize, 3i64), (3, 2)] {
            let ones = TrigInterpolant::from_fn(dim, n, |_| Complex64::new(1.0, 0.0)).unwrap();
            for _ in 0..10 {
                let x = random_torus_point(&mut rng, dim);
                let got = ones.eval(&x).unwrap();
                assert!(
                    (got - 1.0).norm() < 1e-10,
                    "partition of unity at {x}: {got}"
                );
            }
        }
    }

    #[test]
    fn sym_trig_interpolant_follows_the_boundary_aliasing_rule() {
        // At every closed-box node the interpolant returns the sum of the
        // samples over the node's congruence class mod 2n Z^d: interior
        // samples verbatim, boundary samples summed over identified copies.
        let mut rng = ChaCha8Rng::seed_from_u64(151);
        for (dim, n) in [(2usize, 3i64), (3, 2)] {
            let indices = generate_index_set(IndexSetKind::SpatialClosed, dim, n).unwrap();
            let samples: BTreeMap<IndexVector, f64> = indices
                .iter()
                .map(|k| (*k, rng.random_range(-1.0..1.0)))
                .collect();
            let interp = SymTrigInterpolant::new(dim, n, &samples).unwrap();
            let lattice = CongruenceLattice::ScaledIdentity { dim, scale: 2 * n };
            for j in &indices {
                let class = congruence_class(j, &indices, &lattice).unwrap();
                assert_eq!(
                    class.len() as u32,
                    classify_spatial(dim, n, j).unwrap().multiplicity,
                    "class size at {j}"
                );
                let expect: f64 = class.iter().map(|k| samples[k]).sum();
                let got = interp.eval(&node_point(dim, n, j)).unwrap();
                assert!(
                    (got - expect).abs() < 1e-9,
                    "aliasing rule at {j} (dim {dim}): {got} vs {expect}"
                );
            }
        }
    }

    #[test]
    fn fundamental_poly_is_delta_on_octant_nodes() {
        let cfg = KernelEvalConfig::default();
        for (dim, n_list) in [(2usize, vec![2i64, 3, 4]), (3, vec![2, 3])] {
            for n in n_list {
                let octant = generate_index_set(IndexSetKind::SpatialOctant, dim, n).unwrap();
                for k in &octant {
                    for j in &octant {
                        let coords: Vec<f64> = (0..dim)
                            .map(|i| cos_pi(j.get(i) as f64 / n as f64))
                            .collect();
                        let z = CubePoint::algebraic(&coords).unwrap();
                        let got = fundamental_poly(dim, n, k, &z, &cfg).unwrap();
                        let expect = if j == k { 1.0 } else { 0.0 };
                        assert!(
                            (got - expect).abs() < 1e-10,
                            "l_{k} at node {j} (dim {dim}, n = {n}): {got}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn fundamental_polys_sum_to_one() {
        let cfg = KernelEvalConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(113);
        for (dim, n) in [(2usize, 5i64), (3, 3)] {
            let octant = generate_index_set(IndexSetKind::SpatialOctant, dim, n).unwrap();
            for _ in 0..10 {
                let x = random_algebraic_point(&mut rng, dim);
                let total: f64 = octant
                    .iter()
                    .map(|k| fundamental_poly(dim, n, k, &x, &cfg).unwrap())
                    .sum();
                assert!(
                    (total - 1.0).abs() < 1e-9,
                    "partition of unity at {x} (dim {dim}): {total}"
                );
            }
        }
    }

    #[test]
    fn closed_form_2d_fundamental_poly_matches_kernel_route() {
        let cfg = KernelEvalConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(127);
        for n in [2i64, 3, 5] {
            let octant = generate_index_set(IndexSetKind::SpatialOctant, 2, n).unwrap();
            for k in &octant {
                for _ in 0..5 {
                    let x = random_algebraic_point(&mut rng, 2);
                    let generic = fundamental_poly(2, n, k, &x, &cfg).unwrap();
                    let closed = fundamental_poly_closed_2d(n, k, &x, &cfg).unwrap();
                    assert!(
                        (generic - closed).abs() < 1e-10,
                        "closed form at k = {k}, x = {x}, n = {n}: {closed} vs {generic}"
                    );
                }
            }
        }
    }

    #[test]
    fn algebraic_interpolant_validates_sample_keys() {
        let n = 3i64;
        let octant = generate_index_set(IndexSetKind::SpatialOctant, 2, n).unwrap();
        let good: BTreeMap<IndexVector, f64> = octant.iter().map(|k| (*k, 1.0)).collect();
        assert!(AlgebraicInterpolant::new(2, n, &good).is_ok());

        let mut missing = good.clone();
        let dropped = *octant.last().unwrap();
        missing.remove(&dropped);
        let err = AlgebraicInterpolant::new(2, n, &missing).unwrap_err();
        assert!(
            err.to_string().contains(&dropped.to_string()),
            "missing-key error should name {dropped}: {err}"
        );

        let mut extra = good.clone();
        let bogus = IndexVector::new2(7, 7);
        extra.insert(bogus, 0.0);
        let err = AlgebraicInterpolant::new(2, n, &extra).unwrap_err();
        assert!(
            err.to_string().contains(&bogus.to_string()),
            "extra-key error should name {bogus}: {err}"
        );
    }

    #[test]
    fn algebraic_interpolant_reproduces_low_degree_products() {
        // Chebyshev products whose aliasing class is trivial are reproduced
        // verbatim; total degree < n suffices for 2D.
        let mut rng = ChaCha8Rng::seed_from_u64(131);
        let n = 5i64;
        for (a, b) in [(0u32, 0u32), (1, 2), (2, 2), (0, 4), (3, 1)] {
            let f = |t: &[f64]| {
                chebyshev_eval(ChebyshevKind::First, a, t[0]).unwrap()
                    * chebyshev_eval(ChebyshevKind::First, b, t[1]).unwrap()
            };
            let interp = AlgebraicInterpolant::from_fn(2, n, f).unwrap();
            for _ in 0..8 {
                let x = random_algebraic_point(&mut rng, 2);
                let got = interp.eval(&x).unwrap();
                let expect = f(&[x.get(0), x.get(1)]);
                assert!(
                    (got - expect).abs() < 1e-9,
                    "degree ({a}, {b}) at {x}: {got} vs {expect}"
                );
            }
        }
    }

    #[test]
    fn reproducing_basis_has_one_function_per_node() {
        for (dim, n_list) in [
            (2usize, vec![1i64, 2, 3, 4, 5, 6, 7, 8]),
            (3, vec![1, 2, 3, 4, 5]),
        ] {
            for n in n_list {
                let basis = reproducing_basis(dim, n).unwrap();
                let octant = expected_cardinality(IndexSetKind::SpatialOctant, dim, n)
                    .unwrap()
                    .unwrap();
                assert_eq!(
                    basis.len() as i64,
                    octant,
                    "orbit count at dim {dim}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn algebraic_interpolant_reproduces_basis_combinations() {
        let mut rng = ChaCha8Rng::seed_from_u64(137);
        for (dim, n) in [(2usize, 4i64), (3, 3)] {
            let basis = reproducing_basis(dim, n).unwrap();
            let coefs: Vec<f64> = (0..basis.len())
                .map(|_| rng.random_range(-1.0..1.0))
                .collect();
            let g = |x: &CubePoint| -> f64 {
                basis
                    .iter()
                    .zip(&coefs)
                    .map(|(b, c)| c * b.eval(x).unwrap())
                    .sum()
            };
            let interp =
                AlgebraicInterpolant::from_fn(dim, n, |t| g(&CubePoint::algebraic(t).unwrap()))
                    .unwrap();
            for _ in 0..15 {
                let x = random_algebraic_point(&mut rng, dim);
                let got = interp.eval(&x).unwrap();
                let expect = g(&x);
                assert!(
                    (got - expect).abs() < 1e-9 * expect.abs().max(1.0),
                    "reproduction at {x} (dim {dim}): {got} vs {expect}"
                );
            }
        }
    }

    #[test]
    fn octant_mode_weights_tile_the_node_count() {
        // Unfolding the octant weights over sign flips recovers one unit per
        // residue class: sum_m w_m 2^{#nonzero} = 2 n^d.
        for (dim, n_list) in [(2usize, vec![1i64, 3, 6]), (3, vec![1, 2, 4])] {
            for n in n_list {
                let weights = octant_mode_weights(dim, n).unwrap();
                let total: f64 = weights
                    .iter()
                    .map(|(m, w)| {
                        let nz = m.coords().iter().filter(|&&c| c != 0).count() as u32;
                        w * (1u64 << nz) as f64
                    })
                    .sum();
                let expect = (2 * n.pow(dim as u32)) as f64;
                assert!(
                    (total - expect).abs() < 1e-9,
                    "weight tiling at dim {dim}, n = {n}: {total} vs {expect}"
                );
            }
        }
    }

    #[test]
    fn coefficient_form_matches_fundamental_poly() {
        // The octant-mode expansion of l_k agrees with the kernel-translate
        // route at random points.
        let cfg = KernelEvalConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(149);
        for (dim, n) in [(2usize, 4i64), (3, 3)] {
            let weights = octant_mode_weights(dim, n).unwrap();
            let octant = generate_index_set(IndexSetKind::SpatialOctant, dim, n).unwrap();
            for k in octant.iter().step_by(2) {
                let lambda = fold_weight(dim, n, k).unwrap().to_f64().unwrap();
                for _ in 0..5 {
                    let u = random_torus_point(&mut rng, dim);
                    let mut series = 0.0;
                    for (m, w) in &weights {
                        let mut prod = *w;
                        for i in 0..dim {
                            if m.get(i) > 0 {
                                prod *= 2.0
                                    * cos_pi(2.0 * m.get(i) as f64 * u.get(i))
                                    * cos_pi((m.get(i) * k.get(i)) as f64 / n as f64);
                            }
                        }
                        series += prod;
                    }
                    series *= lambda / (2 * n.pow(dim as u32)) as f64;
                    let direct = fundamental_poly(dim, n, k, &u, &cfg).unwrap();
                    assert!(
                        (series - direct).abs() < 1e-10,
                        "coefficient form at k = {k}, u = {u} (dim {dim}): {series} vs {direct}"
                    );
                }
            }
        }
    }

    #[test]
    fn basis_function_charts_agree() {
        // cos(2 pi m u) = T_m(cos 2 pi u): both chart evaluations of a basis
        // function agree through the cosine map.
        let mut rng = ChaCha8Rng::seed_from_u64(139);
        for (dim, n) in [(2usize, 4i64), (3, 3)] {
            let basis = reproducing_basis(dim, n).unwrap();
            for b in basis.iter().step_by(3) {
                for _ in 0..5 {
                    let u = random_torus_point(&mut rng, dim);
                    let t: Vec<f64> = (0..dim).map(|i| cos_pi(2.0 * u.get(i))).collect();
                    let on_torus = b.eval(&u).unwrap();
                    let on_cube = b.eval(&CubePoint::algebraic(&t).unwrap()).unwrap();
                    assert!(
                        (on_torus - on_cube).abs() < 1e-10,
                        "chart mismatch for orbit of {}: {on_torus} vs {on_cube}",
                        b.rep()
                    );
                }
            }
        }
    }
}
