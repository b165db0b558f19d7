//! The cubature rule families.
//!
//! All rules are normalized: trigonometric rules approximate the mean over
//! the torus, algebraic rules approximate `(1/pi^d) ∫ f(t) W(t) dt` over
//! `[-1,1]^d` with the product Chebyshev weight `W`.
//!
//! - **equal-weight trigonometric** (`n >= 2`): nodes `j / 2n` for `j` in the
//!   half-open parity box, unit weights, normalization `1/(2 n^d)`;
//! - **symmetrized trigonometric** (`n >= 2`): nodes over the closed parity
//!   box with reciprocal-class-size weights;
//! - **first kind** (`n >= 2`): algebraic image `cos(k pi / n)` of the octant
//!   fold, integer weights `2^{#{0 < k_i < n}}`, exact for polynomial degree
//!   `2n - 1`;
//! - **second kind** (`n >= 3`): interior octant nodes with
//!   `prod sin^2(k_i pi / n)` weights, exact for degree `2n - 5`.

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lattice::{classify_spatial, generate_index_set, IndexSetKind, IndexVector};
use crate::transform::{cos_pi, sin_pi, Chart};

/// Weight function / rule family identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightKind {
    /// Equal-weight trigonometric rule on the torus.
    EqualWeightTrig,
    /// Symmetrized trigonometric rule (closed node box, boundary weights).
    SymmetricTrig,
    /// First-kind algebraic rule: weight `prod (1 - t_i^2)^{-1/2}`.
    ChebyshevFirst,
    /// Second-kind algebraic rule: weight `prod (1 - t_i^2)^{+1/2}`.
    ChebyshevSecond,
}

impl WeightKind {
    /// Stable token used in documents and on the command line.
    pub fn token(&self) -> &'static str {
        match self {
            WeightKind::EqualWeightTrig => "trig-equal",
            WeightKind::SymmetricTrig => "trig-sym",
            WeightKind::ChebyshevFirst => "w0",
            WeightKind::ChebyshevSecond => "w1",
        }
    }

    /// Parses a token produced by [`WeightKind::token`].
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "trig-equal" => Ok(WeightKind::EqualWeightTrig),
            "trig-sym" => Ok(WeightKind::SymmetricTrig),
            "w0" => Ok(WeightKind::ChebyshevFirst),
            "w1" => Ok(WeightKind::ChebyshevSecond),
            other => Err(Error::InvalidArgument(format!(
                "unknown rule kind '{other}' (expected trig-equal, trig-sym, w0, w1)"
            ))),
        }
    }
}

impl std::fmt::Display for WeightKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// How multi-degrees are limited in an exactness statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeCombination {
    /// `sum_i |j_i| <= degree`.
    TotalDegree,
    /// `|j_a| + |j_b| <= degree` for every coordinate pair; equivalent to
    /// `TotalDegree` in 2D, strictly larger in 3D.
    PairwiseSum,
}

/// Which basis an exactness statement refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExactnessBasis {
    /// Exponentials `e(j . x)` on the torus.
    Exponential,
    /// Products of first-kind Chebyshev polynomials.
    ChebyshevFirst,
    /// Products of second-kind Chebyshev polynomials.
    ChebyshevSecond,
}

/// The set of basis elements a rule integrates exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactnessClass {
    pub basis: ExactnessBasis,
    pub combination: DegreeCombination,
    pub degree: i64,
}

impl ExactnessClass {
    /// Does the multi-degree `j` (componentwise absolute values are taken)
    /// belong to the class?
    pub fn contains(&self, j: &IndexVector) -> bool {
        let a: Vec<i64> = j.coords().iter().map(|c| c.abs()).collect();
        match self.combination {
            DegreeCombination::TotalDegree => a.iter().sum::<i64>() <= self.degree,
            DegreeCombination::PairwiseSum => {
                (0..a.len()).all(|p| (p + 1..a.len()).all(|q| a[p] + a[q] <= self.degree))
            }
        }
    }

    /// Human-readable description for rule documents.
    pub fn describe(&self) -> String {
        let basis = match self.basis {
            ExactnessBasis::Exponential => "exponentials",
            ExactnessBasis::ChebyshevFirst => "first-kind Chebyshev products",
            ExactnessBasis::ChebyshevSecond => "second-kind Chebyshev products",
        };
        let comb = match self.combination {
            DegreeCombination::TotalDegree => "total degree",
            DegreeCombination::PairwiseSum => "pairwise degree sums",
        };
        format!("exact for {basis} with {comb} <= {}", self.degree)
    }
}

/// A fully materialized cubature rule.
#[derive(Clone, Debug)]
pub struct CubatureRule {
    dim: usize,
    n: i64,
    weight_kind: WeightKind,
    chart: Chart,
    indices: Vec<IndexVector>,
    nodes: Vec<[f64; 3]>,
    rational_weights: Option<Vec<Rational64>>,
    float_weights: Vec<f64>,
    normalization: Rational64,
    exactness: ExactnessClass,
}

impl CubatureRule {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn scale(&self) -> i64 {
        self.n
    }

    pub fn weight_kind(&self) -> WeightKind {
        self.weight_kind
    }

    /// Chart the node coordinates live in (torus for trig rules, algebraic
    /// for the Chebyshev rules).
    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// The integer labels of the nodes, in lexicographic order.
    pub fn indices(&self) -> &[IndexVector] {
        &self.indices
    }

    /// Coordinates of node `i`.
    pub fn node(&self, i: usize) -> &[f64] {
        &self.nodes[i][..self.dim]
    }

    /// Exact weights, when the family has them (trig and first kind).
    pub fn rational_weights(&self) -> Option<&[Rational64]> {
        self.rational_weights.as_deref()
    }

    /// Weights as floats (exact for the rational families).
    pub fn weights(&self) -> &[f64] {
        &self.float_weights
    }

    /// The normalization factor multiplying the weighted sum.
    pub fn normalization(&self) -> Rational64 {
        self.normalization
    }

    pub fn exactness(&self) -> ExactnessClass {
        self.exactness
    }

    /// Exact total mass `normalization * sum(weights)`; `None` for the
    /// second-kind rule (irrational weights).
    pub fn total_mass(&self) -> Option<Rational64> {
        self.rational_weights.as_ref().map(|ws| {
            let sum: Rational64 = ws.iter().sum();
            sum * self.normalization
        })
    }

    /// Applies the rule to `f` with compensated (Neumaier) accumulation.
    ///
    /// Errors if `f` returns a non-finite value, identifying the node.
    pub fn apply<F>(&self, f: F) -> Result<f64>
    where
        F: Fn(&[f64]) -> f64,
    {
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        for (i, node) in self.nodes.iter().enumerate() {
            let coords = &node[..self.dim];
            let value = f(coords);
            if !value.is_finite() {
                return Err(Error::NonFiniteSample {
                    node: i,
                    point: format!("{:?}", coords),
                    value,
                });
            }
            let term = self.float_weights[i] * value;
            let t = sum + term;
            if sum.abs() >= term.abs() {
                comp += (sum - t) + term;
            } else {
                comp += (term - t) + sum;
            }
            sum = t;
        }
        Ok((sum + comp) * ratio_to_f64(self.normalization))
    }

    /// Complex-valued variant of [`CubatureRule::apply`].
    pub fn apply_complex<F>(&self, f: F) -> Result<Complex64>
    where
        F: Fn(&[f64]) -> Complex64,
    {
        // Accumulate real and imaginary parts with the same compensation as
        // the real path.
        let mut sum_re = 0.0f64;
        let mut comp_re = 0.0f64;
        let mut sum_im = 0.0f64;
        let mut comp_im = 0.0f64;
        for (i, node) in self.nodes.iter().enumerate() {
            let coords = &node[..self.dim];
            let value = f(coords);
            if !value.re.is_finite() || !value.im.is_finite() {
                return Err(Error::NonFiniteSample {
                    node: i,
                    point: format!("{:?}", coords),
                    value: if value.re.is_finite() {
                        value.im
                    } else {
                        value.re
                    },
                });
            }
            let w = self.float_weights[i];
            for (acc, compacc, part) in [
                (&mut sum_re, &mut comp_re, value.re),
                (&mut sum_im, &mut comp_im, value.im),
            ] {
                let term = w * part;
                let t = *acc + term;
                if acc.abs() >= term.abs() {
                    *compacc += (*acc - t) + term;
                } else {
                    *compacc += (term - t) + *acc;
                }
                *acc = t;
            }
        }
        let norm = ratio_to_f64(self.normalization);
        Ok(Complex64::new(
            (sum_re + comp_re) * norm,
            (sum_im + comp_im) * norm,
        ))
    }
}

fn ratio_to_f64(r: Rational64) -> f64 {
    r.to_f64().expect("rational weights fit in f64")
}

/// Node layout of a trigonometric rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrigVariant {
    /// One node per congruence class, weight 1.
    EqualWeight,
    /// Closed box with reciprocal-class-size weights.
    Symmetric,
}

/// Builds a trigonometric rule on the torus: averages of `f` over the lattice
/// nodes `j / 2n`, exact for exponentials with frequencies inside the scaled
/// half-open frequency set (total degree `2n - 1` in 2D, pairwise sums in 3D).
pub fn trig_rule(dim: usize, n: i64, variant: TrigVariant) -> Result<CubatureRule> {
    if dim != 2 && dim != 3 {
        return Err(Error::UnsupportedDimension(dim));
    }
    if n < 2 {
        return Err(Error::ScaleOutOfRange {
            what: "trigonometric rule",
            n,
            min: 2,
        });
    }
    let (set_kind, weight_kind) = match variant {
        TrigVariant::EqualWeight => (IndexSetKind::SpatialHalfOpen, WeightKind::EqualWeightTrig),
        TrigVariant::Symmetric => (IndexSetKind::SpatialClosed, WeightKind::SymmetricTrig),
    };
    let indices = generate_index_set(set_kind, dim, n)?;
    let two_n = 2.0 * n as f64;
    let mut nodes = Vec::with_capacity(indices.len());
    let mut rational_weights = Vec::with_capacity(indices.len());
    for k in &indices {
        let mut node = [0.0f64; 3];
        for (slot, &c) in node.iter_mut().zip(k.coords()) {
            *slot = c as f64 / two_n;
        }
        nodes.push(node);
        let w = match variant {
            TrigVariant::EqualWeight => Rational64::from_integer(1),
            TrigVariant::Symmetric => classify_spatial(dim, n, k)?.weight(),
        };
        rational_weights.push(w);
    }
    let float_weights = rational_weights.iter().map(|w| ratio_to_f64(*w)).collect();
    let combination = if dim == 2 {
        DegreeCombination::TotalDegree
    } else {
        DegreeCombination::PairwiseSum
    };
    Ok(CubatureRule {
        dim,
        n,
        weight_kind,
        chart: Chart::Torus,
        indices,
        nodes,
        rational_weights: Some(rational_weights),
        float_weights,
        normalization: Rational64::new(1, 2 * n.pow(dim as u32)),
        exactness: ExactnessClass {
            basis: ExactnessBasis::Exponential,
            combination,
            degree: 2 * n - 1,
        },
    })
}

/// Builds the first-kind rule: nodes `cos(k pi / n)` over the octant fold,
/// weights `2^{#{0 < k_i < n}}` (the fold-sum of the boundary weights),
/// normalization `1/(2 n^d)`; exact for polynomial degree `2n - 1`.
pub fn w0_rule(dim: usize, n: i64) -> Result<CubatureRule> {
    if dim != 2 && dim != 3 {
        return Err(Error::UnsupportedDimension(dim));
    }
    if n < 2 {
        return Err(Error::ScaleOutOfRange {
            what: "first-kind rule",
            n,
            min: 2,
        });
    }
    let indices = generate_index_set(IndexSetKind::SpatialOctant, dim, n)?;
    let mut nodes = Vec::with_capacity(indices.len());
    let mut rational_weights = Vec::with_capacity(indices.len());
    for k in &indices {
        nodes.push(octant_node(dim, n, k));
        rational_weights.push(fold_weight(dim, n, k)?);
    }
    let float_weights = rational_weights.iter().map(|w| ratio_to_f64(*w)).collect();
    let combination = if dim == 2 {
        DegreeCombination::TotalDegree
    } else {
        DegreeCombination::PairwiseSum
    };
    Ok(CubatureRule {
        dim,
        n,
        weight_kind: WeightKind::ChebyshevFirst,
        chart: Chart::Algebraic,
        indices,
        nodes,
        rational_weights: Some(rational_weights),
        float_weights,
        normalization: Rational64::new(1, 2 * n.pow(dim as u32)),
        exactness: ExactnessClass {
            basis: ExactnessBasis::ChebyshevFirst,
            combination,
            degree: 2 * n - 1,
        },
    })
}

/// Builds the second-kind rule: interior octant nodes `cos(k pi / n)` with
/// weights `prod sin^2(k_i pi / n)`, normalization `2^{d-1} / n^d`; exact for
/// polynomial degree `2n - 5`.
pub fn w1_rule(dim: usize, n: i64) -> Result<CubatureRule> {
    if dim != 2 && dim != 3 {
        return Err(Error::UnsupportedDimension(dim));
    }
    if n < 3 {
        return Err(Error::ScaleOutOfRange {
            what: "second-kind rule",
            n,
            min: 3,
        });
    }
    let indices = generate_index_set(IndexSetKind::SpatialOctantInterior, dim, n)?;
    let mut nodes = Vec::with_capacity(indices.len());
    let mut float_weights = Vec::with_capacity(indices.len());
    for k in &indices {
        nodes.push(octant_node(dim, n, k));
        let w: f64 = k
            .coords()
            .iter()
            .map(|&c| sin_pi(c as f64 / n as f64).powi(2))
            .product();
        float_weights.push(w);
    }
    let combination = if dim == 2 {
        DegreeCombination::TotalDegree
    } else {
        DegreeCombination::PairwiseSum
    };
    Ok(CubatureRule {
        dim,
        n,
        weight_kind: WeightKind::ChebyshevSecond,
        chart: Chart::Algebraic,
        indices,
        nodes,
        rational_weights: None,
        float_weights,
        normalization: Rational64::new(1 << (dim - 1), n.pow(dim as u32)),
        exactness: ExactnessClass {
            basis: ExactnessBasis::ChebyshevSecond,
            combination,
            degree: 2 * n - 5,
        },
    })
}

/// Convenience dispatcher from a [`WeightKind`].
pub fn build_rule(dim: usize, n: i64, kind: WeightKind) -> Result<CubatureRule> {
    match kind {
        WeightKind::EqualWeightTrig => trig_rule(dim, n, TrigVariant::EqualWeight),
        WeightKind::SymmetricTrig => trig_rule(dim, n, TrigVariant::Symmetric),
        WeightKind::ChebyshevFirst => w0_rule(dim, n),
        WeightKind::ChebyshevSecond => w1_rule(dim, n),
    }
}

/// Algebraic node `(cos(k_1 pi / n), ...)`; exact at quarter periods.
fn octant_node(dim: usize, n: i64, k: &IndexVector) -> [f64; 3] {
    let mut node = [0.0f64; 3];
    for (slot, &c) in node.iter_mut().zip(k.coords()).take(dim) {
        *slot = cos_pi(c as f64 / n as f64);
    }
    node
}

/// First-kind weight as the literal fold-sum: the sum of the boundary weights
/// of every signed copy of `k` in the closed box.  Equals
/// `2^{#{0 < k_i < n}}`.  Also the scaling of the fundamental interpolation
/// polynomials in [`crate::interp`].
pub fn fold_weight(dim: usize, n: i64, k: &IndexVector) -> Result<Rational64> {
    let mut preimages = std::collections::BTreeSet::new();
    let sign_patterns = 1usize << dim;
    for bits in 0..sign_patterns {
        let mut coords = [0i64; 3];
        for (i, slot) in coords.iter_mut().enumerate().take(dim) {
            let sign = if bits & (1 << i) != 0 { -1 } else { 1 };
            *slot = sign * k.get(i);
        }
        preimages.insert(IndexVector::new(&coords[..dim])?);
    }
    let mut total = Rational64::new(0, 1);
    for j in &preimages {
        total += classify_spatial(dim, n, j)?.weight();
    }
    Ok(total)
}

/// The split form of the 2D first-kind rule: two interleaved rectangular
/// grids (even-even and odd-odd node labels) summed with trapezoidal-style
/// boundary halving.  Algebraically identical to `w0_rule(2, n).apply(f)`;
/// kept as an independent evaluation route.
pub fn w0_split_apply_2d<F>(n: i64, f: F) -> Result<f64>
where
    F: Fn(&[f64]) -> f64,
{
    if n < 2 {
        return Err(Error::ScaleOutOfRange {
            what: "first-kind rule",
            n,
            min: 2,
        });
    }
    let z = |k: i64| cos_pi(k as f64 / n as f64);
    let mut total = 0.0f64;
    if n % 2 == 0 {
        let m = n / 2;
        // Even-even grid with first/last halved per axis.
        let half_end = |i: i64| if i == 0 || i == m { 0.5 } else { 1.0 };
        for i in 0..=m {
            for j in 0..=m {
                total += half_end(i) * half_end(j) * f(&[z(2 * i), z(2 * j)]);
            }
        }
        // Odd-odd grid, all weights 1.
        for i in 0..m {
            for j in 0..m {
                total += f(&[z(2 * i + 1), z(2 * j + 1)]);
            }
        }
    } else {
        let m = (n - 1) / 2;
        // Two staggered grids; only the first term of each axis is halved.
        let half_first = |i: i64| if i == 0 { 0.5 } else { 1.0 };
        for i in 0..=m {
            for j in 0..=m {
                total += half_first(i) * half_first(j) * f(&[z(2 * i), z(2 * j)]);
                total += half_first(i) * half_first(j) * f(&[z(n - 2 * i), z(n - 2 * j)]);
            }
        }
    }
    Ok(total * 2.0 / (n * n) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{exact_moment, fold_count};
    use crate::transform::{chebyshev_eval, ChebyshevKind};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const TOL: f64 = 1e-12;

    #[test]
    fn preconditions_are_enforced() {
        assert!(matches!(
            trig_rule(2, 1, TrigVariant::EqualWeight),
            Err(Error::ScaleOutOfRange { min: 2, .. })
        ));
        assert!(matches!(
            w0_rule(3, 1),
            Err(Error::ScaleOutOfRange { min: 2, .. })
        ));
        assert!(matches!(
            w1_rule(2, 2),
            Err(Error::ScaleOutOfRange { min: 3, .. })
        ));
        assert!(matches!(w1_rule(4, 5), Err(Error::UnsupportedDimension(4))));
    }

    #[test]
    fn first_kind_rule_small_example() {
        let rule = w0_rule(2, 2).unwrap();
        assert_eq!(rule.node_count(), 5);
        let weights: Vec<i64> = rule
            .rational_weights()
            .unwrap()
            .iter()
            .map(|w| w.to_integer())
            .collect();
        // Indices in lex order: (0,0), (0,2), (1,1), (2,0), (2,2).
        assert_eq!(weights, vec![1, 1, 4, 1, 1]);
        assert_eq!(rule.normalization(), Rational64::new(1, 8));
        // Center node is exactly the origin.
        assert_eq!(rule.node(2), &[0.0, 0.0]);
        // f(t) = t1^2 integrates to 1/2 under the normalized first-kind weight.
        let val = rule.apply(|t| t[0] * t[0]).unwrap();
        assert!((val - 0.5).abs() < TOL);
    }

    #[test]
    fn second_kind_rule_small_example() {
        let rule = w1_rule(2, 3).unwrap();
        assert_eq!(rule.node_count(), 2);
        assert_eq!(rule.normalization(), Rational64::new(2, 9));
        // Nodes are (1/2, 1/2) and (-1/2, -1/2); weights (3/4)^2.
        assert!((rule.node(0)[0] - 0.5).abs() < TOL);
        assert!((rule.node(1)[0] + 0.5).abs() < TOL);
        for w in rule.weights() {
            assert!((w - 9.0 / 16.0).abs() < TOL);
        }
        // Unit function integrates to (1/2)^2.
        let val = rule.apply(|_| 1.0).unwrap();
        assert!((val - 0.25).abs() < TOL);
    }

    #[test]
    fn trig_rule_node_counts_and_mass() {
        let rule = trig_rule(2, 2, TrigVariant::EqualWeight).unwrap();
        assert_eq!(rule.node_count(), 8);
        assert_eq!(rule.normalization(), Rational64::new(1, 8));
        for dim in [2usize, 3] {
            for n in 2..=4i64 {
                for variant in [TrigVariant::EqualWeight, TrigVariant::Symmetric] {
                    let rule = trig_rule(dim, n, variant).unwrap();
                    assert_eq!(
                        rule.total_mass().unwrap(),
                        Rational64::from_integer(1),
                        "trig mass (dim {dim}, n {n}, {variant:?})"
                    );
                }
                let rule = w0_rule(dim, n).unwrap();
                assert_eq!(
                    rule.total_mass().unwrap(),
                    Rational64::from_integer(1),
                    "first-kind mass (dim {dim}, n {n})"
                );
            }
        }
    }

    #[test]
    fn second_kind_mass_is_two_to_minus_d() {
        for dim in [2usize, 3] {
            for n in 3..=8i64 {
                let rule = w1_rule(dim, n).unwrap();
                assert!(rule.total_mass().is_none());
                let mass = rule.apply(|_| 1.0).unwrap();
                let expect = (0.5f64).powi(dim as i32);
                assert!(
                    (mass - expect).abs() < 1e-13,
                    "second-kind mass (dim {dim}, n {n}): {mass}"
                );
            }
        }
    }

    #[test]
    fn first_kind_weights_match_the_fold_oracle() {
        for dim in [2usize, 3] {
            for n in 2..=5i64 {
                let rule = w0_rule(dim, n).unwrap();
                for (k, w) in rule.indices().iter().zip(rule.rational_weights().unwrap()) {
                    let oracle = fold_count(dim, n, k).unwrap();
                    assert_eq!(
                        *w,
                        Rational64::from_integer(oracle as i64),
                        "weight at {k} (dim {dim}, n {n})"
                    );
                    let interior = k.coords().iter().filter(|&&c| 0 < c && c < n).count() as u32;
                    assert_eq!(*w, Rational64::from_integer(1i64 << interior));
                }
            }
        }
    }

    #[test]
    fn split_form_matches_the_rule_for_even_and_odd_n() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for n in [2i64, 3, 4, 5, 8, 9] {
            let rule = w0_rule(2, n).unwrap();
            for trial in 0..5 {
                let (a, b, c) = (
                    rng.random_range(-1.0..1.0),
                    rng.random_range(-1.0..1.0),
                    rng.random_range(0.5..2.0),
                );
                let f = move |t: &[f64]| (a * t[0] + b * t[1]).cos() * (c + t[0] * t[1]);
                let direct = rule.apply(f).unwrap();
                let split = w0_split_apply_2d(n, f).unwrap();
                assert!(
                    (direct - split).abs() < 1e-13,
                    "split mismatch n = {n}, trial {trial}: {direct} vs {split}"
                );
            }
        }
    }

    #[test]
    fn exactness_class_membership() {
        let total = ExactnessClass {
            basis: ExactnessBasis::ChebyshevFirst,
            combination: DegreeCombination::TotalDegree,
            degree: 3,
        };
        assert!(total.contains(&IndexVector::new2(1, 2)));
        assert!(!total.contains(&IndexVector::new2(2, 2)));
        let pairwise = ExactnessClass {
            basis: ExactnessBasis::ChebyshevFirst,
            combination: DegreeCombination::PairwiseSum,
            degree: 3,
        };
        // (2, 1, 1): every pair sums to <= 3 even though the total is 4.
        assert!(pairwise.contains(&IndexVector::new3(2, 1, 1)));
        assert!(!pairwise.contains(&IndexVector::new3(2, 2, 0)));
    }

    #[test]
    fn first_kind_rule_integrates_low_degree_products_exactly() {
        // Spot check ahead of the full batteries: all first-kind products
        // inside the exactness class at a small scale.
        for dim in [2usize, 3] {
            let n = 3i64;
            let rule = w0_rule(dim, n).unwrap();
            let degrees: Vec<IndexVector> = if dim == 2 {
                let mut v = Vec::new();
                for a in 0..=(2 * n) {
                    for b in 0..=(2 * n) {
                        v.push(IndexVector::new2(a, b));
                    }
                }
                v
            } else {
                let mut v = Vec::new();
                for a in 0..=(2 * n) {
                    for b in 0..=(2 * n) {
                        for c in 0..=(2 * n) {
                            v.push(IndexVector::new3(a, b, c));
                        }
                    }
                }
                v
            };
            for j in degrees {
                if !rule.exactness().contains(&j) {
                    continue;
                }
                let approx = rule
                    .apply(|t| {
                        t.iter()
                            .zip(j.coords())
                            .map(|(&ti, &ji)| {
                                chebyshev_eval(ChebyshevKind::First, ji as u32, ti).unwrap()
                            })
                            .product()
                    })
                    .unwrap();
                let exact = exact_moment(WeightKind::ChebyshevFirst, &j).unwrap();
                let exact = *exact.numer() as f64 / *exact.denom() as f64;
                assert!(
                    (approx - exact).abs() < TOL,
                    "first-kind moment {j} (dim {dim}): {approx} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn trig_rules_reproduce_the_delta_on_frequencies() {
        use crate::lattice::{orthogonality_indicator, DiscreteOrthogonality};
        use num_complex::Complex64;
        // Averaging e(j . x) over either trig rule detects j = 0 within the
        // exactness class, and lattice membership outside it.
        for dim in [2usize, 3] {
            let n = 3i64;
            for variant in [TrigVariant::EqualWeight, TrigVariant::Symmetric] {
                let rule = trig_rule(dim, n, variant).unwrap();
                let probes: Vec<IndexVector> = if dim == 2 {
                    vec![
                        IndexVector::new2(0, 0),
                        IndexVector::new2(1, 2),
                        IndexVector::new2(2 * n - 1, 0),
                        IndexVector::new2(n, n),
                        IndexVector::new2(2 * n, 0),
                    ]
                } else {
                    vec![
                        IndexVector::new3(0, 0, 0),
                        IndexVector::new3(1, 2, 0),
                        IndexVector::new3(2 * n - 1, 0, 0),
                        IndexVector::new3(n, n, 0),
                        IndexVector::new3(0, 0, 2 * n),
                    ]
                };
                for j in probes {
                    let approx = rule
                        .apply_complex(|x| {
                            let dot: f64 = x
                                .iter()
                                .zip(j.coords())
                                .map(|(&xi, &ji)| xi * ji as f64)
                                .sum();
                            Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * dot)
                        })
                        .unwrap();
                    let expect =
                        orthogonality_indicator(dim, n, &j, DiscreteOrthogonality::GeneratorSide)
                            .unwrap() as f64;
                    assert!(
                        (approx.re - expect).abs() < TOL && approx.im.abs() < TOL,
                        "delta failure at {j} (dim {dim}, {variant:?}): {approx}"
                    );
                }
            }
        }
    }

    #[test]
    fn non_finite_samples_are_reported_with_the_node() {
        let rule = w0_rule(2, 2).unwrap();
        let err = rule
            .apply(|t| {
                if t[0] == 0.0 && t[1] == 0.0 {
                    f64::NAN
                } else {
                    1.0
                }
            })
            .unwrap_err();
        match err {
            Error::NonFiniteSample { node, .. } => assert_eq!(node, 2),
            other => panic!("expected NonFiniteSample, got {other}"),
        }
    }
}
