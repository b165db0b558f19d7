//! Integer index sets, boundary classification, and congruence classes.
//!
//! Everything in this crate is driven by one fixed generator matrix per
//! dimension, scaled by the rule order `n >= 1`:
//!
//! ```text
//! d = 2:  B = n * ( 1  1 )        d = 3:  B = n * ( 0 1 1 )
//!                 (-1  1 )                        ( 1 0 1 )
//!                                                 ( 1 1 0 )
//! ```
//!
//! `B` has determinant `2 n^d` and tiles `Z^d` into that many congruence
//! classes.  The index sets generated here are fundamental domains (or closed
//! variants) for `B Z^d`, `B^T Z^d`, and `2n Z^d`, and they label the nodes,
//! weights, and frequencies of every rule in the crate.
//!
//! In 2D the column lattices of `B` and `B^T` coincide (`B^T = B U` for a
//! unimodular rotation `U`), and in 3D `B` is symmetric, so a single
//! membership test serves both congruence relations.

use num_complex::Complex64;
use num_rational::Rational64;

use crate::error::{Error, Result};

/// An integer lattice point in dimension 2 or 3.
///
/// Ordering is lexicographic on the coordinates, which gives every generated
/// index set a stable, reproducible order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexVector {
    coords: [i64; 3],
    dim: u8,
}

impl IndexVector {
    /// Builds an index vector from a slice of length 2 or 3.
    pub fn new(coords: &[i64]) -> Result<Self> {
        match coords.len() {
            2 => Ok(Self::new2(coords[0], coords[1])),
            3 => Ok(Self::new3(coords[0], coords[1], coords[2])),
            d => Err(Error::UnsupportedDimension(d)),
        }
    }

    /// Two-dimensional index vector.
    pub fn new2(a: i64, b: i64) -> Self {
        IndexVector {
            coords: [a, b, 0],
            dim: 2,
        }
    }

    /// Three-dimensional index vector.
    pub fn new3(a: i64, b: i64, c: i64) -> Self {
        IndexVector {
            coords: [a, b, c],
            dim: 3,
        }
    }

    /// Dimension (2 or 3).
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    /// Coordinates as a slice of length `dim`.
    pub fn coords(&self) -> &[i64] {
        &self.coords[..self.dim as usize]
    }

    /// Single coordinate (panics if `i >= dim`).
    pub fn get(&self, i: usize) -> i64 {
        self.coords()[i]
    }

    /// Applies `f` to every coordinate.
    pub fn map(&self, f: impl Fn(i64) -> i64) -> Self {
        let mut out = *self;
        for c in out.coords.iter_mut().take(self.dim as usize) {
            *c = f(*c);
        }
        out
    }

    /// Coordinate-wise difference (panics on dimension mismatch).
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = *self;
        for (c, o) in out
            .coords
            .iter_mut()
            .zip(other.coords.iter())
            .take(self.dim as usize)
        {
            *c -= *o;
        }
        out
    }

    /// Euclidean dot product (panics on dimension mismatch).
    pub fn dot(&self, other: &Self) -> i64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.coords()
            .iter()
            .zip(other.coords())
            .map(|(a, b)| a * b)
            .sum()
    }
}

impl std::fmt::Display for IndexVector {
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

impl std::fmt::Debug for IndexVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// The fixed tiling generator `B` for a given dimension and scale `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    dim: u8,
    n: i64,
}

impl GeneratorMatrix {
    /// Generator for dimension `dim` in {2, 3} and scale `n >= 1`.
    pub fn new(dim: usize, n: i64) -> Result<Self> {
        if dim != 2 && dim != 3 {
            return Err(Error::UnsupportedDimension(dim));
        }
        if n < 1 {
            return Err(Error::ScaleOutOfRange {
                what: "generator matrix",
                n,
                min: 1,
            });
        }
        Ok(GeneratorMatrix { dim: dim as u8, n })
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn scale(&self) -> i64 {
        self.n
    }

    /// Matrix entry `B[row][col]`.
    pub fn entry(&self, row: usize, col: usize) -> i64 {
        let n = self.n;
        match self.dim {
            2 => [[n, n], [-n, n]][row][col],
            _ => [[0, n, n], [n, 0, n], [n, n, 0]][row][col],
        }
    }

    /// Determinant, always `2 n^dim`.
    pub fn det(&self) -> i64 {
        2 * self.n.pow(self.dim as u32)
    }

    /// Matrix-vector product `B q`.
    pub fn mul_vec(&self, q: &IndexVector) -> Result<IndexVector> {
        self.check_dim(q)?;
        let d = self.dim as usize;
        let mut out = [0i64; 3];
        for (row, o) in out.iter_mut().enumerate().take(d) {
            *o = (0..d).map(|col| self.entry(row, col) * q.get(col)).sum();
        }
        IndexVector::new(&out[..d])
    }

    /// Matrix-vector product `B^T q`.
    pub fn transpose_mul_vec(&self, q: &IndexVector) -> Result<IndexVector> {
        self.check_dim(q)?;
        let d = self.dim as usize;
        let mut out = [0i64; 3];
        for (row, o) in out.iter_mut().enumerate().take(d) {
            *o = (0..d).map(|col| self.entry(col, row) * q.get(col)).sum();
        }
        IndexVector::new(&out[..d])
    }

    /// Exact rational image `B^{-T} k` (used for frequency phases `k^T B^{-T} j`).
    pub fn inv_transpose_apply(&self, k: &IndexVector) -> Result<Vec<Rational64>> {
        self.check_dim(k)?;
        let two_n = 2 * self.n;
        // 2n * B^{-T} is an integer matrix: the adjugate-over-half-determinant.
        let m = self.scaled_inv_transpose();
        let d = self.dim as usize;
        Ok((0..d)
            .map(|row| {
                let num: i64 = (0..d).map(|col| m[row][col] * k.get(col)).sum();
                Rational64::new(num, two_n)
            })
            .collect())
    }

    /// The integer matrix `2n * B^{-T}`.
    fn scaled_inv_transpose(&self) -> [[i64; 3]; 3] {
        match self.dim {
            // B^{-1} = (1/2n) [[1,-1],[1,1]], so B^{-T} = (1/2n) [[1,1],[-1,1]].
            2 => [[1, 1, 0], [-1, 1, 0], [0, 0, 0]],
            // B is symmetric; B^{-1} = (1/2n) [[-1,1,1],[1,-1,1],[1,1,-1]].
            _ => [[-1, 1, 1], [1, -1, 1], [1, 1, -1]],
        }
    }

    /// Does `v` belong to the column lattice `B Z^d`?
    ///
    /// For both fixed generators this coincides with membership in `B^T Z^d`:
    /// in 2D the two lattices are equal (`B^T = B * rotation`), in 3D `B` is
    /// symmetric.
    pub fn contains(&self, v: &IndexVector) -> Result<bool> {
        self.check_dim(v)?;
        let two_n = 2 * self.n;
        let m = self.scaled_inv_transpose();
        let d = self.dim as usize;
        // v in B Z^d  <=>  B^{-1} v integral; by the lattice identities above
        // the transpose inverse tests the same lattice.
        Ok((0..d).all(|row| {
            let num: i64 = (0..d).map(|col| m[row][col] * v.get(col)).sum();
            num % two_n == 0
        }))
    }

    fn check_dim(&self, v: &IndexVector) -> Result<()> {
        if v.dim() != self.dim as usize {
            return Err(Error::UnsupportedDimension(v.dim()));
        }
        Ok(())
    }
}

/// The finite index sets used by the rules.
///
/// "Spatial" sets label cubature nodes (points `k / 2n` on the torus, or
/// `cos(k pi / n)` after the cosine map); "frequency" sets label exponential
/// modes.  Closed variants include the symmetrized boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexSetKind {
    /// Half-open same-parity box `[-n, n)^d`: nodes of the equal-weight
    /// trigonometric rule, one representative per class mod `2n Z^d`.
    SpatialHalfOpen,
    /// Closed same-parity box `[-n, n]^d`: nodes of the symmetrized
    /// trigonometric rule (boundary points repeat modulo `2n Z^d`).
    SpatialClosed,
    /// Octant fold `0 <= k_i <= n` of the closed box: labels of the distinct
    /// algebraic nodes `(cos(k_1 pi / n), ..., cos(k_d pi / n))`.
    SpatialOctant,
    /// Interior `0 < k_i < n` of the octant: nodes of the second-kind rule.
    SpatialOctantInterior,
    /// Half-open frequency fundamental domain `Z^d ∩ B^T [-1/2,1/2)^d`,
    /// one representative per class mod `B^T Z^d`.
    FrequencyHalfOpen,
    /// Half-open frequency fundamental domain `Z^d ∩ B [-1/2,1/2)^d`, one
    /// representative per class mod `B Z^d`; the trigonometric interpolation
    /// modes.  In 3D this equals `FrequencyHalfOpen` (`B` is symmetric); in 2D
    /// the two boxes differ only in boundary orientation.
    FrequencyHalfOpenDual,
    /// Closed frequency set mapped bijectively onto `SpatialClosed` by the
    /// index map: in 2D the diamond `|j_1| + |j_2| <= n`, in 3D the preimage
    /// of the closed parity box.  Modes of the symmetrized 2D kernel.
    FrequencyClosed,
    /// Pairwise-closed 3D frequency set `|k_nu ± k_mu| <= n` for all pairs:
    /// modes of the symmetrized 3D kernel.  Defined only for `dim = 3`.
    FrequencyPairwiseClosed,
}

impl IndexSetKind {
    /// Human-readable name used in error messages and reports.
    pub fn name(&self) -> &'static str {
        match self {
            IndexSetKind::SpatialHalfOpen => "spatial half-open box",
            IndexSetKind::SpatialClosed => "spatial closed box",
            IndexSetKind::SpatialOctant => "spatial octant",
            IndexSetKind::SpatialOctantInterior => "spatial octant interior",
            IndexSetKind::FrequencyHalfOpen => "frequency fundamental domain",
            IndexSetKind::FrequencyHalfOpenDual => "dual frequency fundamental domain",
            IndexSetKind::FrequencyClosed => "closed frequency set",
            IndexSetKind::FrequencyPairwiseClosed => "pairwise-closed frequency set",
        }
    }
}

/// The linear combinations `2n B^{-T} j` (2D) used by the index maps and the
/// half-open membership tests.
fn combo2(j: &IndexVector) -> [i64; 2] {
    [j.get(0) + j.get(1), j.get(1) - j.get(0)]
}

/// `2n B^{-1} j` in 2D (dual orientation).
fn combo2_dual(j: &IndexVector) -> [i64; 2] {
    [j.get(0) - j.get(1), j.get(0) + j.get(1)]
}

/// `2n B^{-1} j = 2n B^{-T} j` in 3D (`B` symmetric).
fn combo3(j: &IndexVector) -> [i64; 3] {
    let (a, b, c) = (j.get(0), j.get(1), j.get(2));
    [-a + b + c, a - b + c, a + b - c]
}

fn all_same_parity(v: &IndexVector) -> bool {
    let p = v.get(0).rem_euclid(2);
    v.coords().iter().all(|c| c.rem_euclid(2) == p)
}

/// Membership test for `kind` at scale `n` (caller guarantees matching dim).
fn set_contains(kind: IndexSetKind, n: i64, v: &IndexVector) -> bool {
    let in_half_open = |c: i64| -n <= c && c < n;
    let in_closed = |c: i64| -n <= c && c <= n;
    match kind {
        IndexSetKind::SpatialHalfOpen => {
            all_same_parity(v) && v.coords().iter().all(|&c| in_half_open(c))
        }
        IndexSetKind::SpatialClosed => {
            all_same_parity(v) && v.coords().iter().all(|&c| in_closed(c))
        }
        IndexSetKind::SpatialOctant => {
            all_same_parity(v) && v.coords().iter().all(|&c| 0 <= c && c <= n)
        }
        IndexSetKind::SpatialOctantInterior => {
            all_same_parity(v) && v.coords().iter().all(|&c| 0 < c && c < n)
        }
        IndexSetKind::FrequencyHalfOpen => match v.dim() {
            2 => combo2(v).iter().all(|&c| in_half_open(c)),
            _ => combo3(v).iter().all(|&c| in_half_open(c)),
        },
        IndexSetKind::FrequencyHalfOpenDual => match v.dim() {
            2 => combo2_dual(v).iter().all(|&c| in_half_open(c)),
            _ => combo3(v).iter().all(|&c| in_half_open(c)),
        },
        IndexSetKind::FrequencyClosed => match v.dim() {
            2 => v.get(0).abs() + v.get(1).abs() <= n,
            _ => combo3(v).iter().all(|&c| in_closed(c)),
        },
        IndexSetKind::FrequencyPairwiseClosed => {
            let c = v.coords();
            (0..3).all(|a| (a + 1..3).all(|b| (c[a] + c[b]).abs() <= n && (c[a] - c[b]).abs() <= n))
        }
    }
}

/// Generates the index set `kind` at scale `n` in dimension `dim`, in
/// lexicographic order.
pub fn generate_index_set(kind: IndexSetKind, dim: usize, n: i64) -> Result<Vec<IndexVector>> {
    if dim != 2 && dim != 3 {
        return Err(Error::UnsupportedDimension(dim));
    }
    if n < 1 {
        return Err(Error::ScaleOutOfRange {
            what: kind.name(),
            n,
            min: 1,
        });
    }
    if kind == IndexSetKind::FrequencyPairwiseClosed && dim != 3 {
        return Err(Error::InvalidArgument(format!(
            "{} is defined only in dimension 3",
            kind.name()
        )));
    }
    let mut out = Vec::new();
    // Every set is contained in the closed box [-n, n]^d; scanning it in
    // lexicographic order yields a sorted result without an explicit sort.
    if dim == 2 {
        for a in -n..=n {
            for b in -n..=n {
                let v = IndexVector::new2(a, b);
                if set_contains(kind, n, &v) {
                    out.push(v);
                }
            }
        }
    } else {
        for a in -n..=n {
            for b in -n..=n {
                for c in -n..=n {
                    let v = IndexVector::new3(a, b, c);
                    if set_contains(kind, n, &v) {
                        out.push(v);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Membership test without materializing the set.
pub fn index_set_contains(kind: IndexSetKind, dim: usize, n: i64, v: &IndexVector) -> Result<bool> {
    if dim != 2 && dim != 3 {
        return Err(Error::UnsupportedDimension(dim));
    }
    if n < 1 {
        return Err(Error::ScaleOutOfRange {
            what: kind.name(),
            n,
            min: 1,
        });
    }
    if kind == IndexSetKind::FrequencyPairwiseClosed && dim != 3 {
        return Err(Error::InvalidArgument(format!(
            "{} is defined only in dimension 3",
            kind.name()
        )));
    }
    if v.dim() != dim {
        return Err(Error::UnsupportedDimension(v.dim()));
    }
    Ok(set_contains(kind, n, v))
}

/// Closed-form cardinality, when one exists.
///
/// Returns `None` for the pairwise-closed 3D frequency set, whose cardinality
/// has no simple closed form (it is pinned by enumeration in the test suite).
pub fn expected_cardinality(kind: IndexSetKind, dim: usize, n: i64) -> Result<Option<i64>> {
    if dim != 2 && dim != 3 {
        return Err(Error::UnsupportedDimension(dim));
    }
    if n < 1 {
        return Err(Error::ScaleOutOfRange {
            what: kind.name(),
            n,
            min: 1,
        });
    }
    let count = match (kind, dim) {
        (IndexSetKind::SpatialHalfOpen, d) => Some(2 * n.pow(d as u32)),
        (IndexSetKind::FrequencyHalfOpen, d) | (IndexSetKind::FrequencyHalfOpenDual, d) => {
            Some(2 * n.pow(d as u32))
        }
        (IndexSetKind::SpatialClosed, 2) | (IndexSetKind::FrequencyClosed, 2) => {
            Some(2 * n * n + 2 * n + 1)
        }
        (IndexSetKind::SpatialClosed, 3) | (IndexSetKind::FrequencyClosed, 3) => {
            Some(n.pow(3) + (n + 1).pow(3))
        }
        (IndexSetKind::SpatialOctant, 2) => Some(n * (n + 1) / 2 + n / 2 + 1),
        (IndexSetKind::SpatialOctant, 3) => Some((n / 2 + 1).pow(3) + ((n - 1) / 2 + 1).pow(3)),
        (IndexSetKind::SpatialOctantInterior, 2) => Some((n - 1) * (n - 2) / 2 + n / 2),
        (IndexSetKind::SpatialOctantInterior, 3) => Some((n / 2).pow(3) + ((n - 1) / 2).pow(3)),
        (IndexSetKind::FrequencyPairwiseClosed, _) => None,
        _ => unreachable!("dimension already validated"),
    };
    Ok(count)
}

/// Codimension of the box face a boundary index sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryKind {
    /// No coordinate on the boundary (class size 1).
    Interior,
    /// Codimension 1 (one boundary constraint active).
    Face,
    /// Codimension 2.
    Edge,
    /// Codimension 3, or a frequency class identified across octants.
    Vertex,
}

/// Congruence-class data for a boundary index: how many set members are
/// identified with it, and hence the reciprocal weight it carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryClass {
    pub kind: BoundaryKind,
    pub multiplicity: u32,
}

impl BoundaryClass {
    /// The weight `1 / multiplicity` this index contributes to a symmetrized
    /// average.
    pub fn weight(&self) -> Rational64 {
        Rational64::new(1, self.multiplicity as i64)
    }
}

/// Classifies `k` within the closed spatial box `[-n, n]^d`: the class of `k`
/// modulo `2n Z^d` inside the box has size `2^b`, where `b` is the number of
/// coordinates with `|k_i| = n`.
pub fn classify_spatial(dim: usize, n: i64, k: &IndexVector) -> Result<BoundaryClass> {
    if !index_set_contains(IndexSetKind::SpatialClosed, dim, n, k)? {
        return Err(Error::OutsideIndexSet {
            index: k.to_string(),
            set: format!("{} at n = {n}", IndexSetKind::SpatialClosed.name()),
        });
    }
    let b = k.coords().iter().filter(|&&c| c.abs() == n).count() as u32;
    let kind = match (b, dim) {
        (0, _) => BoundaryKind::Interior,
        (1, _) => BoundaryKind::Face,
        (2, 2) => BoundaryKind::Vertex,
        (2, 3) => BoundaryKind::Edge,
        _ => BoundaryKind::Vertex,
    };
    Ok(BoundaryClass {
        kind,
        multiplicity: 1u32 << b,
    })
}

/// Classifies `k` within the pairwise-closed 3D frequency set: the class of
/// `k` modulo `B Z^3` inside the set has size 1, 2, 3, 4, or 6, and the
/// reciprocal is the weight `k` carries in the symmetrized 3D kernel.
pub fn classify_frequency(n: i64, k: &IndexVector) -> Result<BoundaryClass> {
    if !index_set_contains(IndexSetKind::FrequencyPairwiseClosed, 3, n, k)? {
        return Err(Error::OutsideIndexSet {
            index: k.to_string(),
            set: format!(
                "{} at n = {n}",
                IndexSetKind::FrequencyPairwiseClosed.name()
            ),
        });
    }
    let b = GeneratorMatrix::new(3, n)?;
    // Classes are tiny; every member of a class differs from k by B q with
    // q in [-3, 3]^3 (the set has diameter <= 2n per pairwise combination,
    // and |q_i| <= 3 already covers translates up to 6n per axis).
    let mut count = 0u32;
    for qa in -3..=3 {
        for qb in -3..=3 {
            for qc in -3..=3 {
                let t = b.mul_vec(&IndexVector::new3(qa, qb, qc))?;
                let cand = IndexVector::new3(
                    k.get(0) + t.get(0),
                    k.get(1) + t.get(1),
                    k.get(2) + t.get(2),
                );
                if set_contains(IndexSetKind::FrequencyPairwiseClosed, n, &cand) {
                    count += 1;
                }
            }
        }
    }
    let kind = match count {
        1 => BoundaryKind::Interior,
        2 => BoundaryKind::Face,
        3 => BoundaryKind::Edge,
        4 | 6 => BoundaryKind::Vertex,
        other => unreachable!("frequency class of size {other} is impossible"),
    };
    Ok(BoundaryClass {
        kind,
        multiplicity: count,
    })
}

/// A congruence relation between index vectors.
#[derive(Clone, Copy, Debug)]
pub enum CongruenceLattice {
    /// Differences in the column lattice `B Z^d` (equals `B^T Z^d` for the
    /// fixed generators).
    Generator(GeneratorMatrix),
    /// Differences in `scale * Z^d`.
    ScaledIdentity { dim: usize, scale: i64 },
}

impl CongruenceLattice {
    /// Does `v` belong to the lattice?
    pub fn contains(&self, v: &IndexVector) -> Result<bool> {
        match self {
            CongruenceLattice::Generator(b) => b.contains(v),
            CongruenceLattice::ScaledIdentity { dim, scale } => {
                if v.dim() != *dim {
                    return Err(Error::UnsupportedDimension(v.dim()));
                }
                Ok(v.coords().iter().all(|c| c % scale == 0))
            }
        }
    }
}

/// All members of `set` congruent to `k` modulo `lattice`, in lexicographic
/// order.  `k` itself must belong to `set`.
pub fn congruence_class(
    k: &IndexVector,
    set: &[IndexVector],
    lattice: &CongruenceLattice,
) -> Result<Vec<IndexVector>> {
    if !set.contains(k) {
        return Err(Error::OutsideIndexSet {
            index: k.to_string(),
            set: "the supplied index set".to_string(),
        });
    }
    let mut class = Vec::new();
    for member in set {
        if lattice.contains(&member.sub(k))? {
            class.push(*member);
        }
    }
    Ok(class)
}

/// Which of the two discrete orthogonality identities to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscreteOrthogonality {
    /// Averages characters over the frequency fundamental domain (mod `B^T`);
    /// detects membership of the argument in `B Z^d`.
    GeneratorSide,
    /// Averages conjugate characters over the dual fundamental domain
    /// (mod `B`); detects membership of the argument in `B^T Z^d`.
    TransposeSide,
}

/// Exact value of the orthogonality indicator: 1 if the character sum is the
/// full determinant, 0 otherwise.
pub fn orthogonality_indicator(
    dim: usize,
    n: i64,
    v: &IndexVector,
    which: DiscreteOrthogonality,
) -> Result<u8> {
    let b = GeneratorMatrix::new(dim, n)?;
    // Both membership tests coincide for the fixed generators (see
    // `GeneratorMatrix::contains`), but route through it per side for clarity.
    let inside = match which {
        DiscreteOrthogonality::GeneratorSide => b.contains(v)?,
        DiscreteOrthogonality::TransposeSide => b.contains(v)?,
    };
    Ok(u8::from(inside))
}

/// Literal normalized character sum; must round to the exact indicator.
///
/// `GeneratorSide` computes `(1/det B) * sum_{j in Lambda} e(+v^T B^{-T} j)`
/// over the frequency fundamental domain; `TransposeSide` computes
/// `(1/det B) * sum_{k in Lambda-dual} e(-k^T B^{-T} v)`.
pub fn orthogonality_sum(
    dim: usize,
    n: i64,
    v: &IndexVector,
    which: DiscreteOrthogonality,
) -> Result<Complex64> {
    let b = GeneratorMatrix::new(dim, n)?;
    b.check_dim(v)?;
    let (set_kind, sign) = match which {
        DiscreteOrthogonality::GeneratorSide => (IndexSetKind::FrequencyHalfOpen, 1.0),
        DiscreteOrthogonality::TransposeSide => (IndexSetKind::FrequencyHalfOpenDual, -1.0),
    };
    let set = generate_index_set(set_kind, dim, n)?;
    let two_n = 2 * n;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in &set {
        // v^T B^{-T} j = (v . (2n B^{-T} j)) / 2n, an exact rational phase.
        let combo = match dim {
            2 => {
                let c = combo2(j);
                IndexVector::new2(c[0], c[1])
            }
            _ => {
                let c = combo3(j);
                IndexVector::new3(c[0], c[1], c[2])
            }
        };
        let num = v.dot(&combo);
        let phase = sign * 2.0 * std::f64::consts::PI * (num as f64) / (two_n as f64);
        acc += Complex64::from_polar(1.0, phase);
    }
    Ok(acc / b.det() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    fn all_kinds() -> Vec<IndexSetKind> {
        vec![
            IndexSetKind::SpatialHalfOpen,
            IndexSetKind::SpatialClosed,
            IndexSetKind::SpatialOctant,
            IndexSetKind::SpatialOctantInterior,
            IndexSetKind::FrequencyHalfOpen,
            IndexSetKind::FrequencyHalfOpenDual,
            IndexSetKind::FrequencyClosed,
            IndexSetKind::FrequencyPairwiseClosed,
        ]
    }

    #[test]
    fn rejects_unsupported_dimensions_and_scales() {
        assert!(matches!(
            GeneratorMatrix::new(4, 3),
            Err(Error::UnsupportedDimension(4))
        ));
        assert!(matches!(
            GeneratorMatrix::new(2, 0),
            Err(Error::ScaleOutOfRange { .. })
        ));
        assert!(matches!(
            generate_index_set(IndexSetKind::SpatialHalfOpen, 1, 3),
            Err(Error::UnsupportedDimension(1))
        ));
        assert!(matches!(
            generate_index_set(IndexSetKind::FrequencyPairwiseClosed, 2, 3),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn generator_matrix_entries_and_determinant() {
        let b2 = GeneratorMatrix::new(2, 3).unwrap();
        assert_eq!(
            [
                [b2.entry(0, 0), b2.entry(0, 1)],
                [b2.entry(1, 0), b2.entry(1, 1)]
            ],
            [[3, 3], [-3, 3]]
        );
        assert_eq!(b2.det(), 18);
        let b3 = GeneratorMatrix::new(3, 2).unwrap();
        assert_eq!(b3.entry(0, 0), 0);
        assert_eq!(b3.entry(0, 1), 2);
        assert_eq!(b3.det(), 16);
    }

    #[test]
    fn column_lattice_membership_matches_explicit_solve() {
        // v in B Z^d iff v = B q for some integer q: compare `contains`
        // against brute-force search over a box of q.
        for dim in [2usize, 3] {
            for n in 1..=3i64 {
                let b = GeneratorMatrix::new(dim, n).unwrap();
                let bound = 3 * n;
                // |B^{-1} v| <= (3 * bound) / (2n) < 5 on the probe box.
                let qs = (-5i64..=5).collect::<Vec<_>>();
                let mut reachable = std::collections::BTreeSet::new();
                if dim == 2 {
                    for &qa in &qs {
                        for &qb in &qs {
                            reachable.insert(b.mul_vec(&IndexVector::new2(qa, qb)).unwrap());
                        }
                    }
                    for a in -bound..=bound {
                        for c in -bound..=bound {
                            let v = IndexVector::new2(a, c);
                            let expect = reachable.contains(&v);
                            assert_eq!(
                                b.contains(&v).unwrap(),
                                expect,
                                "membership mismatch at {v} (dim 2, n {n})"
                            );
                        }
                    }
                } else {
                    for &qa in &qs {
                        for &qb in &qs {
                            for &qc in &qs {
                                reachable
                                    .insert(b.mul_vec(&IndexVector::new3(qa, qb, qc)).unwrap());
                            }
                        }
                    }
                    for a in -bound..=bound {
                        for c in -bound..=bound {
                            for e in -bound..=bound {
                                let v = IndexVector::new3(a, c, e);
                                let expect = reachable.contains(&v);
                                assert_eq!(
                                    b.contains(&v).unwrap(),
                                    expect,
                                    "membership mismatch at {v} (dim 3, n {n})"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn transpose_lattice_equals_generator_lattice() {
        // The crate relies on B Z^d = B^T Z^d for the two fixed generators.
        for dim in [2usize, 3] {
            let n = 3;
            let b = GeneratorMatrix::new(dim, n).unwrap();
            let qs: Vec<i64> = (-2..=2).collect();
            if dim == 2 {
                for &qa in &qs {
                    for &qb in &qs {
                        let v = b.transpose_mul_vec(&IndexVector::new2(qa, qb)).unwrap();
                        assert!(b.contains(&v).unwrap(), "B^T q = {v} not in B Z^2");
                    }
                }
            } else {
                for &qa in &qs {
                    for &qb in &qs {
                        for &qc in &qs {
                            let v = b.transpose_mul_vec(&IndexVector::new3(qa, qb, qc)).unwrap();
                            assert!(b.contains(&v).unwrap(), "B^T q = {v} not in B Z^3");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inv_transpose_apply_inverts_transpose_mul() {
        for dim in [2usize, 3] {
            let b = GeneratorMatrix::new(dim, 4).unwrap();
            let q = if dim == 2 {
                IndexVector::new2(2, -1)
            } else {
                IndexVector::new3(2, -1, 3)
            };
            let v = b.transpose_mul_vec(&q).unwrap();
            let back = b.inv_transpose_apply(&v).unwrap();
            for (i, r) in back.iter().enumerate() {
                assert_eq!(*r, Rational64::from_integer(q.get(i)));
            }
        }
    }

    #[test]
    fn cardinalities_match_closed_forms() {
        for dim in [2usize, 3] {
            for n in 1..=8i64 {
                for kind in all_kinds() {
                    if kind == IndexSetKind::FrequencyPairwiseClosed && dim != 3 {
                        continue;
                    }
                    let set = generate_index_set(kind, dim, n).unwrap();
                    if let Some(expect) = expected_cardinality(kind, dim, n).unwrap() {
                        assert_eq!(
                            set.len() as i64,
                            expect,
                            "cardinality of {} (dim {dim}, n {n})",
                            kind.name()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pairwise_closed_frequency_counts_are_pinned() {
        // No closed form; regression-pinned by enumeration.
        let expect = [7usize, 33, 87, 185, 335, 553, 847, 1233];
        for (i, &count) in expect.iter().enumerate() {
            let n = (i + 1) as i64;
            let set = generate_index_set(IndexSetKind::FrequencyPairwiseClosed, 3, n).unwrap();
            assert_eq!(set.len(), count, "pairwise-closed count at n = {n}");
        }
    }

    #[test]
    fn generated_sets_are_sorted_and_deduplicated() {
        for dim in [2usize, 3] {
            for kind in all_kinds() {
                if kind == IndexSetKind::FrequencyPairwiseClosed && dim != 3 {
                    continue;
                }
                let set = generate_index_set(kind, dim, 5).unwrap();
                assert!(
                    set.windows(2).all(|w| w[0] < w[1]),
                    "{} not strictly sorted",
                    kind.name()
                );
            }
        }
    }

    #[test]
    fn small_sets_match_hand_enumeration() {
        let x1 = generate_index_set(IndexSetKind::SpatialHalfOpen, 2, 1).unwrap();
        assert_eq!(x1, vec![IndexVector::new2(-1, -1), IndexVector::new2(0, 0)]);
        let lambda1 = generate_index_set(IndexSetKind::FrequencyHalfOpen, 2, 1).unwrap();
        assert_eq!(
            lambda1,
            vec![IndexVector::new2(0, -1), IndexVector::new2(0, 0)]
        );
        let xi2 = generate_index_set(IndexSetKind::SpatialOctant, 2, 2).unwrap();
        assert_eq!(
            xi2,
            vec![
                IndexVector::new2(0, 0),
                IndexVector::new2(0, 2),
                IndexVector::new2(1, 1),
                IndexVector::new2(2, 0),
                IndexVector::new2(2, 2),
            ]
        );
        // Closed 3D frequency box at n = 1: origin, the centered vertex, and
        // nothing else beyond the six octahedron points and the long diagonal.
        let star1 = generate_index_set(IndexSetKind::FrequencyClosed, 3, 1).unwrap();
        assert_eq!(star1.len(), 9);
        assert!(star1.contains(&IndexVector::new3(0, 0, 0)));
        assert!(star1.contains(&IndexVector::new3(1, 1, 1)));
        assert!(star1.contains(&IndexVector::new3(-1, -1, -1)));
        assert!(star1.contains(&IndexVector::new3(1, 0, 0)));
        // Half-open 3D frequency domain at n = 1 has exactly det B = 2 points.
        let dag1 = generate_index_set(IndexSetKind::FrequencyHalfOpenDual, 3, 1).unwrap();
        assert_eq!(
            dag1,
            vec![IndexVector::new3(-1, -1, -1), IndexVector::new3(0, 0, 0)]
        );
    }

    #[test]
    fn frequency_half_open_sets_are_residue_systems() {
        // Every set with one representative per congruence class: all pairwise
        // differences outside the lattice, and cardinality = det B.
        for dim in [2usize, 3] {
            for n in 1..=3i64 {
                let b = GeneratorMatrix::new(dim, n).unwrap();
                for kind in [
                    IndexSetKind::FrequencyHalfOpen,
                    IndexSetKind::FrequencyHalfOpenDual,
                ] {
                    let set = generate_index_set(kind, dim, n).unwrap();
                    assert_eq!(set.len() as i64, b.det());
                    for (i, p) in set.iter().enumerate() {
                        for q in &set[i + 1..] {
                            assert!(
                                !b.contains(&q.sub(p)).unwrap(),
                                "{p} and {q} collide mod B in {}",
                                kind.name()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn spatial_half_open_is_residue_system_mod_scaled_identity() {
        for dim in [2usize, 3] {
            for n in 1..=3i64 {
                let set = generate_index_set(IndexSetKind::SpatialHalfOpen, dim, n).unwrap();
                let lat = CongruenceLattice::ScaledIdentity { dim, scale: 2 * n };
                for (i, p) in set.iter().enumerate() {
                    for q in &set[i + 1..] {
                        assert!(!lat.contains(&q.sub(p)).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn closed_frequency_set_is_bijective_preimage_of_closed_spatial_box() {
        // The index map j -> combos carries FrequencyClosed 1:1 onto
        // SpatialClosed (same-parity closed box).
        for dim in [2usize, 3] {
            for n in 1..=5i64 {
                let freq = generate_index_set(IndexSetKind::FrequencyClosed, dim, n).unwrap();
                let spat: std::collections::BTreeSet<_> =
                    generate_index_set(IndexSetKind::SpatialClosed, dim, n)
                        .unwrap()
                        .into_iter()
                        .collect();
                let mut images = std::collections::BTreeSet::new();
                for j in &freq {
                    let img = if dim == 2 {
                        let c = combo2(j);
                        IndexVector::new2(c[0], c[1])
                    } else {
                        let c = combo3(j);
                        IndexVector::new3(c[0], c[1], c[2])
                    };
                    assert!(spat.contains(&img), "image {img} of {j} escapes the box");
                    assert!(images.insert(img), "index map not injective at {j}");
                }
                assert_eq!(images.len(), spat.len(), "index map not onto");
            }
        }
    }

    #[test]
    fn spatial_classification_weights_match_class_sizes() {
        for dim in [2usize, 3] {
            for n in 1..=4i64 {
                let closed = generate_index_set(IndexSetKind::SpatialClosed, dim, n).unwrap();
                let lat = CongruenceLattice::ScaledIdentity { dim, scale: 2 * n };
                let mut weight_sum = Rational64::new(0, 1);
                for k in &closed {
                    let class = classify_spatial(dim, n, k).unwrap();
                    let members = congruence_class(k, &closed, &lat).unwrap();
                    assert_eq!(
                        class.multiplicity as usize,
                        members.len(),
                        "class size mismatch at {k} (dim {dim}, n {n})"
                    );
                    weight_sum += class.weight();
                }
                // One unit of weight per congruence class: 2 n^d classes.
                assert_eq!(
                    weight_sum,
                    Rational64::from_integer(2 * n.pow(dim as u32)),
                    "total spatial weight (dim {dim}, n {n})"
                );
            }
        }
    }

    #[test]
    fn spatial_classification_examples() {
        let c = classify_spatial(2, 2, &IndexVector::new2(0, 0)).unwrap();
        assert_eq!((c.kind, c.multiplicity), (BoundaryKind::Interior, 1));
        let c = classify_spatial(2, 2, &IndexVector::new2(2, 0)).unwrap();
        assert_eq!((c.kind, c.multiplicity), (BoundaryKind::Face, 2));
        let c = classify_spatial(2, 2, &IndexVector::new2(-2, 2)).unwrap();
        assert_eq!((c.kind, c.multiplicity), (BoundaryKind::Vertex, 4));
        let c = classify_spatial(3, 2, &IndexVector::new3(2, 0, -2)).unwrap();
        assert_eq!((c.kind, c.multiplicity), (BoundaryKind::Edge, 4));
        let c = classify_spatial(3, 2, &IndexVector::new3(2, -2, 2)).unwrap();
        assert_eq!((c.kind, c.multiplicity), (BoundaryKind::Vertex, 8));
        assert!(matches!(
            classify_spatial(2, 2, &IndexVector::new2(1, 0)),
            Err(Error::OutsideIndexSet { .. })
        ));
    }

    #[test]
    fn frequency_classification_weights_sum_to_det() {
        // The reciprocal class sizes over the pairwise-closed set must add up
        // to det B = 2 n^3: one unit per congruence class.
        for n in 1..=6i64 {
            let set = generate_index_set(IndexSetKind::FrequencyPairwiseClosed, 3, n).unwrap();
            let mut total = Rational64::new(0, 1);
            let mut seen_sizes = std::collections::BTreeSet::new();
            for k in &set {
                let class = classify_frequency(n, k).unwrap();
                seen_sizes.insert(class.multiplicity);
                total += class.weight();
            }
            assert_eq!(
                total,
                Rational64::from_integer(2 * n.pow(3)),
                "total frequency weight at n = {n}"
            );
            for size in &seen_sizes {
                assert!(
                    [1, 2, 3, 4, 6].contains(size),
                    "unexpected class size {size} at n = {n}"
                );
            }
            if n % 2 == 1 {
                assert!(
                    !seen_sizes.contains(&4),
                    "size-4 vertex classes require even n"
                );
            }
        }
    }

    #[test]
    fn frequency_classification_matches_congruence_class_sizes() {
        for n in 1..=4i64 {
            let set = generate_index_set(IndexSetKind::FrequencyPairwiseClosed, 3, n).unwrap();
            let lat = CongruenceLattice::Generator(GeneratorMatrix::new(3, n).unwrap());
            for k in &set {
                let by_translates = classify_frequency(n, k).unwrap().multiplicity as usize;
                let by_scan = congruence_class(k, &set, &lat).unwrap().len();
                assert_eq!(by_translates, by_scan, "class size disagrees at {k}, n {n}");
            }
        }
    }

    #[test]
    fn frequency_classification_examples() {
        // The six octahedron vertices form a single class already at n = 1.
        let c = classify_frequency(1, &IndexVector::new3(0, 0, 1)).unwrap();
        assert_eq!((c.kind, c.multiplicity), (BoundaryKind::Vertex, 6));
        // For even n the centered vertex class has size 4.
        let c = classify_frequency(2, &IndexVector::new3(1, 1, 1)).unwrap();
        assert_eq!((c.kind, c.multiplicity), (BoundaryKind::Vertex, 4));
        let c = classify_frequency(2, &IndexVector::new3(0, 0, 0)).unwrap();
        assert_eq!((c.kind, c.multiplicity), (BoundaryKind::Interior, 1));
        // Edge classes (size 3) first appear at n = 3.
        let set = generate_index_set(IndexSetKind::FrequencyPairwiseClosed, 3, 3).unwrap();
        let edges = set
            .iter()
            .filter(|k| classify_frequency(3, k).unwrap().multiplicity == 3)
            .count();
        assert_eq!(edges, 24, "24 edge points in 8 classes of size 3 at n = 3");
    }

    #[test]
    fn congruence_class_examples() {
        let closed = generate_index_set(IndexSetKind::SpatialClosed, 2, 2).unwrap();
        let lat = CongruenceLattice::ScaledIdentity { dim: 2, scale: 4 };
        let class = congruence_class(&IndexVector::new2(2, 0), &closed, &lat).unwrap();
        assert_eq!(
            class,
            vec![IndexVector::new2(-2, 0), IndexVector::new2(2, 0)]
        );
        let class = congruence_class(&IndexVector::new2(2, 2), &closed, &lat).unwrap();
        assert_eq!(class.len(), 4);
        let class = congruence_class(&IndexVector::new2(0, 0), &closed, &lat).unwrap();
        assert_eq!(class, vec![IndexVector::new2(0, 0)]);
        assert!(matches!(
            congruence_class(&IndexVector::new2(9, 9), &closed, &lat),
            Err(Error::OutsideIndexSet { .. })
        ));
    }

    #[test]
    fn orthogonality_indicator_matches_lattice_membership() {
        for dim in [2usize, 3] {
            for n in 1..=3i64 {
                let b = GeneratorMatrix::new(dim, n).unwrap();
                let r = 2 * n + 1;
                let probe = |v: IndexVector| {
                    let gen =
                        orthogonality_indicator(dim, n, &v, DiscreteOrthogonality::GeneratorSide)
                            .unwrap();
                    assert_eq!(gen == 1, b.contains(&v).unwrap());
                };
                if dim == 2 {
                    for a in -r..=r {
                        for c in -r..=r {
                            probe(IndexVector::new2(a, c));
                        }
                    }
                } else {
                    for a in -r..=r {
                        for c in -r..=r {
                            for e in -r..=r {
                                probe(IndexVector::new3(a, c, e));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn orthogonality_sums_round_to_exact_indicator() {
        for dim in [2usize, 3] {
            for n in 1..=3i64 {
                let r = 2 * n;
                let mut probes = Vec::new();
                if dim == 2 {
                    for a in -r..=r {
                        for c in -r..=r {
                            probes.push(IndexVector::new2(a, c));
                        }
                    }
                } else {
                    for a in -r..=r {
                        for c in -r..=r {
                            for e in -r..=r {
                                probes.push(IndexVector::new3(a, c, e));
                            }
                        }
                    }
                }
                for which in [
                    DiscreteOrthogonality::GeneratorSide,
                    DiscreteOrthogonality::TransposeSide,
                ] {
                    for v in &probes {
                        let exact = orthogonality_indicator(dim, n, v, which).unwrap() as f64;
                        let sum = orthogonality_sum(dim, n, v, which).unwrap();
                        assert!(
                            (sum.re - exact).abs() < TOL && sum.im.abs() < TOL,
                            "character sum {sum} != {exact} at v = {v} (dim {dim}, n {n}, {which:?})"
                        );
                    }
                }
            }
        }
    }
}
