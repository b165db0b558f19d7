//! Enumerates the index families behind the rules and interpolants: the
//! half-open node lattice, its closed and octant-folded companions, and the
//! frequency sets on the other side of the discrete orthogonality relation.
//!
//! Run with: `cargo run --example index_sets`

use chebcube::lattice::{
    classify_spatial, congruence_class, expected_cardinality, generate_index_set,
    CongruenceLattice, GeneratorMatrix, IndexSetKind, IndexVector,
};
use chebcube::Result;

fn main() -> Result<()> {
    let n = 4;

    println!("index-set cardinalities at n = {n} (enumerated = closed form)\n");
    let kinds = [
        IndexSetKind::SpatialHalfOpen,
        IndexSetKind::SpatialClosed,
        IndexSetKind::SpatialOctant,
        IndexSetKind::FrequencyHalfOpen,
        IndexSetKind::FrequencyClosed,
        IndexSetKind::FrequencyPairwiseClosed,
    ];
    for dim in [2usize, 3] {
        println!("dimension {dim}:");
        for kind in kinds {
            if kind == IndexSetKind::FrequencyPairwiseClosed && dim == 2 {
                continue;
            }
            let set = generate_index_set(kind, dim, n)?;
            match expected_cardinality(kind, dim, n)? {
                Some(want) => {
                    assert_eq!(set.len() as i64, want);
                    println!("  {:<28} {:>5} = {want}", kind.name(), set.len());
                }
                None => println!("  {:<28} {:>5} (no closed form)", kind.name(), set.len()),
            }
        }
        println!();
    }

    // The node lattice is generated by an integer matrix whose determinant
    // counts the nodes per period cell.
    let b = GeneratorMatrix::new(2, n)?;
    println!("2-d generator matrix (rows), det = {}:", b.det());
    for row in 0..2 {
        println!("  [{:>3} {:>3}]", b.entry(row, 0), b.entry(row, 1));
    }
    let q = IndexVector::new2(1, 0);
    println!("  B * (1, 0) = {}\n", b.mul_vec(&q)?);

    // Octant folding: each closed-cube node maps to an octant representative
    // with a multiplicity that becomes the averaging weight.
    println!("boundary classification of closed nodes at n = {n} (dim 2):");
    for k in [
        IndexVector::new2(1, 1),
        IndexVector::new2(n, 2),
        IndexVector::new2(n, -n),
    ] {
        let class = classify_spatial(2, n, &k)?;
        println!(
            "  node {k}: multiplicity {} -> weight {}",
            class.multiplicity,
            class.weight()
        );
    }
    println!();

    // Congruence classes modulo 2n Z^d: the closed cube contains aliased
    // copies of boundary indices (the interpolation aliasing rule).
    let closed = generate_index_set(IndexSetKind::SpatialClosed, 2, n)?;
    let lattice = CongruenceLattice::ScaledIdentity {
        dim: 2,
        scale: 2 * n,
    };
    let k = IndexVector::new2(n, 0);
    let class = congruence_class(&k, &closed, &lattice)?;
    println!("closed-cube indices congruent to {k} mod {}:", 2 * n);
    for member in &class {
        println!("  {member}");
    }
    Ok(())
}
