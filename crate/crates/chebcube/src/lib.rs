//! Cubature rules and Lagrange interpolation on the square `[-1,1]^2` and the
//! cube `[-1,1]^3` for the product Chebyshev weight functions
//!
//! ```text
//! W0(t) = prod_i (1 - t_i^2)^{-1/2}        (first kind)
//! W1(t) = prod_i (1 - t_i^2)^{+1/2}        (second kind)
//! ```
//!
//! The rules come from a lattice tiling of the torus: a fixed integer generator
//! matrix `B` (a rotated-and-scaled square in 2D, a scaled face-centered cube
//! in 3D) tiles space into `det B = 2n^d` congruence classes, and averaging
//! exponentials over one period of the tiling produces trigonometric cubature
//! formulas that push forward, through the cosine map, to algebraic rules with
//! `O(n^d)` nodes exact for polynomials up to degree `2n - 1` (first kind) and
//! `2n - 5` (second kind).
//!
//! # Module map
//!
//! - [`lattice`]: integer index sets, boundary classification, congruence
//!   classes, and the two discrete orthogonality identities everything else
//!   rests on.
//! - [`transform`]: coordinate charts of the square/cube (torus vs algebraic),
//!   the index maps between node and frequency labels, homogeneous coordinates
//!   for the 3D kernels, and stable Chebyshev/trig primitives.
//! - [`cubature`]: the three rule families (equal-weight trigonometric,
//!   symmetrized trigonometric, first/second-kind algebraic) with exact
//!   rational weights and compensated summation.
//! - [`kernels`]: compact closed-form evaluators for the reproducing kernels
//!   (2D Dirichlet-type, 3D four-variable theta quotients) with configurable
//!   handling of removable singularities.
//! - [`interp`]: trigonometric and algebraic interpolation operators built on
//!   the kernels, including the fundamental Lagrange polynomials.
//! - [`lebesgue`]: grid scans estimating the operator norm (Lebesgue constant)
//!   of the algebraic interpolation operator.
//! - [`oracle`]: brute-force reference implementations (exact moments,
//!   tensor-product quadrature, literal kernel sums) used to validate the
//!   compact formulas; shares nothing with them except index-set generation.
//! - [`verify`]: named check suites (exactness, kernel agreement,
//!   interpolation identities) producing structured pass/fail records.
//! - [`cli`]: the `chebcube` command-line interface (`nodes`, `verify`,
//!   `interp`, `lebesgue`) with JSON/CSV emission and round-trip parsing.
//!
//! The `examples/` directory exercises every capability end to end; start with
//! `cargo run --example w0_cubature`.

pub mod cli;
pub mod cubature;
mod error;
pub mod interp;
pub mod kernels;
pub mod lattice;
pub mod lebesgue;
pub mod oracle;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
