//! Pseudo n-metrics: distances for tuples of `n >= 2` points.
//!
//! A pseudo n-metric `d : X^n -> R` vanishes on tuples with a repeated
//! entry, is invariant under permutations, and satisfies the simplicial
//! inequality `d(x_1..x_n) <= sum_i d(x_1..x_{i-1}, y, x_{i+1}..x_n)` for
//! every substitution point `y`. This crate implements the known
//! constructions, the equality families and the counterexamples, plus a
//! deterministic fuzz harness for checking the axioms numerically:
//!
//! * [`vandermonde`]: the Vandermonde n-metric on the complex plane, its
//!   componentwise and discrete L^p lifts, the product-of-norms failure in
//!   dimension 3, and the symmetric-tensor generalization that works.
//! * [`exterior`]: Gram-determinant volumes as pseudo n-norms, the
//!   determinant transformation rule, Hadamard margins, and the simplex
//!   pseudo n-metric.
//! * [`manifolds`]: pseudo n-metrics on the unit sphere, the Stiefel
//!   manifold and the Grassmannian; principal angles; polar sine.
//! * [`hypergraph`]: the minimum-connected-edge-cover pseudo n-metric on
//!   connected n-uniform hypergraphs, with an exact search.
//! * [`sets`]: the n-ary Hausdorff candidate on finite subsets and the
//!   exhaustively verified counterexample showing it fails for n >= 3.
//! * [`axioms`]: metric-agnostic axiom checkers and the seeded fuzzer.
//! * [`linalg`]: the small dense kernel (determinants, pivoted Gram
//!   factorization, Jacobi SVD) and the counter-based deterministic RNG
//!   everything runs on.
//!
//! The binary crate `nmetric-cli` exposes all of this for batch use.

// index loops mirror the matrix subscripts throughout the kernels
#![allow(clippy::needless_range_loop)]

pub mod axioms;
mod error;
pub mod exterior;
pub mod hypergraph;
pub mod linalg;
pub mod manifolds;
pub mod sets;
pub mod vandermonde;

pub use error::{Error, Result};

#[cfg(doctest)]
mod guide;
