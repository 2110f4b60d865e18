//! Self-contained small dense linear algebra and deterministic sampling.
//!
//! Everything downstream (Gram determinants, principal angles, frame
//! sampling) runs on matrices with at most a few dozen rows, so this
//! module trades peak performance for portability and bit-stable results:
//! plain-loop kernels, a counter-based PRNG that is a pure function of
//! `(seed, counter)`, and exact handling of bitwise-duplicated rows in the
//! elimination routines (a tuple with a repeated point must produce a
//! determinant of exactly zero, not merely a small one).

mod complex;
mod matrix;
mod rng;
mod svd;

pub use complex::Complex;
pub use matrix::{gram_det_sqrt, Matrix};
pub use rng::{sample_stiefel, sample_unit_vector, Rng};
pub use svd::{svd_small, SvdResult};
