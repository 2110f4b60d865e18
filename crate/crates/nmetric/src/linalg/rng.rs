use crate::error::{Error, Result};
use crate::linalg::Matrix;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finalizer: a bijective 64-bit mix with full avalanche.
#[inline]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Counter-based deterministic pseudo-random generator.
///
/// Output `i` of a stream is `mix(seed ^ mix((i+1) * GOLDEN))`: a pure
/// function of `(seed, i)`, so the stream is identical on every platform
/// and independent streams can be split off without sharing state. This is
/// what makes fuzz trials reproducible regardless of evaluation order.
#[derive(Debug, Clone)]
pub struct Rng {
    seed: u64,
    counter: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { seed, counter: 0 }
    }

    /// Derives an independent generator for substream `stream`.
    ///
    /// Splitting is deterministic in `(seed, stream)` and does not advance
    /// `self`, so trials may run in any order (or in parallel) and still
    /// see identical data.
    pub fn split(&self, stream: u64) -> Rng {
        Rng::new(mix(
            self.seed ^ mix(stream.wrapping_mul(GOLDEN) ^ 0x5851_F42D_4C95_7F2D)
        ))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix(self.seed ^ mix(self.counter.wrapping_mul(GOLDEN)))
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `[0, n)`, by rejection (unbiased).
    pub fn next_below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        let zone = u64::MAX - (u64::MAX % n);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % n;
            }
        }
    }

    /// Standard normal via Box-Muller on the uniform stream.
    pub fn next_normal(&mut self) -> f64 {
        // u1 in (0, 1] so the log is finite
        let u1 = 1.0 - self.next_f64();
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }

    /// Uniform random permutation of `{0, .., n-1}` (Fisher-Yates).
    pub fn next_permutation(&mut self, n: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            perm.swap(i, j);
        }
        perm
    }
}

/// Samples a uniformly distributed unit vector in `R^dim` by normalizing
/// a vector of independent standard normals.
pub fn sample_unit_vector(rng: &mut Rng, dim: usize) -> Vec<f64> {
    assert!(dim >= 1);
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.next_normal()).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-8 {
            return v.iter().map(|x| x / norm).collect();
        }
    }
}

/// Samples an `m x k` matrix with orthonormal columns (Haar-ish via
/// Gram-Schmidt of a Gaussian matrix, with one re-orthogonalization pass).
///
/// Rank deficiency of the Gaussian sample has probability zero; if it is
/// hit anyway the sample is retried, at most 8 times.
pub fn sample_stiefel(rng: &mut Rng, k: usize, m: usize) -> Result<Matrix> {
    if k > m {
        return Err(Error::usage(format!(
            "Stiefel frame needs k <= m, got k={k}, m={m}"
        )));
    }
    'attempt: for _ in 0..8 {
        let mut cols: Vec<Vec<f64>> = (0..k)
            .map(|_| (0..m).map(|_| rng.next_normal()).collect())
            .collect();
        for j in 0..k {
            // two Gram-Schmidt passes ("twice is enough")
            for _ in 0..2 {
                for p in 0..j {
                    let dot: f64 = (0..m).map(|i| cols[j][i] * cols[p][i]).sum();
                    for i in 0..m {
                        cols[j][i] -= dot * cols[p][i];
                    }
                }
            }
            let norm = cols[j].iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm < 1e-8 {
                continue 'attempt;
            }
            for i in 0..m {
                cols[j][i] /= norm;
            }
        }
        let mut a = Matrix::zeros(m, k);
        for (j, col) in cols.iter().enumerate() {
            for i in 0..m {
                a.set(i, j, col[i]);
            }
        }
        return Ok(a);
    }
    Err(Error::NumericalFailure(
        "could not draw a full-rank Gaussian matrix in 8 attempts".into(),
    ))
}
