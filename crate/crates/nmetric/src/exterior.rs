//! Gram-determinant pseudo n-norms and the simplex pseudo n-metric.
//!
//! In a Hilbert space the norm of the exterior product `x_1 ^ .. ^ x_k` is
//! the square root of the Gram determinant `det(<x_i, x_j>)`: the volume
//! of the parallelepiped spanned by the tuple. That volume is a pseudo
//! k-norm (it vanishes exactly on dependent tuples, is permutation
//! invariant up to sign, scales with `|det A|` under linear recombination,
//! and is multi-sublinear), so the volume of the difference tuple
//! `x_2 - x_1, .., x_n - x_1` is a pseudo n-metric.
//!
//! Everything is computed through Gram determinants; wedge coordinates
//! (dimension `C(m, k)`) are never formed.

use serde::{Deserialize, Serialize};

use crate::axioms::MetricEvaluator;
use crate::error::{Error, Result};
use crate::linalg::{gram_det_sqrt, Matrix};

/// An ordered tuple of `k` real vectors sharing a dimension `m`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "TupleJson", into = "TupleJson")]
pub struct EuclideanTuple {
    dim: usize,
    vectors: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TupleJson {
    dim: usize,
    points: Vec<Vec<f64>>,
}

impl EuclideanTuple {
    pub fn new(dim: usize, vectors: Vec<Vec<f64>>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::usage("tuple needs at least one vector"));
        }
        if vectors.iter().any(|v| v.len() != dim) {
            return Err(Error::usage(format!(
                "all vectors must have dimension {dim}"
            )));
        }
        if vectors.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::usage("vector entries must be finite"));
        }
        Ok(EuclideanTuple { dim, vectors })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }
}

impl TryFrom<TupleJson> for EuclideanTuple {
    type Error = Error;
    fn try_from(j: TupleJson) -> Result<Self> {
        EuclideanTuple::new(j.dim, j.points)
    }
}

impl From<EuclideanTuple> for TupleJson {
    fn from(t: EuclideanTuple) -> TupleJson {
        TupleJson {
            dim: t.dim,
            points: t.vectors,
        }
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Matrix of pairwise inner products `G[i][l] = <x_i, x_l>`.
pub fn gram_matrix(t: &EuclideanTuple) -> Matrix {
    let k = t.len();
    let mut g = Matrix::zeros(k, k);
    for i in 0..k {
        for l in i..k {
            let v = dot(&t.vectors[i], &t.vectors[l]);
            g.set(i, l, v);
            g.set(l, i, v);
        }
    }
    g
}

/// `|| x_1 ^ .. ^ x_k || = det(<x_i, x_j>)^{1/2}`: the volume of the
/// spanned parallelepiped. Zero exactly at linear dependence (within the
/// Gram pivot clamping threshold); `k > m` short-circuits to zero since
/// the tuple is necessarily dependent.
pub fn wedge_norm(t: &EuclideanTuple) -> Result<f64> {
    if t.len() > t.dim() {
        return Ok(0.0);
    }
    gram_det_sqrt(&gram_matrix(t))
}

/// Applies the induced map of a matrix `A` to the tuple:
/// `(A_X x)_j = sum_i A[i][j] x_i`.
fn apply_recombination(a: &Matrix, t: &EuclideanTuple) -> EuclideanTuple {
    let n = t.len();
    let mut out = vec![vec![0.0; t.dim()]; n];
    for j in 0..n {
        for i in 0..n {
            let c = a.get(i, j);
            if c == 0.0 {
                continue;
            }
            for (slot, x) in out[j].iter_mut().zip(&t.vectors[i]) {
                *slot += c * x;
            }
        }
    }
    EuclideanTuple::new(t.dim(), out).expect("shape preserved")
}

/// Residual of the determinant transformation rule
/// `||A_X(x_1..x_n)|| = |det A| * ||(x_1..x_n)||`; a pseudo n-norm is a
/// volume form, so this should vanish up to roundoff.
pub fn det_rule_margin(a: &Matrix, t: &EuclideanTuple) -> Result<f64> {
    if !a.is_square() || a.rows() != t.len() {
        return Err(Error::usage(format!(
            "need an n x n matrix for an n-tuple; got {}x{} and n={}",
            a.rows(),
            a.cols(),
            t.len()
        )));
    }
    let transformed = apply_recombination(a, t);
    let lhs = wedge_norm(&transformed)?;
    let rhs = a.det()?.abs() * wedge_norm(t)?;
    Ok((lhs - rhs).abs())
}

/// Margin of the generalized Hadamard inequality for the split after
/// position `j` (1-based, `1 <= j <= k-1`):
/// `||x_1 ^..^ x_j|| * ||x_{j+1} ^..^ x_k|| - ||x_1 ^..^ x_k|| >= 0`.
pub fn hadamard_margin(t: &EuclideanTuple, j: usize) -> Result<f64> {
    let k = t.len();
    if j < 1 || j >= k {
        return Err(Error::usage(format!(
            "split index must satisfy 1 <= j <= {}",
            k - 1
        )));
    }
    let head = EuclideanTuple::new(t.dim(), t.vectors[..j].to_vec())?;
    let tail = EuclideanTuple::new(t.dim(), t.vectors[j..].to_vec())?;
    let product = wedge_norm(&head)? * wedge_norm(&tail)?;
    Ok(product - wedge_norm(t)?)
}

/// The simplex pseudo n-metric: volume of the parallelepiped spanned by
/// `x_2 - x_1, .., x_n - x_1` (equivalently `(n-1)!` times the simplex
/// volume). Zero exactly when those differences are linearly dependent,
/// which for `n = 3` gives `||v-u|| ||w-u|| |sin(angle)|`.
pub fn d_simplex(x: &EuclideanTuple) -> Result<f64> {
    if x.len() < 2 {
        return Err(Error::usage("simplex metric needs at least two points"));
    }
    let diffs: Vec<Vec<f64>> = x.vectors()[1..]
        .iter()
        .map(|v| v.iter().zip(&x.vectors()[0]).map(|(a, b)| a - b).collect())
        .collect();
    wedge_norm(&EuclideanTuple::new(x.dim(), diffs)?)
}

/// [`MetricEvaluator`] wrapper for the simplex metric on raw coordinate
/// vectors.
#[derive(Debug, Clone)]
pub struct SimplexMetric {
    n: usize,
    dim: usize,
    label: String,
}

impl SimplexMetric {
    pub fn new(n: usize, dim: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::usage("arity must be at least 2"));
        }
        Ok(SimplexMetric {
            n,
            dim,
            label: format!("simplex(n={n}, m={dim})"),
        })
    }
}

impl MetricEvaluator for SimplexMetric {
    type Point = Vec<f64>;

    fn arity(&self) -> usize {
        self.n
    }

    fn evaluate(&self, tuple: &[Vec<f64>]) -> Result<f64> {
        d_simplex(&EuclideanTuple::new(self.dim, tuple.to_vec())?)
    }

    fn label(&self) -> &str {
        &self.label
    }
}
